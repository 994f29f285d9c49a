#ifndef UEA_CURRENT_LOOP_HPP
#define UEA_CURRENT_LOOP_HPP

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uea/presentation.hpp"

namespace uea {

enum class Variant { Current, Loop };

std::string_view variant_name(Variant v) noexcept;
/// "current" or "loop"; anything else is a ParseError.
Variant parse_variant(std::string_view s);

/// e_{ir} = e_i (x) x^r. Ordered by basis index, then by r.
struct GeneratorId {
  Index i = 0;
  int r = 0;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

using GVector = LinearCombination<GeneratorId>;

/// Finite slice of U(g) or S(g) with fixed x-degree. Current windows bound
/// the filtration degree sum (r+1); loop windows bound the monomial length
/// and the range of r.
struct GradedWindow {
  Variant variant = Variant::Current;
  int xdeg = 0;
  int filt_max = 0;
  int len_max = 0;
  std::optional<std::pair<int, int>> r_range;

  static GradedWindow current(int xdeg, int filt_max) { return {Variant::Current, xdeg, filt_max, 0, std::nullopt}; }
  static GradedWindow loop(int xdeg, int len_max, int r_lo, int r_hi) {
    return {Variant::Loop, xdeg, 0, len_max, std::pair{r_lo, r_hi}};
  }

  /// Throws InfiniteWindow for a loop window without r_range.
  void require_finite() const;
  /// Compact description, e.g. "current xdeg=1 filt<=3" or "loop xdeg=0 len<=3 r in [-1,1]".
  std::string describe() const;
  bool contains_degree(int r) const;

  friend bool operator==(const GradedWindow&, const GradedWindow&) = default;
};

/// The current algebra L[x] or loop algebra L(x) over a presentation.
/// Copies share the presentation.
class CurrentAlgebra {
 public:
  CurrentAlgebra(std::shared_ptr<const AlgebraPresentation> pres, Variant variant);
  CurrentAlgebra(AlgebraPresentation pres, Variant variant)
      : CurrentAlgebra(std::make_shared<const AlgebraPresentation>(std::move(pres)), variant) {}

  const AlgebraPresentation& presentation() const noexcept { return *pres_; }
  const std::shared_ptr<const AlgebraPresentation>& shared_presentation() const noexcept { return pres_; }
  Variant variant() const noexcept { return variant_; }
  Field field() const noexcept { return pres_->field(); }

  /// Throws MalformedInput for an unknown basis index and VariantMismatch
  /// for r < 0 in the current variant.
  void check(const GeneratorId& a) const;
  Parity parity(const GeneratorId& a) const { return pres_->parity(a.i); }

  /// [e_{ir}, e_{js}] = sum_k a_{ijk} e_{k,r+s}
  GVector gen_bracket(const GeneratorId& a, const GeneratorId& b) const;
  GVector bracket(const GVector& x, const GVector& y) const;
  /// v (x) x^r
  GVector lift(const LVector& v, int r) const;
  /// (e_i (x) x^r)^{[p]} = e_i^{[p]} (x) x^{rp}. Throws OddGenerator or MissingPMap.
  GVector p_power_gen(const GeneratorId& a) const;

  /// "name[r]"
  std::string format(const GeneratorId& a) const;
  std::string format(const GVector& v) const;
  /// Inverse of format(GeneratorId); ParseError on malformed text.
  GeneratorId parse_generator(std::string_view text) const;

  friend bool operator==(const CurrentAlgebra& a, const CurrentAlgebra& b) {
    return a.variant_ == b.variant_ && (a.pres_ == b.pres_ || *a.pres_ == *b.pres_);
  }

 private:
  std::shared_ptr<const AlgebraPresentation> pres_;
  Variant variant_;
};

/// Generators e_{ir} that may occur in monomials of the window, ascending by
/// (i, r): current windows take 0 <= r <= xdeg with r + 1 <= filt_max, loop
/// windows take every r in r_range.
std::vector<GeneratorId> enumerate_generators(const GradedWindow& w, const CurrentAlgebra& g);

/// Degrees s of the test generators e_{is}: 0..smax for current, -smax..smax for loop.
std::vector<int> test_degrees(Variant v, int smax);

}  // namespace uea

#endif  // UEA_CURRENT_LOOP_HPP
