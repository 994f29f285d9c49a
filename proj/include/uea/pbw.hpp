#ifndef UEA_PBW_HPP
#define UEA_PBW_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uea/monomial.hpp"
#include "uea/sym.hpp"

namespace uea {

struct PbwTag;
/// Normal-form monomial of U(g); factors ascend in the generator order.
using PbwMonomial = BasicMonomial<PbwTag>;
using UeaElement = LinearCombination<PbwMonomial>;

/// PBW arithmetic in U(g) for a current or loop algebra.
///
/// Products are computed by right-multiplying normal-form monomials by one
/// generator at a time, using
///   e_b e_a = (-1)^{|a||b|} e_a e_b + [e_b, e_a]   (b > a)
///   e e     = (1/2) [e, e]                         (e odd)
/// Both the generator-pair brackets and the monomial-times-generator
/// products are memoized. The caches are not synchronized: give each thread
/// its own Envelope (see replica()).
class Envelope {
 public:
  explicit Envelope(CurrentAlgebra g) : g_{std::move(g)} {}

  /// Same algebra, empty caches.
  Envelope replica() const { return Envelope{g_}; }

  const CurrentAlgebra& algebra() const noexcept { return g_; }
  const AlgebraPresentation& presentation() const noexcept { return g_.presentation(); }
  Field field() const noexcept { return g_.field(); }

  UeaElement one() const { return UeaElement{PbwMonomial::unit(), Scalar::one(field())}; }
  UeaElement scalar(const Scalar& c) const { return UeaElement{PbwMonomial::unit(), c}; }
  UeaElement generator(const GeneratorId& a) const;
  /// Degree-one embedding of g into U(g).
  UeaElement lift(const GVector& v) const;

  /// Throws PresentationMismatch when an operand uses generators or
  /// coefficients foreign to this algebra.
  UeaElement multiply(const UeaElement& u, const UeaElement& v) const;
  /// uv - (-1)^{|u||v|} vu, extended bilinearly over parity components.
  UeaElement supercommutator(const UeaElement& u, const UeaElement& v) const;
  UeaElement ad_generator(const GeneratorId& a, const UeaElement& u) const;
  UeaElement power(const UeaElement& u, unsigned k) const;
  /// u^p; requires prime characteristic.
  UeaElement p_power(const UeaElement& u) const;

  std::optional<Parity> parity_of(const UeaElement& u) const;

  /// Largest filtration degree over the terms (e_{ir} has degree r + 1).
  /// Current variant only; ZeroElement for 0.
  int filt_degree(const UeaElement& u) const;
  /// Image in S(g) of the top filtration component.
  SymElement gr_leading(const UeaElement& u) const;

  std::string format(const UeaElement& u) const { return format_element(g_, u); }
  /// Accepts factors in any order and straightens them.
  UeaElement parse(std::string_view text) const;

  std::size_t cache_size() const noexcept { return product_cache_.size(); }

 private:
  void require_compatible(const UeaElement& u) const;
  const GVector& pair_bracket(const GeneratorId& a, const GeneratorId& b) const;
  /// Normal form of m * e_g.
  const UeaElement& times_generator(const PbwMonomial& m, const GeneratorId& g) const;
  UeaElement times_generator(const UeaElement& u, const GeneratorId& g) const;
  UeaElement monomial_product(const PbwMonomial& a, const PbwMonomial& b) const;

  CurrentAlgebra g_;
  mutable std::map<std::pair<GeneratorId, GeneratorId>, GVector> swap_table_;
  mutable std::map<std::pair<PbwMonomial, GeneratorId>, UeaElement> product_cache_;
};

/// Normal-form monomials with deg_x = w.xdeg inside the window, listed by
/// length then lexicographically.
std::vector<PbwMonomial> enumerate_pbw_basis(const GradedWindow& w, const CurrentAlgebra& g);

}  // namespace uea

#endif  // UEA_PBW_HPP
