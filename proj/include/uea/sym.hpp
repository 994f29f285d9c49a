#ifndef UEA_SYM_HPP
#define UEA_SYM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uea/monomial.hpp"
#include "uea/parallel.hpp"

namespace uea {

struct SymTag;
/// Monomial of S(g): polynomial in even generators, exterior in odd ones.
using SymMonomial = BasicMonomial<SymTag>;
using SymElement = LinearCombination<SymMonomial>;

/// The (super)symmetric algebra S(g) with the adjoint action of g extended
/// as superderivations.
class SymAlgebra {
 public:
  explicit SymAlgebra(CurrentAlgebra g) : g_{std::move(g)} {}

  const CurrentAlgebra& algebra() const noexcept { return g_; }
  Field field() const noexcept { return g_.field(); }

  SymElement one() const { return SymElement{SymMonomial::unit(), Scalar::one(field())}; }
  SymElement generator(const GeneratorId& a) const;
  SymElement lift(const GVector& v) const;

  SymElement multiply(const SymElement& f, const SymElement& h) const;
  SymElement power(const SymElement& f, unsigned k) const;

  /// The superderivation extending [e_a, -]. The Koszul sign is positional:
  /// acting on the t-th factor picks up (-1)^{|a| * |factors before t|}.
  SymElement derivation_action(const GeneratorId& a, const SymElement& f) const;

  /// nullopt for mixed parity; zero counts as even.
  std::optional<Parity> parity_of(const SymElement& f) const;

  std::string format(const SymElement& f) const { return format_element(g_, f); }
  /// Factors may be written in any order; signs follow supercommutativity.
  SymElement parse(std::string_view text) const;

  /// Product of two monomials with its Koszul sign; nullopt when an odd
  /// generator would repeat.
  std::optional<std::pair<SymMonomial, bool>> multiply_monomials(const SymMonomial& a, const SymMonomial& b) const;

 private:
  CurrentAlgebra g_;
};

std::vector<SymMonomial> enumerate_sym_basis(const GradedWindow& w, const CurrentAlgebra& g);

/// Basis of {f in window span : derivation_action(e_{is}, f) = 0 for all i
/// and all test degrees s}, in echelon form over the window basis.
std::vector<SymElement> invariant_kernel(const GradedWindow& w, int smax, const SymAlgebra& s, Exec exec = Exec::Parallel);

/// e_{jr} for j in J, and in characteristic p also e_{ir}^p for even i
/// outside J, for r in the window's degree range (0..xdeg or r_range).
/// Throws MissingJ when the presentation carries no center_ids.
std::vector<SymElement> predicted_invariant_generators(const SymAlgebra& s, const GradedWindow& w);

struct InvariantReport {
  GradedWindow window;
  int smax = 0;
  std::size_t pattern_count = 0;
  std::size_t predicted_dim = 0;
  std::size_t computed_dim = 0;
  bool containment = false;
  bool pass = false;
  std::vector<std::string> predicted_basis;
  std::vector<std::string> computed_basis;
};

/// Spans products of the predicted generators inside the window and compares
/// with invariant_kernel. PASS iff the dimensions agree and every product
/// lies in the kernel.
InvariantReport compare_invariants(const GradedWindow& w, int smax, const SymAlgebra& s, Exec exec = Exec::Parallel);

}  // namespace uea

#endif  // UEA_SYM_HPP
