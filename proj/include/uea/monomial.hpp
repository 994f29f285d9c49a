#ifndef UEA_MONOMIAL_HPP
#define UEA_MONOMIAL_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uea/current_loop.hpp"

namespace uea {

struct Factor {
  GeneratorId gen;
  unsigned exp = 1;

  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Ordered product of generators with strictly ascending ids and positive
/// exponents. The tag separates PBW monomials in U(g) from monomials of the
/// (super)symmetric algebra S(g); both share this layout.
template <class Tag>
struct BasicMonomial {
  std::vector<Factor> factors;

  static BasicMonomial unit() { return {}; }
  static BasicMonomial of(const GeneratorId& g, unsigned exp = 1) { return {{Factor{g, exp}}}; }

  bool is_unit() const noexcept { return factors.empty(); }

  int deg_x() const noexcept {
    int d = 0;
    for (const auto& f : factors) d += f.gen.r * static_cast<int>(f.exp);
    return d;
  }
  /// Sum of (r + 1) * exponent.
  int filt_degree() const noexcept {
    int d = 0;
    for (const auto& f : factors) d += (f.gen.r + 1) * static_cast<int>(f.exp);
    return d;
  }
  unsigned length() const noexcept {
    unsigned n = 0;
    for (const auto& f : factors) n += f.exp;
    return n;
  }
  Parity parity(const CurrentAlgebra& g) const {
    Parity p = Parity::Even;
    for (const auto& f : factors)
      if (is_odd(g.parity(f.gen)) && (f.exp % 2)) p = p + Parity::Odd;
    return p;
  }

  friend auto operator<=>(const BasicMonomial&, const BasicMonomial&) = default;
};

/// Orders by length first, then lexicographically; used for listing bases.
template <class Tag>
bool graded_less(const BasicMonomial<Tag>& a, const BasicMonomial<Tag>& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a < b;
}

/// All factor lists admissible in the window: x-degree equal to w.xdeg,
/// filtration degree at most filt_max (current) or length at most len_max
/// with every r in r_range (loop), odd generators with exponent at most 1.
/// Sorted by graded_less.
std::vector<std::vector<Factor>> enumerate_window_factors(const GradedWindow& w, const CurrentAlgebra& g);

/// "c * name[r]^k * ..." with " + " between terms; "c" for the unit monomial.
std::string format_factors(const CurrentAlgebra& g, const std::vector<Factor>& factors);

/// One term of a parsed sum: coefficient and the factors as written (not
/// necessarily ordered).
struct ParsedTerm {
  Scalar coeff;
  std::vector<std::pair<GeneratorId, unsigned>> word;
};

/// Parses "c * a[r]^k * b[s] + ... - ..." into terms. ParseError on bad input.
std::vector<ParsedTerm> parse_terms(const CurrentAlgebra& g, std::string_view text);

template <class Tag>
std::string format_element(const CurrentAlgebra& g, const LinearCombination<BasicMonomial<Tag>>& u) {
  if (u.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : u) {
    if (!s.empty()) s += " + ";
    s += c.to_string();
    if (!m.is_unit()) s += " * " + format_factors(g, m.factors);
  }
  return s;
}

}  // namespace uea

#endif  // UEA_MONOMIAL_HPP
