#include "uea/sym.hpp"

#include <algorithm>
#include <map>

#include "uea/assembly.hpp"
#include "uea/sparse_matrix.hpp"

namespace uea {

SymElement SymAlgebra::generator(const GeneratorId& a) const {
  g_.check(a);
  return SymElement{SymMonomial::of(a), Scalar::one(field())};
}

SymElement SymAlgebra::lift(const GVector& v) const {
  SymElement out;
  for (const auto& [a, c] : v) out.add(SymMonomial::of(a), c);
  return out;
}

std::optional<std::pair<SymMonomial, bool>> SymAlgebra::multiply_monomials(const SymMonomial& a, const SymMonomial& b) const {
  SymMonomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  bool negative = false;
  // Odd factors of b move left past the odd factors of a that sort after them.
  std::size_t odd_a_remaining = 0;
  for (const auto& f : a.factors)
    if (is_odd(g_.parity(f.gen))) ++odd_a_remaining;
  auto x = a.factors.begin(), y = b.factors.begin();
  while (x != a.factors.end() || y != b.factors.end()) {
    if (y == b.factors.end() || (x != a.factors.end() && x->gen < y->gen)) {
      if (is_odd(g_.parity(x->gen))) --odd_a_remaining;
      out.factors.push_back(*x++);
    } else if (x == a.factors.end() || y->gen < x->gen) {
      if (is_odd(g_.parity(y->gen)) && (odd_a_remaining % 2)) negative = !negative;
      out.factors.push_back(*y++);
    } else {
      if (is_odd(g_.parity(x->gen))) return std::nullopt;
      out.factors.push_back({x->gen, x->exp + y->exp});
      ++x;
      ++y;
    }
  }
  return std::pair{std::move(out), negative};
}

SymElement SymAlgebra::multiply(const SymElement& f, const SymElement& h) const {
  SymElement out;
  for (const auto& [a, c] : f)
    for (const auto& [b, d] : h) {
      auto prod = multiply_monomials(a, b);
      if (!prod) continue;
      out.add(prod->first, prod->second ? -(c * d) : c * d);
    }
  return out;
}

SymElement SymAlgebra::power(const SymElement& f, unsigned k) const {
  SymElement out = one();
  for (unsigned i = 0; i < k; ++i) out = multiply(out, f);
  return out;
}

SymElement SymAlgebra::derivation_action(const GeneratorId& a, const SymElement& f) const {
  g_.check(a);
  const bool odd_a = is_odd(g_.parity(a));
  SymElement out;
  for (const auto& [m, coeff] : f) {
    SymMonomial prefix;
    bool prefix_odd = false;
    for (std::size_t t = 0; t < m.factors.size(); ++t) {
      const Factor& fac = m.factors[t];
      SymMonomial rest;
      if (fac.exp > 1) rest.factors.push_back({fac.gen, fac.exp - 1});
      rest.factors.insert(rest.factors.end(), m.factors.begin() + static_cast<std::ptrdiff_t>(t) + 1, m.factors.end());

      Scalar scale = coeff * Scalar{field(), static_cast<long>(fac.exp)};
      if (odd_a && prefix_odd) scale = -scale;
      if (!scale.is_zero()) {
        for (const auto& [h, c] : g_.gen_bracket(a, fac.gen)) {
          auto left = multiply_monomials(prefix, SymMonomial::of(h));
          if (!left) continue;
          auto full = multiply_monomials(left->first, rest);
          if (!full) continue;
          Scalar v = scale * c;
          if (left->second != full->second) v = -v;
          out.add(full->first, v);
        }
      }
      prefix.factors.push_back(fac);
      if (is_odd(g_.parity(fac.gen)) && (fac.exp % 2)) prefix_odd = !prefix_odd;
    }
  }
  return out;
}

std::optional<Parity> SymAlgebra::parity_of(const SymElement& f) const {
  std::optional<Parity> p;
  for (const auto& [m, c] : f) {
    Parity q = m.parity(g_);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::Even);
}

SymElement SymAlgebra::parse(std::string_view text) const {
  SymElement out;
  for (const auto& t : parse_terms(g_, text)) {
    SymElement term{SymMonomial::unit(), t.coeff};
    for (const auto& [gen, exp] : t.word) term = multiply(term, power(generator(gen), exp));
    out += term;
  }
  return out;
}

std::vector<SymMonomial> enumerate_sym_basis(const GradedWindow& w, const CurrentAlgebra& g) {
  std::vector<SymMonomial> out;
  for (auto& f : enumerate_window_factors(w, g)) out.push_back(SymMonomial{std::move(f)});
  return out;
}

std::vector<SymElement> invariant_kernel(const GradedWindow& w, int smax, const SymAlgebra& s, Exec exec) {
  const auto basis = enumerate_sym_basis(w, s.algebra());
  std::vector<GeneratorId> tests;
  for (Index i = 0; i < s.algebra().presentation().dim(); ++i)
    for (int d : test_degrees(w.variant, smax)) tests.push_back({i, d});

  auto make_worker = [&] {
    return [&](std::size_t t, std::size_t c) {
      return s.derivation_action(tests[t], SymElement{basis[c], Scalar::one(s.field())});
    };
  };
  SparseMatrix m = assemble_action_matrix<SymMonomial>(s.field(), basis.size(), tests.size(), make_worker, exec);
  return combine_basis(kernel_basis(m, exec), basis);
}

namespace {

struct InvariantGenerator {
  SymElement element;
  int xdeg;
  int cost;  // filtration degree (current) or length (loop)
};

std::vector<InvariantGenerator> predicted_with_weights(const SymAlgebra& s, const GradedWindow& w) {
  const auto& pres = s.algebra().presentation();
  if (!pres.center_ids()) throw Error(Errc::MissingJ, "presentation '" + pres.name() + "' has no adapted basis");
  w.require_finite();
  const auto p = pres.characteristic();
  int lo = 0, hi = w.xdeg;
  if (w.variant == Variant::Loop) std::tie(lo, hi) = *w.r_range;
  std::vector<InvariantGenerator> out;
  for (Index i = 0; i < pres.dim(); ++i)
    for (int r = lo; r <= hi; ++r) {
      GeneratorId id{i, r};
      const int filt = r + 1;
      const bool loop = w.variant == Variant::Loop;
      if (pres.is_marked_central(i)) {
        out.push_back({s.generator(id), r, loop ? 1 : filt});
      } else if (p > 0 && !is_odd(pres.parity(i))) {
        const int pp = static_cast<int>(p);
        out.push_back({s.power(s.generator(id), p), r * pp, loop ? pp : filt * pp});
      }
    }
  return out;
}

}  // namespace

std::vector<SymElement> predicted_invariant_generators(const SymAlgebra& s, const GradedWindow& w) {
  std::vector<SymElement> out;
  for (auto& g : predicted_with_weights(s, w)) out.push_back(std::move(g.element));
  return out;
}

InvariantReport compare_invariants(const GradedWindow& w, int smax, const SymAlgebra& s, Exec exec) {
  InvariantReport report;
  report.window = w;
  report.smax = smax;

  const auto gens = predicted_with_weights(s, w);
  std::vector<WeightedGenerator> weights;
  for (const auto& g : gens) weights.push_back({g.xdeg, g.cost});
  const int budget = w.variant == Variant::Loop ? w.len_max : w.filt_max;
  const auto patterns = enumerate_patterns(weights, w.xdeg, budget);
  report.pattern_count = patterns.size();

  const auto basis = enumerate_sym_basis(w, s.algebra());
  std::map<SymMonomial, std::size_t> index;
  for (std::size_t c = 0; c < basis.size(); ++c) index.emplace(basis[c], c);

  const auto kernel = invariant_kernel(w, smax, s, exec);
  report.computed_dim = kernel.size();
  for (const auto& k : kernel) report.computed_basis.push_back(s.format(k));

  SparseMatrix km(s.field(), kernel.size(), basis.size());
  Vector coords;
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    coordinates(kernel[r], index, s.field(), coords);
    for (std::size_t c = 0; c < coords.size(); ++c) km.set(r, c, coords[c]);
  }
  const RowEchelon kernel_echelon = reduced_echelon(km, exec);

  std::vector<Vector> product_coords;
  bool contained = true;
  for (const auto& pattern : patterns) {
    SymElement prod = s.one();
    for (std::size_t g = 0; g < pattern.size(); ++g)
      if (pattern[g]) prod = s.multiply(prod, s.power(gens[g].element, pattern[g]));
    report.predicted_basis.push_back(s.format(prod));
    if (!coordinates(prod, index, s.field(), coords)) {
      contained = false;
      continue;
    }
    if (!in_row_space(kernel_echelon, coords)) contained = false;
    product_coords.push_back(coords);
  }
  report.predicted_dim = span_rank(s.field(), basis.size(), product_coords, exec);
  report.containment = contained;
  report.pass = contained && report.predicted_dim == report.computed_dim;
  return report;
}

}  // namespace uea
