#include "uea/pbw.hpp"

#include <limits>

namespace uea {

UeaElement Envelope::generator(const GeneratorId& a) const {
  g_.check(a);
  return UeaElement{PbwMonomial::of(a), Scalar::one(field())};
}

UeaElement Envelope::lift(const GVector& v) const {
  UeaElement out;
  for (const auto& [a, c] : v) {
    g_.check(a);
    out.add(PbwMonomial::of(a), c);
  }
  return out;
}

void Envelope::require_compatible(const UeaElement& u) const {
  for (const auto& [m, c] : u) {
    if (c.field() != field())
      throw Error(Errc::PresentationMismatch, "coefficient over " + c.field().to_string() + " in U over " + field().to_string());
    for (const auto& f : m.factors) {
      if (f.gen.i >= presentation().dim() || (g_.variant() == Variant::Current && f.gen.r < 0))
        throw Error(Errc::PresentationMismatch, "generator outside " + presentation().name() + " " +
                                                    std::string(variant_name(g_.variant())));
      if (f.exp == 0 || (is_odd(g_.parity(f.gen)) && f.exp > 1))
        throw Error(Errc::PresentationMismatch, "monomial is not in PBW normal form");
    }
  }
}

const GVector& Envelope::pair_bracket(const GeneratorId& a, const GeneratorId& b) const {
  auto key = std::pair{a, b};
  auto it = swap_table_.find(key);
  if (it != swap_table_.end()) return it->second;
  return swap_table_.emplace(key, g_.gen_bracket(a, b)).first->second;
}

UeaElement Envelope::times_generator(const UeaElement& u, const GeneratorId& g) const {
  UeaElement out;
  for (const auto& [m, c] : u) out.add_scaled(times_generator(m, g), c);
  return out;
}

const UeaElement& Envelope::times_generator(const PbwMonomial& m, const GeneratorId& g) const {
  auto key = std::pair{m, g};
  if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;

  const Scalar one = Scalar::one(field());
  UeaElement result;
  if (m.is_unit()) {
    result.add(PbwMonomial::of(g), one);
  } else {
    const Factor& last = m.factors.back();
    PbwMonomial prefix = m;
    if (--prefix.factors.back().exp == 0) prefix.factors.pop_back();

    if (last.gen < g) {
      PbwMonomial n = m;
      n.factors.push_back({g, 1});
      result.add(std::move(n), one);
    } else if (last.gen == g) {
      if (!is_odd(g_.parity(g))) {
        PbwMonomial n = m;
        ++n.factors.back().exp;
        result.add(std::move(n), one);
      } else {
        // e e = (1/2)[e, e]
        const Scalar half = Scalar{field(), 2L}.inverse();
        for (const auto& [h, c] : pair_bracket(g, g)) result.add_scaled(times_generator(prefix, h), c * half);
      }
    } else {
      // prefix * t * g = sign * (prefix * g) * t + prefix * [t, g]
      const GeneratorId t = last.gen;
      const Scalar sign = koszul_negative(g_.parity(t), g_.parity(g)) ? -one : one;
      UeaElement moved = times_generator(prefix, g);
      result.add_scaled(times_generator(moved, t), sign);
      for (const auto& [h, c] : pair_bracket(t, g)) result.add_scaled(times_generator(prefix, h), c);
    }
  }
  return product_cache_.emplace(std::move(key), std::move(result)).first->second;
}

UeaElement Envelope::monomial_product(const PbwMonomial& a, const PbwMonomial& b) const {
  UeaElement cur{a, Scalar::one(field())};
  for (const auto& f : b.factors)
    for (unsigned k = 0; k < f.exp; ++k) cur = times_generator(cur, f.gen);
  return cur;
}

UeaElement Envelope::multiply(const UeaElement& u, const UeaElement& v) const {
  require_compatible(u);
  require_compatible(v);
  UeaElement out;
  for (const auto& [a, c] : u)
    for (const auto& [b, d] : v) out.add_scaled(monomial_product(a, b), c * d);
  return out;
}

namespace {

std::pair<UeaElement, UeaElement> split_parity(const UeaElement& u, const CurrentAlgebra& g) {
  UeaElement even, odd;
  for (const auto& [m, c] : u) (is_odd(m.parity(g)) ? odd : even).add(m, c);
  return {even, odd};
}

}  // namespace

UeaElement Envelope::supercommutator(const UeaElement& u, const UeaElement& v) const {
  auto [u0, u1] = split_parity(u, g_);
  auto [v0, v1] = split_parity(v, g_);
  UeaElement out;
  auto part = [&](const UeaElement& x, const UeaElement& y, bool both_odd) {
    if (x.is_zero() || y.is_zero()) return;
    out += multiply(x, y);
    if (both_odd) {
      out += multiply(y, x);
    } else {
      out -= multiply(y, x);
    }
  };
  part(u0, v0, false);
  part(u0, v1, false);
  part(u1, v0, false);
  part(u1, v1, true);
  return out;
}

UeaElement Envelope::ad_generator(const GeneratorId& a, const UeaElement& u) const {
  return supercommutator(generator(a), u);
}

UeaElement Envelope::power(const UeaElement& u, unsigned k) const {
  UeaElement out = one();
  for (unsigned i = 0; i < k; ++i) out = multiply(out, u);
  return out;
}

UeaElement Envelope::p_power(const UeaElement& u) const {
  if (field().is_rational()) throw Error(Errc::MalformedInput, "p_power needs prime characteristic");
  return power(u, presentation().characteristic());
}

std::optional<Parity> Envelope::parity_of(const UeaElement& u) const {
  std::optional<Parity> p;
  for (const auto& [m, c] : u) {
    Parity q = m.parity(g_);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::Even);
}

int Envelope::filt_degree(const UeaElement& u) const {
  if (g_.variant() != Variant::Current)
    throw Error(Errc::LoopVariantUnsupported, "the filtration is defined for current algebras only");
  if (u.is_zero()) throw Error(Errc::ZeroElement, "filtration degree of 0");
  int best = std::numeric_limits<int>::min();
  for (const auto& [m, c] : u) best = std::max(best, m.filt_degree());
  return best;
}

SymElement Envelope::gr_leading(const UeaElement& u) const {
  const int top = filt_degree(u);
  SymElement out;
  for (const auto& [m, c] : u)
    if (m.filt_degree() == top) out.add(SymMonomial{m.factors}, c);
  return out;
}

UeaElement Envelope::parse(std::string_view text) const {
  UeaElement out;
  for (const auto& t : parse_terms(g_, text)) {
    UeaElement term = scalar(t.coeff);
    for (const auto& [gen, exp] : t.word)
      for (unsigned k = 0; k < exp; ++k) term = times_generator(term, gen);
    out += term;
  }
  return out;
}

std::vector<PbwMonomial> enumerate_pbw_basis(const GradedWindow& w, const CurrentAlgebra& g) {
  std::vector<PbwMonomial> out;
  for (auto& f : enumerate_window_factors(w, g)) out.push_back(PbwMonomial{std::move(f)});
  return out;
}

}  // namespace uea
