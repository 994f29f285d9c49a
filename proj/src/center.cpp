#include "uea/center.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "uea/assembly.hpp"

namespace uea {

namespace {

std::pair<int, int> degree_range(const GradedWindow& w) {
  if (w.variant == Variant::Loop) {
    w.require_finite();
    return *w.r_range;
  }
  return {0, w.xdeg};
}

std::string lvector_text(const AlgebraPresentation& pres, const LVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + " * " + pres.basis_name(k);
  }
  return s;
}

template <class Tag>
std::vector<Factor> leading_factors(const LinearCombination<BasicMonomial<Tag>>& u, Variant v, std::size_t& count) {
  auto weight = [v](const BasicMonomial<Tag>& m) {
    return v == Variant::Current ? m.filt_degree() : static_cast<int>(m.length());
  };
  int top = -1;
  for (const auto& [m, c] : u) top = std::max(top, weight(m));
  count = 0;
  std::vector<Factor> lead;
  for (const auto& [m, c] : u)
    if (weight(m) == top) {
      ++count;
      lead = m.factors;
    }
  return lead;
}

}  // namespace

std::string describe(const PredictedGenerator& g, const CurrentAlgebra& alg) {
  return std::visit(
      [&](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        const auto& pres = alg.presentation();
        if constexpr (std::is_same_v<K, CentralCurrent>) {
          return alg.format(GeneratorId{k.j, k.r});
        } else {
          GeneratorId id{k.i, k.r};
          std::string s = alg.format(id) + "^" + std::to_string(pres.characteristic());
          const LVector* pm = pres.pmap(k.i);
          if (pm && !pm->is_zero()) s += " - (" + alg.format(alg.p_power_gen(id)) + ")";
          return s;
        }
      },
      g.kind);
}

std::vector<PredictedGenerator> predicted_center_generators(const Envelope& env, const GradedWindow& w) {
  const auto& pres = env.presentation();
  if (!pres.center_ids()) throw Error(Errc::MissingJ, "presentation '" + pres.name() + "' has no adapted basis");
  const auto p = pres.characteristic();
  if (p > 0 && !pres.has_pmap())
    throw Error(Errc::MissingPMap, "presentation '" + pres.name() + "' has no p-map over " + pres.field().to_string());
  const auto [lo, hi] = degree_range(w);
  const bool loop = w.variant == Variant::Loop;
  const int pp = static_cast<int>(p);

  std::vector<PredictedGenerator> out;
  for (Index i = 0; i < pres.dim(); ++i)
    for (int r = lo; r <= hi; ++r) {
      GeneratorId id{i, r};
      if (pres.is_marked_central(i)) {
        out.push_back({CentralCurrent{i, r}, env.generator(id), r, loop ? 1 : r + 1});
      } else if (p > 0 && !is_odd(pres.parity(i))) {
        GVector bracket_power = env.algebra().p_power_gen(id);
        if (loop && std::any_of(bracket_power.begin(), bracket_power.end(),
                                [&](const auto& t) { return t.first.r < lo || t.first.r > hi; }))
          continue;
        UeaElement e = env.p_power(env.generator(id));
        e -= env.lift(bracket_power);
        out.push_back({PCenter{i, r}, std::move(e), r * pp, loop ? pp : pp * (r + 1)});
      }
    }
  return out;
}

Certificate certify_central(const PredictedGenerator& g, const Envelope& env) {
  const auto& pres = env.presentation();
  const auto& alg = env.algebra();
  Certificate cert;
  cert.generator = describe(g, alg);
  auto refuse = [&](const std::string& why) { throw Error(Errc::NotCertifiable, cert.generator + ": " + why); };

  if (const auto* k = std::get_if<CentralCurrent>(&g.kind)) {
    cert.kind = "central-current";
    if (k->j >= pres.dim() || !pres.is_marked_central(k->j)) refuse("basis index is not in J");
    if (!(g.element == env.generator({k->j, k->r}))) refuse("element is not of the predicted shape");
    for (Index i = 0; i < pres.dim(); ++i) {
      const LVector& b = pres.bracket(k->j, i);
      if (!b.is_zero())
        refuse("[" + pres.basis_name(k->j) + ", " + pres.basis_name(i) + "] = " + lvector_text(pres, b) + " != 0");
    }
    cert.statement = "[" + pres.basis_name(k->j) + ", e_i] = 0 for all " + std::to_string(pres.dim()) + " basis elements";
  } else {
    const auto& pc = std::get<PCenter>(g.kind);
    cert.kind = "p-center";
    const auto p = pres.characteristic();
    if (p == 0) refuse("p-center generators need prime characteristic");
    if (pc.i >= pres.dim()) refuse("basis index out of range");
    if (is_odd(pres.parity(pc.i))) refuse("generator is odd");
    if (pres.is_marked_central(pc.i)) refuse("basis index lies in J");
    const LVector* pm = pres.pmap(pc.i);
    if (!pm) refuse("no p-map value");
    UeaElement expected = env.p_power(env.generator({pc.i, pc.r}));
    expected -= env.lift(alg.p_power_gen({pc.i, pc.r}));
    if (!(g.element == expected)) refuse("element is not of the predicted shape");

    const LVector unit{pc.i, Scalar::one(pres.field())};
    const DenseMatrix lhs = pres.ad_matrix(unit).pow(p);
    const DenseMatrix rhs = pres.ad_matrix(*pm);
    for (std::size_t col = 0; col < pres.dim(); ++col)
      for (std::size_t row = 0; row < pres.dim(); ++row)
        if (!(lhs(row, col) == rhs(row, col)))
          refuse("(ad " + pres.basis_name(pc.i) + ")^" + std::to_string(p) + "(" + pres.basis_name(col) +
                 ") != [" + lvector_text(pres, *pm) + ", " + pres.basis_name(col) + "]");
    cert.statement = "(ad " + pres.basis_name(pc.i) + ")^" + std::to_string(p) + " = ad(" + lvector_text(pres, *pm) +
                     ") on the basis of " + pres.name();
  }
  cert.valid = true;
  return cert;
}

std::vector<UeaElement> center_kernel(const GradedWindow& w, int smax, const Envelope& env, Exec exec) {
  const auto basis = enumerate_pbw_basis(w, env.algebra());
  std::vector<GeneratorId> tests;
  for (Index i = 0; i < env.presentation().dim(); ++i)
    for (int d : test_degrees(w.variant, smax)) tests.push_back({i, d});
  const Scalar one = Scalar::one(env.field());

  auto make_worker = [&] {
    return [local = env.replica(), &tests, &basis, one](std::size_t t, std::size_t c) {
      return local.ad_generator(tests[t], UeaElement{basis[c], one});
    };
  };
  SparseMatrix m = assemble_action_matrix<PbwMonomial>(env.field(), basis.size(), tests.size(), make_worker, exec);
  return combine_basis(kernel_basis(m, exec), basis);
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

VerificationReport verify_window(const Envelope& env, const GradedWindow& w, int smax, Exec exec) {
  w.require_finite();
  const auto& alg = env.algebra();
  const Field field = env.field();
  const bool loop = w.variant == Variant::Loop;
  VerificationReport rep;
  rep.window = w;
  rep.smax = smax;
  rep.config_hash = fnv1a_hex(presentation_fingerprint(env.presentation()) + "\n" + w.describe() +
                              "\nsmax=" + std::to_string(smax));

  const auto preds = predicted_center_generators(env, w);
  bool certified = true;
  for (const auto& g : preds) {
    rep.predicted_generators.push_back(describe(g, alg));
    try {
      rep.certificates.push_back(certify_central(g, env));
    } catch (const Error& e) {
      if (e.code() != Errc::NotCertifiable) throw;
      rep.certificates.push_back({describe(g, alg), std::holds_alternative<PCenter>(g.kind) ? "p-center" : "central-current",
                                  e.what(), false});
      certified = false;
    }
  }
  if (loop && env.presentation().characteristic() > 0) {
    const auto [lo, hi] = *w.r_range;
    const auto& pres = env.presentation();
    for (Index i = 0; i < pres.dim(); ++i) {
      if (pres.is_marked_central(i) || is_odd(pres.parity(i)) || !pres.pmap(i)) continue;
      for (int r = lo; r <= hi; ++r) {
        GVector bp = alg.p_power_gen({i, r});
        if (std::any_of(bp.begin(), bp.end(), [&](const auto& t) { return t.first.r < lo || t.first.r > hi; }))
          rep.notes.push_back("p-center generator " + alg.format(GeneratorId{i, r}) + "^" +
                              std::to_string(pres.characteristic()) + " - (" + alg.format(bp) +
                              ") leaves r_range and is not predicted here");
      }
    }
  }

  std::vector<WeightedGenerator> weights;
  for (const auto& g : preds) weights.push_back({g.xdeg, g.cost});
  const auto patterns = enumerate_patterns(weights, w.xdeg, loop ? w.len_max : w.filt_max);
  rep.pattern_count = patterns.size();

  const auto basis = enumerate_pbw_basis(w, alg);
  std::map<PbwMonomial, std::size_t> index;
  for (std::size_t c = 0; c < basis.size(); ++c) index.emplace(basis[c], c);

  const auto kernel = center_kernel(w, smax, env, exec);
  rep.computed_dim = kernel.size();
  for (const auto& z : kernel) rep.computed_basis.push_back(env.format(z));

  SparseMatrix km(field, kernel.size(), basis.size());
  Vector coords;
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    coordinates(kernel[r], index, field, coords);
    for (std::size_t c = 0; c < coords.size(); ++c) km.set(r, c, coords[c]);
  }
  const RowEchelon kernel_echelon = reduced_echelon(km, exec);

  rep.containment = true;
  std::vector<Vector> product_coords;
  std::size_t skipped = 0;
  for (const auto& pattern : patterns) {
    UeaElement prod = env.one();
    for (std::size_t g = 0; g < pattern.size(); ++g)
      if (pattern[g]) prod = env.multiply(prod, env.power(preds[g].element, pattern[g]));
    rep.predicted_basis.push_back(env.format(prod));
    if (!coordinates(prod, index, field, coords)) {
      if (loop) {
        ++skipped;
      } else {
        rep.containment = false;
      }
      continue;
    }
    if (!in_row_space(kernel_echelon, coords)) rep.containment = false;
    product_coords.push_back(coords);
  }
  if (skipped)
    rep.notes.push_back(std::to_string(skipped) + " predicted product(s) have PBW support outside r_range and were not compared");
  rep.predicted_dim = span_rank(field, basis.size(), product_coords, exec);

  if (!loop) {
    SymAlgebra sym{alg};
    const auto invariants = invariant_kernel(w, smax, sym, exec);
    std::map<SymMonomial, std::size_t> sym_index;
    const auto sym_basis = enumerate_sym_basis(w, alg);
    for (std::size_t c = 0; c < sym_basis.size(); ++c) sym_index.emplace(sym_basis[c], c);
    SparseMatrix im(field, invariants.size(), sym_basis.size());
    for (std::size_t r = 0; r < invariants.size(); ++r) {
      coordinates(invariants[r], sym_index, field, coords);
      for (std::size_t c = 0; c < coords.size(); ++c) im.set(r, c, coords[c]);
    }
    const RowEchelon inv_echelon = reduced_echelon(im, exec);
    rep.gr_check = true;
    for (const auto& z : kernel) {
      SymElement lead = env.gr_leading(z);
      rep.gr_leading.push_back(sym.format(lead));
      if (!coordinates(lead, sym_index, field, coords) || !in_row_space(inv_echelon, coords)) rep.gr_check = false;
    }
  } else {
    rep.gr_check = true;
    rep.notes.push_back("gr inclusion not checked: the filtration is defined for current windows only");
  }

  std::set<std::vector<Factor>> leads;
  rep.free_generation = rep.predicted_dim == rep.pattern_count || loop;
  for (const auto& g : preds) {
    std::size_t count = 0;
    auto lead = leading_factors(g.element, w.variant, count);
    if (count != 1 || !leads.insert(lead).second) rep.free_generation = false;
  }
  if (loop && rep.predicted_dim != rep.pattern_count - skipped) rep.free_generation = false;

  const bool sound = certified && rep.containment && rep.gr_check && rep.free_generation;
  if (!sound) {
    rep.verdict = Verdict::Fail;
  } else if (rep.predicted_dim == rep.computed_dim) {
    rep.verdict = Verdict::Pass;
  } else {
    rep.verdict = loop ? Verdict::Inconclusive : Verdict::Fail;
  }
  if (loop)
    rep.notes.push_back("loop window truncated to r in [" + std::to_string(w.r_range->first) + ", " +
                        std::to_string(w.r_range->second) + "]; the x-degree slice is infinite-dimensional");
  return rep;
}

std::vector<GradedWindow> WindowFamily::windows() const {
  std::vector<GradedWindow> out;
  for (int d = xdeg_lo; d <= xdeg_hi; ++d) {
    if (variant == Variant::Current) {
      out.push_back(GradedWindow::current(d, filt_max));
    } else {
      out.push_back({Variant::Loop, d, 0, len_max, r_range});
    }
  }
  return out;
}

std::string_view smax_policy_name(SmaxPolicy p) noexcept {
  switch (p) {
    case SmaxPolicy::Default: return "default";
    case SmaxPolicy::Paranoid: return "paranoid";
    case SmaxPolicy::Fixed: return "fixed";
  }
  return "?";
}

SmaxPolicy parse_smax_policy(std::string_view s) {
  if (s == "default") return SmaxPolicy::Default;
  if (s == "paranoid") return SmaxPolicy::Paranoid;
  throw Error(Errc::ParseError, "unknown smax policy '" + std::string(s) + "'");
}

int default_smax(const GradedWindow& w) {
  if (w.variant == Variant::Current) return std::max(w.xdeg, 0) + 1;
  w.require_finite();
  const int reach = std::max(std::abs(w.r_range->first), std::abs(w.r_range->second));
  return std::max(std::abs(w.xdeg), reach) + 1;
}

int choose_smax(const GradedWindow& w, SmaxPolicy policy, int fixed) {
  switch (policy) {
    case SmaxPolicy::Default: return default_smax(w);
    case SmaxPolicy::Paranoid: return 2 * default_smax(w);
    case SmaxPolicy::Fixed:
      if (fixed < 0) throw Error(Errc::MalformedInput, "smax must be non-negative");
      return fixed;
  }
  return default_smax(w);
}

void apply_stability_check(VerificationReport& rep, const VerificationReport& ref) {
  if (ref.computed_dim != rep.computed_dim) {
    rep.verdict = Verdict::Fail;
    rep.notes.push_back("truncation policy unstable: dim " + std::to_string(ref.computed_dim) + " at smax " +
                        std::to_string(ref.smax) + " vs " + std::to_string(rep.computed_dim) + " at smax " +
                        std::to_string(rep.smax));
  } else {
    rep.notes.push_back("paranoid check: same dim at smax " + std::to_string(ref.smax));
  }
}

std::vector<VerificationReport> verify_theorem(const AlgebraPresentation& pres, const WindowFamily& family,
                                               SmaxPolicy policy, int fixed_smax, Exec exec) {
  const auto report = validate_presentation(pres);
  if (!report.passed())
    throw Error(Errc::ValidationFailed, "presentation '" + pres.name() + "': " + report.violations.front().message);
  if (pres.characteristic() > 0) {
    const auto pm = validate_p_map(pres);
    if (!pm.passed()) throw Error(Errc::ValidationFailed, "p-map of '" + pres.name() + "': " + pm.violations.front().message);
  }
  if (family.variant == Variant::Current && family.xdeg_lo < 0)
    throw Error(Errc::VariantMismatch, "current windows need xdeg >= 0");

  Envelope env{CurrentAlgebra{pres, family.variant}};
  std::vector<VerificationReport> out;
  for (const auto& w : family.windows()) {
    w.require_finite();
    const int smax = choose_smax(w, policy, fixed_smax);
    auto rep = verify_window(env, w, smax, exec);
    if (policy == SmaxPolicy::Paranoid) apply_stability_check(rep, verify_window(env, w, default_smax(w), exec));
    out.push_back(std::move(rep));
  }
  return out;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string presentation_fingerprint(const AlgebraPresentation& pres) {
  const auto canon = pres.canonical();
  std::ostringstream s;
  s << canon.name() << '|' << canon.field().to_string() << '|';
  for (Index i = 0; i < canon.dim(); ++i) s << canon.basis_name(i) << (is_odd(canon.parity(i)) ? ":1," : ":0,");
  s << '|';
  for (const auto& b : canon.data().brackets) s << b.i << ',' << b.j << '=' << lvector_text(canon, b.terms) << ';';
  s << '|';
  if (canon.data().pmap)
    for (const auto& r : *canon.data().pmap) s << r.i << '=' << lvector_text(canon, r.value) << ';';
  s << '|';
  if (canon.center_ids())
    for (Index j : *canon.center_ids()) s << j << ',';
  return s.str();
}

int exit_status(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail) return 1;
  return 0;
}

}  // namespace uea
