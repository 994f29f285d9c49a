#include "uea/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "uea/sparse_matrix.hpp"

namespace uea {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::string one_based(const std::vector<Index>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
  return s + ")";
}

void check_vector(const LVector& v, std::size_t n, Field f, const std::string& where) {
  for (const auto& [k, c] : v) {
    if (k >= n) throw Error(Errc::MalformedInput, where + ": basis index " + std::to_string(k + 1) + " out of range");
    if (c.field() != f) throw Error(Errc::FieldMismatch, where + ": coefficient over " + c.field().to_string());
  }
}

LVector scaled_sign(const LVector& v, bool negate) { return negate ? -v : v; }

}  // namespace

AlgebraPresentation::AlgebraPresentation(PresentationData data) : data_{std::move(data)} {
  const std::size_t n = data_.basis.size();
  if (n == 0) throw Error(Errc::MalformedInput, "empty basis");
  if (data_.parity.size() != n) throw Error(Errc::MalformedInput, "parity list length differs from basis length");
  std::set<std::string> names;
  for (const auto& b : data_.basis) {
    if (!valid_name(b)) throw Error(Errc::MalformedInput, "invalid basis name '" + b + "'");
    if (!names.insert(b).second) throw Error(Errc::MalformedInput, "duplicate basis name '" + b + "'");
  }

  std::map<std::pair<Index, Index>, const LVector*> supplied;
  for (const auto& rec : data_.brackets) {
    if (rec.i >= n || rec.j >= n)
      throw Error(Errc::MalformedInput, "bracket record (" + std::to_string(rec.i + 1) + "," + std::to_string(rec.j + 1) + ") out of range");
    check_vector(rec.terms, n, data_.field, "bracket record");
    if (!supplied.emplace(std::pair{rec.i, rec.j}, &rec.terms).second)
      throw Error(Errc::MalformedInput, "duplicate bracket record " + one_based({rec.i, rec.j}));
  }
  if (data_.pmap) {
    std::set<Index> seen;
    for (const auto& rec : *data_.pmap) {
      if (rec.i >= n) throw Error(Errc::MalformedInput, "pmap index " + std::to_string(rec.i + 1) + " out of range");
      if (!seen.insert(rec.i).second) throw Error(Errc::MalformedInput, "duplicate pmap record " + std::to_string(rec.i + 1));
      check_vector(rec.value, n, data_.field, "pmap record");
    }
  }
  if (data_.center_ids) {
    std::set<Index> seen;
    for (auto j : *data_.center_ids) {
      if (j >= n) throw Error(Errc::MalformedInput, "center id " + std::to_string(j + 1) + " out of range");
      if (!seen.insert(j).second) throw Error(Errc::MalformedInput, "duplicate center id " + std::to_string(j + 1));
    }
  }

  table_.assign(n * n, LVector{});
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const bool negate_sign = !koszul_negative(parity(i), parity(j));  // a_ji = -(-1)^{|i||j|} a_ij
      if (auto it = supplied.find({i, j}); it != supplied.end()) {
        table_[i * n + j] = *it->second;
      } else if (auto jt = supplied.find({j, i}); jt != supplied.end()) {
        table_[i * n + j] = scaled_sign(*jt->second, negate_sign);
      }
      if (i != j) table_[j * n + i] = scaled_sign(table_[i * n + j], negate_sign);
    }
  }
}

bool AlgebraPresentation::is_super() const noexcept {
  return std::any_of(data_.parity.begin(), data_.parity.end(), [](Parity p) { return is_odd(p); });
}

std::optional<Index> AlgebraPresentation::index_of(std::string_view name) const {
  for (Index i = 0; i < dim(); ++i)
    if (data_.basis[i] == name) return i;
  return std::nullopt;
}

LVector AlgebraPresentation::bracket(const LVector& x, const LVector& y) const {
  LVector out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.add_scaled(bracket(i, j), a * b);
  return out;
}

const LVector* AlgebraPresentation::pmap(Index i) const {
  if (!data_.pmap) return nullptr;
  for (const auto& rec : *data_.pmap)
    if (rec.i == i) return &rec.value;
  return nullptr;
}

bool AlgebraPresentation::is_marked_central(Index i) const {
  return data_.center_ids && std::find(data_.center_ids->begin(), data_.center_ids->end(), i) != data_.center_ids->end();
}

DenseMatrix AlgebraPresentation::ad_matrix(const LVector& x) const {
  DenseMatrix m(field(), dim(), dim());
  for (Index j = 0; j < dim(); ++j)
    for (const auto& [i, a] : x)
      for (const auto& [k, c] : bracket(i, j)) m(k, j) += a * c;
  return m;
}

std::optional<Parity> AlgebraPresentation::parity_of(const LVector& x) const {
  std::optional<Parity> p;
  for (const auto& [i, c] : x) {
    if (p && *p != parity(i)) return std::nullopt;
    p = parity(i);
  }
  return p.value_or(Parity::Even);
}

AlgebraPresentation AlgebraPresentation::canonical() const {
  PresentationData d = data_;
  d.brackets.clear();
  for (Index i = 0; i < dim(); ++i)
    for (Index j = i; j < dim(); ++j) {
      if (i == j && !is_odd(parity(i))) continue;
      if (!bracket(i, j).is_zero()) d.brackets.push_back({i, j, bracket(i, j)});
    }
  if (d.pmap) std::sort(d.pmap->begin(), d.pmap->end(), [](const auto& a, const auto& b) { return a.i < b.i; });
  if (d.center_ids) std::sort(d.center_ids->begin(), d.center_ids->end());
  return AlgebraPresentation{std::move(d)};
}

bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.name() != b.name() || a.field() != b.field() || a.data_.basis != b.data_.basis || a.data_.parity != b.data_.parity)
    return false;
  if (a.table_ != b.table_) return false;
  auto pm = [](const AlgebraPresentation& p) {
    std::map<Index, LVector> m;
    if (p.data_.pmap)
      for (const auto& r : *p.data_.pmap) m[r.i] = r.value;
    return std::optional{m};
  };
  if (a.has_pmap() != b.has_pmap() || pm(a) != pm(b)) return false;
  auto ids = [](const AlgebraPresentation& p) {
    auto c = p.center_ids();
    if (c) std::sort(c->begin(), c->end());
    return c;
  };
  return ids(a) == ids(b);
}

std::string_view axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::SkewSymmetry: return "skew-symmetry";
    case Axiom::Alternating: return "alternating";
    case Axiom::Jacobi: return "jacobi";
    case Axiom::ParityConsistency: return "parity-consistency";
    case Axiom::OddCubic: return "odd-cubic";
    case Axiom::SuperInCharTwo: return "super-in-char-2";
    case Axiom::PMapDomain: return "pmap-domain";
    case Axiom::PMapParity: return "pmap-parity";
    case Axiom::Restrictedness: return "restrictedness";
    case Axiom::CenterIds: return "center-ids";
  }
  return "unknown";
}

bool ValidationReport::has(Axiom a) const { return first(a) != nullptr; }

const Violation* ValidationReport::first(Axiom a) const {
  for (const auto& v : violations)
    if (v.axiom == a) return &v;
  return nullptr;
}

ValidationReport validate_presentation(const AlgebraPresentation& pres) {
  ValidationReport report;
  const std::size_t n = pres.dim();
  const Field f = pres.field();
  auto fail = [&](Axiom a, std::vector<Index> w, std::string msg) {
    msg = std::string(axiom_name(a)) + (w.empty() ? "" : " fails at " + one_based(w)) + (msg.empty() ? "" : ": " + msg);
    report.violations.push_back({a, std::move(w), std::move(msg)});
  };

  if (pres.is_super() && f.characteristic() == 2)
    fail(Axiom::SuperInCharTwo, {}, "superalgebras require characteristic != 2");

  // (a) records supplied in both orders must agree.
  std::map<std::pair<Index, Index>, const LVector*> supplied;
  for (const auto& rec : pres.data().brackets) supplied[{rec.i, rec.j}] = &rec.terms;
  for (const auto& [key, terms] : supplied) {
    auto [i, j] = key;
    if (i <= j) continue;
    auto other = supplied.find({j, i});
    if (other == supplied.end()) continue;
    LVector expected = koszul_negative(pres.parity(i), pres.parity(j)) ? *other->second : -*other->second;
    LVector diff = *terms - expected;
    if (!diff.is_zero()) fail(Axiom::SkewSymmetry, {i, j, diff.begin()->first}, "a_ijk != -(-1)^{|i||j|} a_jik");
  }

  // (b) [e, e] = 0 for even e, independently of the characteristic.
  for (Index i = 0; i < n; ++i)
    if (!is_odd(pres.parity(i)) && !pres.bracket(i, i).is_zero())
      fail(Axiom::Alternating, {i, i, pres.bracket(i, i).begin()->first}, "[e,e] != 0 for even e");

  // (d)
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (const auto& [k, c] : pres.bracket(i, j))
        if (pres.parity(k) != pres.parity(i) + pres.parity(j)) {
          fail(Axiom::ParityConsistency, {i, j, k}, "target parity differs from |i|+|j|");
          break;
        }

  // (c) (-1)^{|i||k|}[e_i,[e_j,e_k]] + (-1)^{|j||i|}[e_j,[e_k,e_i]] + (-1)^{|k||j|}[e_k,[e_i,e_j]] = 0
  const Scalar one = Scalar::one(f);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        LVector sum;
        auto term = [&](Index a, Index b, Index c) {
          LVector inner = pres.bracket(b, c);
          LVector outer = pres.bracket(LVector{a, one}, inner);
          sum.add_scaled(outer, koszul_negative(pres.parity(a), pres.parity(c)) ? -one : one);
        };
        term(i, j, k);
        term(j, k, i);
        term(k, i, j);
        if (!sum.is_zero()) fail(Axiom::Jacobi, {i, j, k}, "super Jacobi identity");
      }

  // (e)
  if (f.characteristic() == 3)
    for (Index i = 0; i < n; ++i)
      if (is_odd(pres.parity(i))) {
        LVector cube = pres.bracket(pres.bracket(i, i), LVector{i, one});
        if (!cube.is_zero()) fail(Axiom::OddCubic, {i}, "[[e,e],e] != 0 for odd e");
      }

  if (pres.has_pmap()) {
    if (f.is_rational()) fail(Axiom::PMapDomain, {}, "p-map given in characteristic 0");
    for (const auto& rec : *pres.data().pmap)
      if (is_odd(pres.parity(rec.i))) fail(Axiom::PMapDomain, {rec.i}, "p-map value on an odd basis element");
  }

  if (pres.center_ids()) {
    bool rows_ok = true;
    for (auto j : *pres.center_ids()) {
      if (is_odd(pres.parity(j))) {
        fail(Axiom::CenterIds, {j}, "center id marks an odd element");
        rows_ok = false;
      }
      for (Index i = 0; i < n; ++i)
        if (!pres.bracket(j, i).is_zero()) {
          fail(Axiom::CenterIds, {j, i, pres.bracket(j, i).begin()->first}, "marked central element has a nonzero bracket");
          rows_ok = false;
          break;
        }
    }
    if (rows_ok) {
      auto c = center_basis(pres);
      if (c.size() != pres.center_ids()->size())
        fail(Axiom::CenterIds, {}, "dim C(L) = " + std::to_string(c.size()) + " but " +
                                       std::to_string(pres.center_ids()->size()) + " ids are marked");
    }
  }
  return report;
}

std::vector<LVector> center_basis(const AlgebraPresentation& pres) {
  const std::size_t n = pres.dim();
  SparseMatrix m(pres.field(), n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, c] : pres.bracket(i, j)) m.set(j * n + k, i, c);
  std::vector<LVector> out;
  for (const auto& v : kernel_basis(m)) {
    LVector x;
    for (Index i = 0; i < n; ++i) x.add(i, v[i]);
    out.push_back(std::move(x));
  }
  return out;
}

ValidationReport validate_p_map(const AlgebraPresentation& pres) {
  if (pres.field().is_rational()) throw Error(Errc::MalformedInput, "p-map validation requires prime characteristic");
  if (!pres.has_pmap()) throw Error(Errc::MissingPMap, "presentation '" + pres.name() + "' has no p-map");
  ValidationReport report;
  const std::uint32_t p = pres.characteristic();
  const Scalar one = Scalar::one(pres.field());
  for (Index i = 0; i < pres.dim(); ++i) {
    if (is_odd(pres.parity(i))) continue;
    const LVector* value = pres.pmap(i);
    const std::string nm = pres.basis_name(i);
    if (!value) {
      report.violations.push_back({Axiom::PMapDomain, {i}, "no p-map value for even element " + nm});
      continue;
    }
    if (pres.parity_of(*value) != Parity::Even)
      report.violations.push_back({Axiom::PMapParity, {i}, "p-map value of " + nm + " is not even"});
    if (pres.ad_matrix(LVector{i, one}).pow(p) != pres.ad_matrix(*value))
      report.violations.push_back({Axiom::Restrictedness, {i}, "(ad " + nm + ")^p != ad(" + nm + "^[p])"});
  }
  return report;
}

namespace {

// sum_{k=1}^{p-1} s_k(x, y), where k s_k(x, y) is the coefficient of t^{k-1}
// in ad(t x + y)^{p-1}(x).
LVector jacobson_correction(const AlgebraPresentation& pres, const LVector& x, const LVector& y) {
  const std::uint32_t p = pres.characteristic();
  std::vector<LVector> poly{x};  // coefficient of t^m at index m
  for (std::uint32_t step = 0; step + 1 < p; ++step) {
    std::vector<LVector> next(poly.size() + 1);
    for (std::size_t m = 0; m < poly.size(); ++m) {
      next[m + 1] += pres.bracket(x, poly[m]);
      next[m] += pres.bracket(y, poly[m]);
    }
    poly = std::move(next);
  }
  LVector out;
  for (std::uint32_t k = 1; k < p; ++k) out.add_scaled(poly[k - 1], Scalar{pres.field(), static_cast<long>(k)}.inverse());
  return out;
}

}  // namespace

LVector restricted_power(const AlgebraPresentation& pres, const LVector& x) {
  if (pres.field().is_rational()) throw Error(Errc::MalformedInput, "restricted power requires prime characteristic");
  if (pres.parity_of(x) != Parity::Even) throw Error(Errc::OddGenerator, "restricted power of a non-even element");
  const std::uint32_t p = pres.characteristic();
  LVector partial, power;
  for (const auto& [i, c] : x) {
    const LVector* value = pres.pmap(i);
    if (!value) throw Error(Errc::MissingPMap, "no p-map value for " + pres.basis_name(i));
    LVector term{i, c};
    LVector next = power;
    next.add_scaled(*value, c.pow(p));
    if (!partial.is_zero()) next += jacobson_correction(pres, partial, term);
    power = std::move(next);
    partial += term;
  }
  return power;
}

AlgebraPresentation change_basis(const AlgebraPresentation& pres, const DenseMatrix& rows, std::vector<std::string> names) {
  const std::size_t n = pres.dim();
  if (rows.rows() != n || rows.cols() != n || names.size() != n)
    throw Error(Errc::MalformedInput, "change of basis has the wrong shape");
  auto inv = rows.inverse();
  if (!inv) throw Error(Errc::MalformedInput, "change of basis is singular");

  std::vector<LVector> vecs(n);
  PresentationData d;
  d.name = pres.name();
  d.field = pres.field();
  d.basis = std::move(names);
  for (Index a = 0; a < n; ++a) {
    for (Index i = 0; i < n; ++i) vecs[a].add(i, rows(a, i));
    auto par = pres.parity_of(vecs[a]);
    if (!par) throw Error(Errc::MalformedInput, "new basis vector " + std::to_string(a + 1) + " mixes parities");
    d.parity.push_back(*par);
  }
  auto to_new = [&](const LVector& old) {
    LVector out;
    for (const auto& [i, c] : old)
      for (Index b = 0; b < n; ++b) out.add(b, c * (*inv)(i, b));
    return out;
  };
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) {
      if (a == b && !is_odd(d.parity[a])) continue;
      LVector br = to_new(pres.bracket(vecs[a], vecs[b]));
      if (!br.is_zero()) d.brackets.push_back({a, b, std::move(br)});
    }
  if (pres.has_pmap()) {
    d.pmap.emplace();
    for (Index a = 0; a < n; ++a)
      if (!is_odd(d.parity[a])) d.pmap->push_back({a, to_new(restricted_power(pres, vecs[a]))});
  }
  return AlgebraPresentation{std::move(d)};
}

AdaptedPresentation adapt_basis(const AlgebraPresentation& pres) {
  auto report = validate_presentation(pres);
  if (!report.passed()) throw Error(Errc::ValidationFailed, report.violations.front().message);
  const std::size_t n = pres.dim();
  const Field f = pres.field();
  auto center = center_basis(pres);
  for (const auto& v : center)
    for (const auto& [i, c] : v)
      if (is_odd(pres.parity(i)))
        throw Error(Errc::OddCenter, "C(L) contains an element with odd component " + pres.basis_name(i));

  auto leading_one = [&](Vector v) {
    for (const auto& s : v)
      if (!s.is_zero()) {
        Scalar inv = s.inverse();
        for (auto& x : v) x *= inv;
        break;
      }
    return v;
  };

  std::vector<Vector> rows;
  for (const auto& c : center) {
    Vector v(n, Scalar::zero(f));
    for (const auto& [i, x] : c) v[i] = x;
    rows.push_back(leading_one(std::move(v)));
  }
  const std::size_t cdim = rows.size();

  std::vector<Vector> complement;
  if (cdim > 0) {
    SparseMatrix cm(f, cdim, n);
    for (std::size_t r = 0; r < cdim; ++r)
      for (std::size_t i = 0; i < n; ++i) cm.set(r, i, rows[r][i]);
    for (auto& v : kernel_basis(cm)) complement.push_back(leading_one(std::move(v)));
    std::vector<Vector> all = rows;
    all.insert(all.end(), complement.begin(), complement.end());
    if (span_rank(f, n, all) != n) {
      // Degenerate coordinate form over GF(p): fall back to unit vectors.
      complement.clear();
      auto e = reduced_echelon(cm);
      std::vector<char> pivot(n, 0);
      for (auto c : e.pivot_cols) pivot[c] = 1;
      for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) {
          Vector v(n, Scalar::zero(f));
          v[i] = Scalar::one(f);
          complement.push_back(std::move(v));
        }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      Vector v(n, Scalar::zero(f));
      v[i] = Scalar::one(f);
      complement.push_back(std::move(v));
    }
  }
  rows.insert(rows.end(), complement.begin(), complement.end());

  DenseMatrix change(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) change(a, i) = rows[a][i];

  std::set<std::string> used(pres.data().basis.begin(), pres.data().basis.end());
  std::vector<std::string> names;
  int center_count = 0, other_count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    std::optional<Index> unit;
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!rows[a][i].is_zero()) {
        ++support;
        unit = i;
      }
    if (support == 1 && rows[a][*unit].is_one()) {
      names.push_back(pres.basis_name(*unit));
      continue;
    }
    int& counter = a < cdim ? center_count : other_count;
    std::string base = a < cdim ? "Z" : "H";
    std::string nm = ++counter == 1 ? base : base + std::to_string(counter);
    while (used.count(nm)) nm += "_";
    used.insert(nm);
    names.push_back(nm);
  }

  AlgebraPresentation moved = change_basis(pres, change, std::move(names));
  PresentationData d = moved.data();
  d.center_ids.emplace();
  for (std::size_t j = 0; j < cdim; ++j) d.center_ids->push_back(j);
  return {AlgebraPresentation{std::move(d)}.canonical(), change, cdim};
}

}  // namespace uea
