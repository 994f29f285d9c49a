#include "uea/sparse_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

namespace uea {

void SparseMatrix::check_entry(std::size_t row, std::size_t col, const Scalar& value) const {
  if (row >= rows_ || col >= cols_)
    throw Error(Errc::MalformedInput, "entry (" + std::to_string(row) + ", " + std::to_string(col) +
                                          ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  if (value.field() != field_)
    throw Error(Errc::FieldMismatch, "entry over " + value.field().to_string() + " in matrix over " + field_.to_string());
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Scalar& value) {
  check_entry(row, col, value);
  if (value.is_zero()) {
    entries_.erase({row, col});
  } else {
    entries_.insert_or_assign({row, col}, value);
  }
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Scalar& value) {
  check_entry(row, col, value);
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Scalar SparseMatrix::get(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

Vector SparseMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(Errc::MalformedInput, "vector length does not match column count");
  Vector out(rows_, Scalar::zero(field_));
  for (const auto& [pos, value] : entries_) out[pos.first] += value * v[pos.second];
  return out;
}

namespace {

constexpr std::size_t kParallelRowThreshold = 64;

template <class Value>
using Row = std::vector<std::pair<std::size_t, Value>>;

template <class Value>
const Value* entry_at(const Row<Value>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

struct ModOps {
  using Value = std::uint64_t;
  std::uint64_t p;

  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }

  void normalize(Row<Value>& row) const {
    auto inverse = inv(row.front().second);
    for (auto& [c, v] : row) v = v * inverse % p;
  }

  // target - factor * pivot, where pivot has a leading 1 at `col`.
  Row<Value> combine(const Row<Value>& target, const Row<Value>& pivot, std::size_t col) const {
    std::uint64_t factor = *entry_at(target, col);
    std::uint64_t neg = p - factor;
    Row<Value> out;
    out.reserve(target.size() + pivot.size());
    auto a = target.begin(), b = pivot.begin();
    while (a != target.end() || b != pivot.end()) {
      if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == target.end() || b->first < a->first) {
        out.emplace_back(b->first, neg * b->second % p);
        ++b;
      } else {
        std::uint64_t v = (a->second + neg * b->second) % p;
        if (v) out.emplace_back(a->first, v);
        ++a;
        ++b;
      }
    }
    return out;
  }

  Scalar to_scalar(Field f, const Value& v) const { return Scalar{f, static_cast<long>(v)}; }
};

struct IntOps {
  using Value = mpz_class;

  static void make_primitive(Row<Value>& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
      for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }

  void normalize(Row<Value>& row) const { make_primitive(row); }

  // a * target - b * pivot with a the pivot's leading entry and b the
  // target's entry in the pivot column; the result is made primitive.
  Row<Value> combine(const Row<Value>& target, const Row<Value>& pivot, std::size_t col) const {
    const mpz_class& a = pivot.front().second;
    const mpz_class& b = *entry_at(target, col);
    mpz_class g = gcd(a, b);
    mpz_class sa = a / g, sb = b / g;
    Row<Value> out;
    out.reserve(target.size() + pivot.size());
    auto x = target.begin(), y = pivot.begin();
    while (x != target.end() || y != pivot.end()) {
      if (y == pivot.end() || (x != target.end() && x->first < y->first)) {
        out.emplace_back(x->first, sa * x->second);
        ++x;
      } else if (x == target.end() || y->first < x->first) {
        out.emplace_back(y->first, -sb * y->second);
        ++y;
      } else {
        mpz_class v = sa * x->second - sb * y->second;
        if (v != 0) out.emplace_back(x->first, std::move(v));
        ++x;
        ++y;
      }
    }
    if (!out.empty()) make_primitive(out);
    return out;
  }
};

template <class Ops>
std::vector<std::size_t> gauss_jordan(std::vector<Row<typename Ops::Value>>& rows, const Ops& ops, Exec exec) {
  const std::size_t n = rows.size();
  std::vector<char> is_pivot(n, 0);
  std::vector<std::size_t> pivot_rows;
  const bool parallel = exec == Exec::Parallel && n >= kParallelRowThreshold;

  for (;;) {
    std::size_t best = n, best_col = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < n; ++r) {
      if (is_pivot[r] || rows[r].empty()) continue;
      if (rows[r].front().first < best_col) {
        best_col = rows[r].front().first;
        best = r;
      }
    }
    if (best == n) break;

    ops.normalize(rows[best]);
    is_pivot[best] = 1;
    pivot_rows.push_back(best);
    const auto& pivot = rows[best];

    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
      auto r = static_cast<std::size_t>(i);
      if (r == best || rows[r].empty() || !entry_at(rows[r], best_col)) continue;
      rows[r] = ops.combine(rows[r], pivot, best_col);
    }
  }
  return pivot_rows;
}

}  // namespace

RowEchelon reduced_echelon(const SparseMatrix& m, Exec exec) {
  const Field field = m.field();
  RowEchelon out{field, m.cols(), {}, {}};

  if (!field.is_rational()) {
    ModOps ops{field.characteristic()};
    std::vector<Row<std::uint64_t>> rows(m.rows());
    for (const auto& [pos, value] : m.entries()) rows[pos.first].emplace_back(pos.second, value.residue());
    auto pivots = gauss_jordan(rows, ops, exec);
    for (auto r : pivots) {
      out.pivot_cols.push_back(rows[r].front().first);
      auto& dst = out.rows.emplace_back();
      for (const auto& [c, v] : rows[r]) dst.emplace_back(c, ops.to_scalar(field, v));
    }
    return out;
  }

  IntOps ops;
  std::vector<Row<mpz_class>> rows(m.rows());
  {
    std::vector<Row<mpq_class>> qrows(m.rows());
    for (const auto& [pos, value] : m.entries()) qrows[pos.first].emplace_back(pos.second, value.rational());
    for (std::size_t r = 0; r < qrows.size(); ++r) {
      if (qrows[r].empty()) continue;
      mpz_class scale = 1;
      for (const auto& [c, q] : qrows[r]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
      for (const auto& [c, q] : qrows[r]) rows[r].emplace_back(c, mpz_class{q.get_num() * (scale / q.get_den())});
      IntOps::make_primitive(rows[r]);
    }
  }
  auto pivots = gauss_jordan(rows, ops, exec);
  for (auto r : pivots) {
    out.pivot_cols.push_back(rows[r].front().first);
    const mpz_class& lead = rows[r].front().second;
    auto& dst = out.rows.emplace_back();
    for (const auto& [c, v] : rows[r]) dst.emplace_back(c, Scalar{field, mpq_class{v, lead}});
  }
  return out;
}

std::vector<Vector> kernel_basis(const SparseMatrix& m, Exec exec) {
  const RowEchelon e = reduced_echelon(m, exec);
  const Field field = m.field();
  std::vector<char> pivot(m.cols(), 0);
  for (auto c : e.pivot_cols) pivot[c] = 1;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot[f]) continue;
    Vector v(m.cols(), Scalar::zero(field));
    v[f] = Scalar::one(field);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const auto& row = e.rows[i];
      auto it = std::lower_bound(row.begin(), row.end(), f, [](const auto& x, std::size_t c) { return x.first < c; });
      if (it != row.end() && it->first == f) v[e.pivot_cols[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const SparseMatrix& m, Exec exec) { return reduced_echelon(m, exec).rank(); }

std::size_t span_rank(Field field, std::size_t dim, std::span<const Vector> vectors, Exec exec) {
  SparseMatrix m(field, vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (!vectors[r][c].is_zero()) m.set(r, c, vectors[r][c]);
  return rank(m, exec);
}

bool in_row_space(const RowEchelon& echelon, std::span<const Scalar> v) {
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < echelon.rows.size(); ++i) {
    const Scalar factor = w[echelon.pivot_cols[i]];
    if (factor.is_zero()) continue;
    for (const auto& [c, x] : echelon.rows[i]) w[c] -= factor * x;
  }
  return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace uea
