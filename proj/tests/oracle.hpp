// Independent reference computations for the tests. Nothing here uses the
// library's elimination, straightening, enumeration or derivation code; only
// Scalar arithmetic and the raw structure constants of a presentation.
#ifndef UEA_TESTS_ORACLE_HPP
#define UEA_TESTS_ORACLE_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "uea/center.hpp"
#include "uea/pbw.hpp"
#include "uea/sym.hpp"

namespace oracle {

using uea::Field;
using uea::GeneratorId;
using uea::Scalar;

// ---- dense Gaussian elimination with plain field division ----

inline std::size_t rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t kernel_dim(const std::vector<std::vector<Scalar>>& m, std::size_t cols) {
  return cols - rank(m);
}

/// Does `v` lie in the span of `rows`?
inline bool in_span(const std::vector<std::vector<Scalar>>& rows, const std::vector<Scalar>& v) {
  auto with = rows;
  with.push_back(v);
  return rank(with) == rank(rows);
}

// ---- words in the generators e_{ir} ----

using Word = std::vector<GeneratorId>;
using WordElement = std::map<Word, Scalar>;

inline void add(WordElement& e, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.try_emplace(w, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) e.erase(it);
  }
}

inline bool odd(const uea::AlgebraPresentation& p, const GeneratorId& g) { return uea::is_odd(p.parity(g.i)); }

/// Rewrites to PBW normal form by repeatedly fixing the leftmost defect,
/// without any caching.
inline WordElement normalize(const uea::AlgebraPresentation& p, WordElement todo) {
  WordElement done;
  const Scalar half = Scalar{p.field(), 2L}.inverse();
  while (!todo.empty()) {
    auto node = todo.extract(todo.begin());
    const Word w = node.key();
    const Scalar c = node.mapped();
    std::size_t k = 0;
    while (k + 1 < w.size() && (w[k] < w[k + 1] || (w[k] == w[k + 1] && !odd(p, w[k])))) ++k;
    if (k + 1 >= w.size()) {
      add(done, w, c);
      continue;
    }
    const GeneratorId a = w[k], b = w[k + 1];
    auto splice = [&](std::vector<GeneratorId> mid, const Scalar& coeff) {
      Word n(w.begin(), w.begin() + k);
      n.insert(n.end(), mid.begin(), mid.end());
      n.insert(n.end(), w.begin() + k + 2, w.end());
      add(todo, n, coeff);
    };
    if (a == b) {
      for (const auto& [t, s] : p.bracket(a.i, a.i)) splice({{t, a.r + b.r}}, c * s * half);
    } else {
      const bool neg = odd(p, a) && odd(p, b);
      splice({b, a}, neg ? -c : c);
      for (const auto& [t, s] : p.bracket(a.i, b.i)) splice({{t, a.r + b.r}}, c * s);
    }
  }
  return done;
}

inline WordElement multiply(const uea::AlgebraPresentation& p, const WordElement& u, const WordElement& v) {
  WordElement raw;
  for (const auto& [a, c] : u)
    for (const auto& [b, d] : v) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      add(raw, w, c * d);
    }
  return normalize(p, std::move(raw));
}

inline bool word_odd(const uea::AlgebraPresentation& p, const Word& w) {
  bool o = false;
  for (const auto& g : w) o ^= odd(p, g);
  return o;
}

/// [g, b] for a generator and a single word.
inline WordElement commutator(const uea::AlgebraPresentation& p, const GeneratorId& g, const Word& b, const Scalar& one) {
  WordElement raw;
  Word left{g};
  left.insert(left.end(), b.begin(), b.end());
  Word right = b;
  right.push_back(g);
  add(raw, left, one);
  add(raw, right, (odd(p, g) && word_odd(p, b)) ? one : -one);
  return normalize(p, std::move(raw));
}

inline Word expand(const std::vector<uea::Factor>& fs) {
  Word w;
  for (const auto& f : fs)
    for (unsigned e = 0; e < f.exp; ++e) w.push_back(f.gen);
  return w;
}

template <class Tag>
WordElement from_library(const uea::LinearCombination<uea::BasicMonomial<Tag>>& u) {
  WordElement e;
  for (const auto& [m, c] : u) add(e, expand(m.factors), c);
  return e;
}

// ---- brute-force windows ----

/// All sorted words in the window, found by extending sorted words one
/// generator at a time from an explicit list of candidate generators.
inline std::vector<Word> window_words(const uea::AlgebraPresentation& p, const uea::GradedWindow& w) {
  std::vector<GeneratorId> gens;
  int lo = 0, hi = std::max(w.xdeg, 0);
  if (w.variant == uea::Variant::Loop) std::tie(lo, hi) = *w.r_range;
  if (w.variant == uea::Variant::Current) hi = std::max(0, w.filt_max - 1);
  for (uea::Index i = 0; i < p.dim(); ++i)
    for (int r = lo; r <= hi; ++r) gens.push_back({i, r});
  auto budget_ok = [&](const Word& word) {
    if (w.variant == uea::Variant::Loop) return static_cast<int>(word.size()) <= w.len_max;
    int f = 0;
    for (const auto& g : word) f += g.r + 1;
    return f <= w.filt_max;
  };
  std::vector<Word> out, frontier{{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& word : frontier) {
      int d = 0;
      for (const auto& g : word) d += g.r;
      if (d == w.xdeg) out.push_back(word);
      for (const auto& g : gens) {
        if (!word.empty() && (g < word.back() || (g == word.back() && odd(p, g)))) continue;
        Word n = word;
        n.push_back(g);
        if (budget_ok(n)) next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> test_degrees(uea::Variant v, int smax) {
  std::vector<int> out;
  for (int s = v == uea::Variant::Loop ? -smax : 0; s <= smax; ++s) out.push_back(s);
  return out;
}

/// Builds the transposed action matrix (one row per basis element) so that
/// kernel dim = #basis - rank.
template <class Act>
std::size_t action_kernel_dim(const std::vector<Word>& basis, const std::vector<GeneratorId>& tests, Act act) {
  std::map<std::pair<std::size_t, Word>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t t = 0; t < tests.size(); ++t)
      for (const auto& [w, s] : act(tests[t], basis[c])) {
        auto key = std::pair{t, w};
        auto it = row_of.try_emplace(key, row_of.size()).first;
        cols[c].push_back({it->second, s});
      }
  if (basis.empty() || row_of.empty()) return basis.size();
  Field field = Field::rationals();
  for (const auto& col : cols)
    if (!col.empty()) field = col[0].second.field();
  std::vector<std::vector<Scalar>> m(basis.size(), std::vector<Scalar>(row_of.size(), Scalar::zero(field)));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& [r, s] : cols[c]) m[c][r] = s;
  return basis.size() - rank(std::move(m));
}

inline std::vector<GeneratorId> tests_for(const uea::AlgebraPresentation& p, uea::Variant v, int smax) {
  std::vector<GeneratorId> tests;
  for (uea::Index i = 0; i < p.dim(); ++i)
    for (int s : oracle::test_degrees(v, smax)) tests.push_back({i, s});
  return tests;
}

inline std::size_t center_dim(const uea::AlgebraPresentation& p, const uea::GradedWindow& w, int smax) {
  const Scalar one = Scalar::one(p.field());
  return action_kernel_dim(window_words(p, w), tests_for(p, w.variant, smax),
                           [&](const GeneratorId& g, const Word& b) { return commutator(p, g, b, one); });
}

// ---- supersymmetric algebra on sorted words ----

/// Sorts a word by adjacent swaps, tracking the Koszul sign; empty result
/// when an odd generator repeats.
inline std::optional<std::pair<Word, bool>> sym_sort(const uea::AlgebraPresentation& p, Word w) {
  bool neg = false;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j + 1] < w[j]) {
        if (odd(p, w[j]) && odd(p, w[j + 1])) neg = !neg;
        std::swap(w[j], w[j + 1]);
      }
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1] && odd(p, w[j])) return std::nullopt;
  return std::pair{w, neg};
}

inline WordElement sym_action(const uea::AlgebraPresentation& p, const GeneratorId& a, const Word& w) {
  WordElement out;
  bool prefix_odd = false;
  for (std::size_t t = 0; t < w.size(); ++t) {
    const bool sign = odd(p, a) && prefix_odd;
    for (const auto& [k, c] : p.bracket(a.i, w[t].i)) {
      Word n = w;
      n[t] = {k, a.r + w[t].r};
      if (auto sorted = sym_sort(p, n)) add(out, sorted->first, (sign != sorted->second) ? -c : c);
    }
    prefix_odd ^= odd(p, w[t]);
  }
  return out;
}

inline std::size_t invariant_dim(const uea::AlgebraPresentation& p, const uea::GradedWindow& w, int smax) {
  return action_kernel_dim(window_words(p, w), tests_for(p, w.variant, smax),
                           [&](const GeneratorId& g, const Word& b) { return sym_action(p, g, b); });
}

// ---- matrices of ad on L ----

/// (ad x)^k (e_j) by repeated bracketing.
inline uea::LVector ad_power(const uea::AlgebraPresentation& p, uea::Index x, unsigned k, uea::Index j) {
  uea::LVector v{j, Scalar::one(p.field())};
  for (unsigned n = 0; n < k; ++n) {
    uea::LVector next;
    for (const auto& [t, c] : v) next.add_scaled(p.bracket(x, t), c);
    v = std::move(next);
  }
  return v;
}

// ---- random data ----

inline Scalar random_scalar(std::mt19937& rng, Field f) {
  std::uniform_int_distribution<long> d(-3, 3);
  return Scalar{f, d(rng)};
}

}  // namespace oracle

#endif  // UEA_TESTS_ORACLE_HPP
