#ifndef UEA_ASSEMBLY_HPP
#define UEA_ASSEMBLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "uea/linear_combination.hpp"
#include "uea/parallel.hpp"
#include "uea/sparse_matrix.hpp"

namespace uea {

/// Builds the stacked action matrix whose column c holds the images of basis
/// element c under every test operator t. Rows are indexed by (t, target
/// key) in sorted order, so the matrix does not depend on thread scheduling.
///
/// `make_worker()` is called once per thread and must return a callable
/// `LinearCombination<Key>(std::size_t t, std::size_t c)`; workers are never
/// shared between threads.
template <class Key, class WorkerFactory>
SparseMatrix assemble_action_matrix(Field field, std::size_t ncols, std::size_t ntests, WorkerFactory make_worker,
                                    Exec exec) {
  std::vector<LinearCombination<Key>> images(ncols * ntests);
  const auto count = static_cast<std::int64_t>(ncols);
  const bool parallel = exec == Exec::Parallel && ncols > 1;

#pragma omp parallel if (parallel)
  {
    auto worker = make_worker();
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      auto c = static_cast<std::size_t>(i);
      for (std::size_t t = 0; t < ntests; ++t) images[c * ntests + t] = worker(t, c);
    }
  }

  std::map<std::pair<std::size_t, Key>, std::size_t> row_of;
  for (std::size_t c = 0; c < ncols; ++c)
    for (std::size_t t = 0; t < ntests; ++t)
      for (const auto& [key, coeff] : images[c * ntests + t]) row_of.emplace(std::pair{t, key}, 0);
  std::size_t next = 0;
  for (auto& [key, row] : row_of) row = next++;

  SparseMatrix m(field, row_of.size(), ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (std::size_t t = 0; t < ntests; ++t)
      for (const auto& [key, coeff] : images[c * ntests + t]) m.set(row_of.at({t, key}), c, coeff);
  return m;
}

/// Turns kernel coordinate vectors back into elements of the window span.
template <class Key>
std::vector<LinearCombination<Key>> combine_basis(const std::vector<Vector>& coords, const std::vector<Key>& basis) {
  std::vector<LinearCombination<Key>> out;
  out.reserve(coords.size());
  for (const auto& v : coords) {
    LinearCombination<Key> e;
    for (std::size_t c = 0; c < basis.size(); ++c) e.add(basis[c], v[c]);
    out.push_back(std::move(e));
  }
  return out;
}

/// Coordinates of `u` in `basis`; false if `u` has support outside it.
template <class Key>
bool coordinates(const LinearCombination<Key>& u, const std::map<Key, std::size_t>& index, Field field, Vector& out) {
  out.assign(index.size(), Scalar::zero(field));
  for (const auto& [k, c] : u) {
    auto it = index.find(k);
    if (it == index.end()) return false;
    out[it->second] = c;
  }
  return true;
}

/// Counts exponent patterns over weighted generators: every exponent vector
/// whose weighted x-degree equals `target` and whose total cost is at most
/// `budget`. Costs must be positive.
struct WeightedGenerator {
  int xdeg;
  int cost;
  unsigned max_exp = ~0u;
};

std::vector<std::vector<unsigned>> enumerate_patterns(const std::vector<WeightedGenerator>& gens, int target, int budget);

}  // namespace uea

#endif  // UEA_ASSEMBLY_HPP
