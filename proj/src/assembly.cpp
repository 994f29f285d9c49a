#include "uea/assembly.hpp"

#include <functional>

namespace uea {

std::vector<std::vector<unsigned>> enumerate_patterns(const std::vector<WeightedGenerator>& gens, int target, int budget) {
  for (const auto& g : gens)
    if (g.cost <= 0) throw Error(Errc::MalformedInput, "pattern enumeration needs positive costs");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> exps(gens.size(), 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t pos, int xdeg, int used) {
    if (pos == gens.size()) {
      if (xdeg == target) out.push_back(exps);
      return;
    }
    rec(pos + 1, xdeg, used);
    for (unsigned e = 1; e <= gens[pos].max_exp; ++e) {
      int u = used + gens[pos].cost * static_cast<int>(e);
      if (u > budget) break;
      exps[pos] = e;
      rec(pos + 1, xdeg + gens[pos].xdeg * static_cast<int>(e), u);
    }
    exps[pos] = 0;
  };
  rec(0, 0, 0);
  return out;
}

}  // namespace uea
