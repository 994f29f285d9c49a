#include "uea/catalog.hpp"

#include <functional>
#include <map>

namespace uea {

namespace {

struct Recipe {
  std::vector<std::string> basis;
  std::vector<Parity> parity;
  // 1-based (i, j, {k, c}...)
  std::vector<std::pair<std::pair<Index, Index>, std::vector<std::pair<Index, long>>>> brackets;
  std::vector<std::pair<Index, std::vector<std::pair<Index, long>>>> pmap;
  std::vector<Index> center;
  bool forbid_char2 = false;
  std::string notes;
};

constexpr Parity E = Parity::Even;
constexpr Parity O = Parity::Odd;

const std::map<std::string, Recipe, std::less<>>& recipes() {
  static const std::map<std::string, Recipe, std::less<>> table{
      {"heisenberg3",
       {{"X", "Y", "Z"}, {E, E, E}, {{{1, 2}, {{3, 1}}}}, {{1, {}}, {2, {}}, {3, {}}}, {3}, false,
        "Heisenberg algebra, [X, Y] = Z; center spanned by Z"}},
      {"sl2",
       {{"e", "h", "f"},
        {E, E, E},
        {{{1, 2}, {{1, -2}}}, {{1, 3}, {{2, 1}}}, {{2, 3}, {{3, -2}}}},
        {{1, {}}, {2, {{2, 1}}}, {3, {}}},
        {},
        true,
        "sl2 with [h, e] = 2e, [h, f] = -2f, [e, f] = h; semisimple, trivial center; e^[p] = f^[p] = 0, h^[p] = h"}},
      {"gl11",
       {{"Z", "H", "E12", "E21"},
        {E, E, O, O},
        {{{2, 3}, {{3, 2}}}, {{2, 4}, {{4, -2}}}, {{3, 4}, {{1, 1}}}},
        {{1, {{1, 1}}}, {2, {{2, 1}}}},
        {1},
        true,
        "gl(1|1) in the adapted basis Z = E11 + E22, H = E11 - E22, E12, E21"}},
      {"abelian1", {{"e"}, {E}, {}, {{1, {}}}, {1}, false, "one-dimensional abelian algebra; everything is central"}},
      {"osp12",
       {{"e", "h", "f", "x", "y"},
        {E, E, E, O, O},
        {{{1, 2}, {{1, -2}}},
         {{1, 3}, {{2, 1}}},
         {{2, 3}, {{3, -2}}},
         {{1, 5}, {{4, -1}}},
         {{2, 4}, {{4, 1}}},
         {{2, 5}, {{5, -1}}},
         {{3, 4}, {{5, -1}}},
         {{4, 4}, {{1, 2}}},
         {{4, 5}, {{2, 1}}},
         {{5, 5}, {{3, -2}}}},
        {{1, {}}, {2, {{2, 1}}}, {3, {}}},
        {},
        true,
        "osp(1|2), simple superalgebra with even part sl2; trivial center"}},
  };
  return table;
}

LVector vec(const Field& f, const std::vector<std::pair<Index, long>>& terms) {
  LVector v;
  for (const auto& [k, c] : terms) v.add(k - 1, Scalar{f, c});
  return v;
}

}  // namespace

std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, s] : recipes()) keys.push_back(k);
  return keys;
}

CatalogEntry catalog_entry(std::string_view key, std::uint32_t characteristic) {
  auto it = recipes().find(key);
  if (it == recipes().end()) throw Error(Errc::UnknownKey, "no catalog entry '" + std::string(key) + "'");
  const Recipe& s = it->second;
  if (s.forbid_char2 && characteristic == 2)
    throw Error(Errc::MalformedInput, "catalog entry '" + it->first + "' is not available in characteristic 2");

  const Field f = Field::of_characteristic(characteristic);
  PresentationData d;
  d.name = it->first;
  d.field = f;
  d.basis = s.basis;
  d.parity = s.parity;
  for (const auto& [ij, terms] : s.brackets) d.brackets.push_back({ij.first - 1, ij.second - 1, vec(f, terms)});
  if (characteristic > 0) {
    std::vector<PMapRecord> pm;
    for (const auto& [i, terms] : s.pmap) pm.push_back({i - 1, vec(f, terms)});
    d.pmap = std::move(pm);
  }
  std::vector<Index> center;
  for (Index j : s.center) center.push_back(j - 1);
  d.center_ids = std::move(center);

  AlgebraPresentation pres{std::move(d)};
  const auto report = validate_presentation(pres);
  if (!report.passed())
    throw Error(Errc::ValidationFailed, "catalog entry '" + it->first + "': " + report.violations.front().message);
  if (characteristic > 0) {
    const auto pm = validate_p_map(pres);
    if (!pm.passed())
      throw Error(Errc::ValidationFailed, "catalog entry '" + it->first + "': " + pm.violations.front().message);
  }
  return {it->first, std::move(pres), s.notes};
}

AlgebraPresentation catalog_get(std::string_view key, std::uint32_t characteristic) {
  return catalog_entry(key, characteristic).presentation;
}

}  // namespace uea
