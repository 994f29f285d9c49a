#ifndef UEA_CATALOG_HPP
#define UEA_CATALOG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uea/presentation.hpp"

namespace uea {

struct CatalogEntry {
  std::string key;
  AlgebraPresentation presentation;
  std::string notes;
};

std::vector<std::string> catalog_keys();

/// Built-in presentation over Q (characteristic 0) or GF(p), validated, with
/// J marked and, in characteristic p, a validated p-map. Throws UnknownKey,
/// MalformedInput for a characteristic the entry does not support, and
/// ValidationFailed if the entry does not validate.
CatalogEntry catalog_entry(std::string_view key, std::uint32_t characteristic = 0);
AlgebraPresentation catalog_get(std::string_view key, std::uint32_t characteristic = 0);

}  // namespace uea

#endif  // UEA_CATALOG_HPP
