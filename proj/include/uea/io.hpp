#ifndef UEA_IO_HPP
#define UEA_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uea/center.hpp"
#include "uea/presentation.hpp"
#include "uea/sym.hpp"

namespace uea {

/// Reads the JSON presentation format:
///   {"name", "char", "basis", "parity", "brackets": [{"i", "j", "terms": [{"k", "c"}]}],
///    "pmap": [{"i", "terms"}], "center_ids"}
/// with 1-based indices and coefficients as scalar strings. Unknown fields
/// are rejected. `characteristic`, when given, replaces the file's "char".
/// Throws ParseError naming the line or field.
AlgebraPresentation parse_presentation(std::string_view text, std::optional<std::uint32_t> characteristic = std::nullopt);

/// Canonical JSON text of the presentation; parse_presentation inverts it.
std::string serialize_presentation(const AlgebraPresentation& pres);

struct LoadOptions {
  std::optional<std::uint32_t> characteristic;
  bool adapt = false;
};

/// Parses, validates (ValidationFailed) and optionally adapts the basis
/// (OddCenter).
AlgebraPresentation load_presentation(const std::filesystem::path& path, const LoadOptions& opts = {});

std::string report_json(const ValidationReport& r, const AlgebraPresentation& pres);
std::string report_table(const ValidationReport& r, const AlgebraPresentation& pres);
std::string report_json(const InvariantReport& r, const AlgebraPresentation& pres);
std::string report_table(const InvariantReport& r);
std::string reports_json(const std::vector<VerificationReport>& rs, const AlgebraPresentation& pres);
std::string reports_table(const std::vector<VerificationReport>& rs, const AlgebraPresentation& pres);

}  // namespace uea

#endif  // UEA_IO_HPP
