#include "uea/errors.hpp"

namespace uea {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::OddCenter: return "OddCenter";
    case Errc::MissingPMap: return "MissingPMap";
    case Errc::VariantMismatch: return "VariantMismatch";
    case Errc::OddGenerator: return "OddGenerator";
    case Errc::InfiniteWindow: return "InfiniteWindow";
    case Errc::PresentationMismatch: return "PresentationMismatch";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::LoopVariantUnsupported: return "LoopVariantUnsupported";
    case Errc::MissingJ: return "MissingJ";
    case Errc::NotCertifiable: return "NotCertifiable";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationFailed: return "ValidationFailed";
  }
  return "Unknown";
}

}  // namespace uea
