#ifndef UEA_ERRORS_HPP
#define UEA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace uea {

enum class Errc {
  ZeroInverse,
  FieldMismatch,
  MalformedInput,
  OddCenter,
  MissingPMap,
  VariantMismatch,
  OddGenerator,
  InfiniteWindow,
  PresentationMismatch,
  ZeroElement,
  LoopVariantUnsupported,
  MissingJ,
  NotCertifiable,
  UnknownKey,
  ParseError,
  ValidationFailed,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-status logic) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace uea

#endif  // UEA_ERRORS_HPP
