#ifndef UEA_SCALAR_HPP
#define UEA_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "uea/errors.hpp"

namespace uea {

/// Ground field tag: the rationals (characteristic 0) or GF(p).
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws MalformedInput unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// 0 selects the rationals.
  static Field of_characteristic(std::uint32_t p) { return p == 0 ? rationals() : prime(p); }

  constexpr std::uint32_t characteristic() const noexcept { return p_; }
  constexpr bool is_rational() const noexcept { return p_ == 0; }

  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_{p} {}
  std::uint32_t p_ = 0;
};

/// An exact element of a Field. Rationals are kept canonical by GMP
/// (reduced, positive denominator); residues live in [0, p).
class Scalar {
 public:
  Scalar() : value_{mpq_class{0}} {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar{field, 0L}; }
  static Scalar one(Field field) { return Scalar{field, 1L}; }
  /// Accepts "n", "-n", "n/d". Denominators that vanish in the field are a
  /// ParseError.
  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Valid only over Q.
  const mpq_class& rational() const;
  /// Valid only over GF(p).
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "num/den" (denominator omitted when 1) over Q, decimal residue over GF(p).
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_{};
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace uea

#endif  // UEA_SCALAR_HPP
