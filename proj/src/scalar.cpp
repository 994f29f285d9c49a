#include "uea/scalar.hpp"

#include <cctype>
#include <ostream>

namespace uea {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: p is prime.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(Errc::MalformedInput, "characteristic " + std::to_string(p) + " is not a supported prime");
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field field, long value) : field_{field} {
  if (field.is_rational()) {
    value_ = mpq_class{value};
  } else {
    long p = field.characteristic();
    long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_{field} {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = q;
    return;
  }
  auto p = field.characteristic();
  std::uint64_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) throw Error(Errc::ZeroInverse, "denominator vanishes in " + field.to_string());
  value_ = reduce_mpz(value.get_num(), p) * inverse_mod(den, p) % p;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(Errc::ParseError, "malformed scalar '" + std::string(text) + "'");
  mpz_class n{std::string(num.front() == '+' ? num.substr(1) : num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  try {
    return Scalar{field, mpq_class{n, d}};
  } catch (const Error&) {
    throw Error(Errc::ParseError, "denominator of '" + std::string(text) + "' vanishes in " + field.to_string());
  }
}

bool Scalar::is_zero() const noexcept {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(Errc::FieldMismatch, "rational() on " + field_.to_string());
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(Errc::FieldMismatch, "residue() on Q");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw Error(Errc::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroInverse, "inverse of zero in " + field_.to_string());
  Scalar out = *this;
  if (field_.is_rational()) {
    out.value_ = mpq_class{1} / std::get<mpq_class>(value_);
  } else {
    out.value_ = inverse_mod(std::get<std::uint64_t>(value_), field_.characteristic());
  }
  return out;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = one(field_), base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.value_ = mpq_class{-std::get<mpq_class>(value_)};
  } else {
    auto v = std::get<std::uint64_t>(value_);
    out.value_ = v == 0 ? 0 : field_.characteristic() - v;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(other.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = v * std::get<std::uint64_t>(other.value_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace uea
