#include "pcross/scalar.hpp"

#include <charconv>
#include <ostream>

#include "pcross/error.hpp"

namespace pcross {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  text = trim(text);
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  bool ok = !digits.empty();
  for (std::size_t i = 0; i < digits.size() && ok; ++i) {
    const char c = digits[i];
    ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && digits.size() > 1);
  }
  if (!ok) throw Error(ErrorCode::ParseError, "not a scalar: \"" + std::string(whole) + "\"");
  return mpz_class(digits, 10);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not a prime below 2^32");
  }
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "rational" || text == "Q") return rational();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::uint64_t p = 0;
    const auto digits = text.substr(prefix.size());
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::InvalidField, "bad prime in \"" + std::string(text) + "\"");
    }
    return prime(p);
  }
  throw Error(ErrorCode::InvalidField, "unknown field \"" + std::string(text) + "\"");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("rational") : "prime:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class q = value;
    if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const std::uint64_t p = field.characteristic();
    const std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
    value_ = mulmod(reduce(value.get_num(), p), powmod(den, p - 2, p), p);
  }
}

Scalar::Scalar(const Field& field, std::uint64_t residue, int) : field_(field), value_(residue) {}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (const auto pos = text.find("mod"); pos != std::string_view::npos) {
    const mpz_class k = parse_integer(text.substr(0, pos), whole);
    const mpz_class p = parse_integer(text.substr(pos + 3), whole);
    if (field.is_rational() || p != static_cast<unsigned long>(field.characteristic())) {
      throw Error(ErrorCode::FieldMismatch,
                  "\"" + std::string(whole) + "\" does not belong to " + field.to_string());
    }
    return Scalar(field, mpq_class(k));
  }
  if (const auto pos = text.find('/'); pos != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, pos), whole);
    const mpz_class den = parse_integer(text.substr(pos + 1), whole);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "\"" + std::string(whole) + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(field, q);
  }
  return Scalar(field, mpq_class(parse_integer(text, whole)));
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1 % field_.characteristic();
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_)) + " mod " +
         std::to_string(field_.characteristic());
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(field_, mpq_class(-*q));
  const std::uint64_t r = std::get<std::uint64_t>(value_);
  return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r, 0);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(rhs.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + p - std::get<std::uint64_t>(rhs.value_)) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = mulmod(r, std::get<std::uint64_t>(rhs.value_), field_.characteristic());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(field_, mpq_class(1 / *q));
  const std::uint64_t p = field_.characteristic();
  return Scalar(field_, powmod(std::get<std::uint64_t>(value_), p - 2, p), 0);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  return lhs.value_ == rhs.value_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "not a rational scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "not a prime-field scalar");
  return std::get<std::uint64_t>(value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pcross
