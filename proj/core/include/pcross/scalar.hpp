#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace pcross {

/// Field descriptor: the rationals, or F_p for a prime p < 2^32.
class Field {
 public:
  constexpr Field() = default;

  static Field rational() { return Field{}; }
  static Field prime(std::uint64_t p);
  /// Parses "rational" or "prime:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t p_ = 0;
};

/// An exact field element. Fractions are kept canonical by GMP (lowest terms,
/// positive denominator); residues live in [0, p).
class Scalar {
 public:
  Scalar() : field_(), value_(mpq_class(0)) {}
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }
  /// Accepts "n", "p/q" and "k mod p". In F_p a fraction means p * q^{-1}.
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical serialization: "n", "p/q" or "k mod p".
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Residue; only valid over F_p.
  std::uint64_t residue() const;

 private:
  Scalar(const Field& field, std::uint64_t residue, int);
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pcross
