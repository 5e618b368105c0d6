#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace trialg {

/// Coefficient field: the rationals or a prime field F_p with p < 2^32.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rational() { return Field(); }
  /// Throws Error(InvalidArgument) unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  constexpr std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend constexpr bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  explicit constexpr Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator (GMP canonical form); prime-field values are residues in [0, p).
/// Mixing fields in arithmetic throws Error(FieldMismatch).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : field_(Field::rational()), value_(mpq_class(0)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long n);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// Accepts "n", "-n", "n/d". Over F_p a fraction is mapped through d^{-1}.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Residue; only valid over F_p.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  Scalar inverse() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Values in different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// a -= c * b, the elimination kernel.
  void sub_mul(const Scalar& c, const Scalar& b);

 private:
  Scalar(Field f, std::uint64_t r) : field_(f), value_(r) {}
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace trialg
