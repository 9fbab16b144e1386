#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace infdef {

class Scalar;

/// The base field k: either the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws out_of_range unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// num/den reduced into the field; throws zero_denominator or
  /// not_representable (den divisible by p).
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact element of a Field. Rationals are kept as reduced fractions with
/// positive denominator; F_p residues as integers in [0, p).
class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }

  /// "p/q" or "p" for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(mpq_class v, std::uint64_t p) : value_(std::move(v)), p_(p) {}
  void check_field(const Scalar& other) const;
  void reduce();

  mpq_class value_;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace infdef
