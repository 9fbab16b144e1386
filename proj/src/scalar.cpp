#include "infdef/scalar.hpp"

#include <ostream>

#include "infdef/error.hpp"

namespace infdef {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::unknown_variable: return "unknown_variable";
    case ErrorKind::zero_denominator: return "zero_denominator";
    case ErrorKind::not_representable: return "not_representable";
    case ErrorKind::ring_mismatch: return "ring_mismatch";
    case ErrorKind::not_zero_dimensional: return "not_zero_dimensional";
    case ErrorKind::not_artinian: return "not_artinian";
    case ErrorKind::residue_field: return "residue_field";
    case ErrorKind::invalid_algebra: return "invalid_algebra";
    case ErrorKind::invalid_morphism: return "invalid_morphism";
    case ErrorKind::not_surjective: return "not_surjective";
    case ErrorKind::target_mismatch: return "target_mismatch";
    case ErrorKind::not_small: return "not_small";
    case ErrorKind::not_in_maximal_ideal: return "not_in_maximal_ideal";
    case ErrorKind::parameter_count: return "parameter_count";
    case ErrorKind::incompatible: return "incompatible";
    case ErrorKind::non_isolated: return "non_isolated";
    case ErrorKind::constant_polynomial: return "constant_polynomial";
    case ErrorKind::no_stabilization: return "no_stabilization";
    case ErrorKind::out_of_range: return "out_of_range";
    case ErrorKind::truncation_overflow: return "truncation_overflow";
  }
  return "unknown";
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw Error(ErrorKind::out_of_range,
                "field characteristic " + std::to_string(p) +
                    " is not a prime below 2^32");
  return Field(p);
}

Scalar Field::zero() const { return Scalar(mpq_class(0), p_); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  Scalar s(mpq_class(value), p_);
  s.reduce();
  return s;
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorKind::zero_denominator, "denominator is zero");
  if (p_ != 0) {
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class d = den % p;
    if (d == 0)
      throw Error(ErrorKind::not_representable,
                  "denominator " + den.get_str() + " vanishes in " + to_string());
  }
  Scalar s(mpq_class(num, den), p_);
  s.value_.canonicalize();
  s.reduce();
  return s;
}

std::string Field::to_string() const {
  return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

Field Scalar::field() const { return Field(p_); }

void Scalar::check_field(const Scalar& other) const {
  if (p_ != other.p_)
    throw Error(ErrorKind::ring_mismatch, "scalars from different fields");
}

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = value_.get_num() % p;
  if (num < 0) num += p;
  if (value_.get_den() != 1) {
    mpz_class inv;
    mpz_class den = value_.get_den() % p;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  value_ = mpq_class(num);
}

Scalar Scalar::operator-() const {
  Scalar r(-value_, p_);
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_field(rhs);
  value_ += rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_field(rhs);
  value_ -= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_field(rhs);
  value_ *= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::zero_denominator, "division by zero");
  Scalar r(1 / value_, p_);
  r.reduce();
  return r;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace infdef
