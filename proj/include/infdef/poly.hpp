#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infdef/scalar.hpp"

namespace infdef {

/// Exponent vector x^a, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// Exact quotient; the caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on exponent vectors; used for container keys only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { degrevlex, lex };

/// Term order; variable precedence follows the declared variable order
/// (first variable largest).
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::string_view to_string(OrderKind kind);

/// Polynomial ring k[x_1, ..., x_n] with a fixed term order.
class Ring {
 public:
  Ring(std::vector<std::string> variables, Field field = Field::rationals(),
       MonomialOrder order = {});

  static std::shared_ptr<const Ring> make(std::vector<std::string> variables,
                                          Field field = Field::rationals(),
                                          MonomialOrder order = {});

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }

  /// Index of the named variable; throws unknown_variable.
  std::size_t index_of(std::string_view name) const;
  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;

  std::string format(const Monomial& m) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> vars_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial monomial;
  Scalar coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial. Terms are kept sorted descending in the ring's order
/// with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);
  static Polynomial variable(RingPtr ring, std::size_t i);

  const RingPtr& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const noexcept { return terms_.size(); }

  /// Leading term in the ring order; the polynomial must be nonzero.
  const Term& leading() const { return terms_.front(); }
  std::uint64_t total_degree() const;
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;

  /// Formal partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const;

  /// Same polynomial in another ring over the same field. var_map[i] is the
  /// target index of source variable i.
  Polynomial rebase(RingPtr target, std::span<const std::size_t> var_map) const;
  /// Same polynomial re-sorted for a different term order.
  Polynomial reorder(const MonomialOrder& order) const;
  /// Substitutes images[i] (elements of `target`) for variable i.
  Polynomial substitute(std::span<const Polynomial> images, const RingPtr& target) const;

  /// Canonical text, terms descending in the ring order, e.g. "-x^3+y^2".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses the polynomial grammar: terms joined by '+'/'-', each term an
/// optional rational coefficient followed by '*'-separated variable powers.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);
Polynomial parse_poly(std::string_view text, std::vector<std::string> variables,
                      Field field = Field::rationals());

/// Parses "Q" or "Fp:<p>".
Field parse_field(std::string_view text);

/// (df/dx_1, ..., df/dx_n).
std::vector<Polynomial> jacobian(const Polynomial& f);

}  // namespace infdef
