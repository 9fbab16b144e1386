#pragma once

#include <span>
#include <string>
#include <vector>

#include "infdef/groebner.hpp"
#include "infdef/linalg.hpp"
#include "infdef/poly.hpp"

namespace infdef {

/// Finite-dimensional local k-algebra with residue field k, stored as a
/// structure-constant table. Presentations are canonical: e_0 = 1 and
/// e_1, ..., e_{d-1} span the maximal ideal.
class FiniteKAlgebra {
 public:
  /// table[i][j] holds the coordinates of e_i * e_j. Validates
  /// commutativity, associativity, the unit, and nilpotency of the maximal
  /// ideal; throws invalid_algebra otherwise.
  FiniteKAlgebra(Field field, std::vector<std::string> labels,
                 std::vector<std::vector<Vector>> table);

  /// The residue field k itself (dimension 1).
  static FiniteKAlgebra residue_field(const Field& field);

  const Field& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<Vector>>& table() const noexcept { return table_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  /// Least n with m^(n+1) = 0.
  std::size_t order() const noexcept { return order_; }
  std::vector<std::size_t> maximal_ideal_indices() const;

  Vector one() const { return unit_vector(field_, dimension(), 0); }
  Vector basis_element(std::size_t i) const { return unit_vector(field_, dimension(), i); }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector power(const Vector& a, std::uint64_t e) const;
  bool in_maximal_ideal(const Vector& a) const { return a.at(0).is_zero(); }

  /// m^k as a subspace of k^dim (m^0 is the whole algebra).
  Subspace maximal_ideal_power(std::size_t k) const;
  /// Span of {m * v : m in the maximal ideal, v in s}.
  Subspace maximal_ideal_times(const Subspace& s) const;

  /// Linear combination of basis labels, e.g. "2*t-t^2".
  std::string format(const Vector& v) const;

  friend bool operator==(const FiniteKAlgebra& a, const FiniteKAlgebra& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> table_;
  std::size_t order_ = 0;
};

/// Unital k-algebra homomorphism, stored as a (target dim) x (source dim)
/// matrix in the canonical bases. Equality is matrix equality.
class AlgebraMorphism {
 public:
  /// Validates unitality, multiplicativity and m -> m; throws invalid_morphism.
  AlgebraMorphism(FiniteKAlgebra source, FiniteKAlgebra target, Matrix matrix);

  static AlgebraMorphism identity(const FiniteKAlgebra& a);
  /// The quotient map A -> k.
  static AlgebraMorphism augmentation(const FiniteKAlgebra& a);

  const FiniteKAlgebra& source() const noexcept { return source_; }
  const FiniteKAlgebra& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  Vector apply(const Vector& v) const { return matrix_.apply(v); }
  bool is_surjective() const;
  Subspace kernel() const;
  /// Surjective with m_source * kernel = 0.
  bool is_small() const;
  /// Small with one-dimensional kernel.
  bool is_tiny() const;

  /// (*this) o inner.
  AlgebraMorphism after(const AlgebraMorphism& inner) const;

  friend bool operator==(const AlgebraMorphism& a, const AlgebraMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  FiniteKAlgebra source_;
  FiniteKAlgebra target_;
  Matrix matrix_;
};

/// A quotient k[x]/I together with the data that produced its table.
struct PresentedAlgebra {
  RingPtr ring;
  GroebnerBasis gb;
  std::vector<Monomial> basis;  // standard monomials, ascending; basis[0] = 1
  FiniteKAlgebra algebra;

  /// Coordinates of the class of p.
  Vector coordinates(const Polynomial& p) const;
  /// Standard-monomial representative of v.
  Polynomial representative(const Vector& v) const;
};

/// Presents k[x]/I. Throws not_artinian when the quotient is
/// infinite-dimensional and residue_field when I is the unit ideal or the
/// quotient is not local at the origin.
PresentedAlgebra present_quotient(const RingPtr& ring, std::span<const Polynomial> generators);
FiniteKAlgebra algebra_from_quotient(const RingPtr& ring, std::span<const Polynomial> generators);

/// The morphism k[x]/I -> k[y]/J sending x_i to images[i]. Throws
/// invalid_morphism unless every generator of I maps to zero.
AlgebraMorphism morphism_from_images(const PresentedAlgebra& source,
                                     const PresentedAlgebra& target,
                                     std::span<const Polynomial> images);

/// B = A' x_A A'' for p: A' -> A and q: A'' -> A, realised as the kernel of
/// (p - q): A' + A'' -> A.
struct FiberedProduct {
  AlgebraMorphism left_map;   // p
  AlgebraMorphism right_map;  // q
  FiniteKAlgebra algebra;
  AlgebraMorphism to_left;
  AlgebraMorphism to_right;
  Matrix embedding;  // B -> A' + A''

  /// Coordinates in B of the pair (a', a''); throws incompatible when
  /// p(a') != q(a'').
  Vector coordinates(const Vector& left, const Vector& right) const;
  /// The unique C -> B through which u: C -> A' and v: C -> A'' factor.
  AlgebraMorphism induced(const AlgebraMorphism& u, const AlgebraMorphism& v) const;
};

/// Throws target_mismatch if p and q have different targets, not_surjective
/// if q is not surjective.
FiberedProduct fibered_product(const AlgebraMorphism& p, const AlgebraMorphism& q);

/// A' = Q_r -> Q_{r-1} -> ... -> Q_1 -> A, each step a tiny extension.
struct SmallExtensionChain {
  AlgebraMorphism original;
  std::vector<AlgebraMorphism> steps;  // in order of application

  std::size_t length() const noexcept { return steps.size(); }
  /// Composite of the steps; the original isomorphism when the chain is empty.
  AlgebraMorphism composite() const;
};

/// Factors a surjection into tiny extensions by refining
/// ker ⊇ m ker ⊇ m^2 ker ⊇ ... one dimension at a time, dropping kernel lines
/// in basis order. Throws not_surjective.
SmallExtensionChain factor_small_extension(const AlgebraMorphism& phi);

/// Quotient of A by an ideal J contained in the maximal ideal. Basis: the
/// indices of A that are not pivots of J's echelon form.
struct QuotientByIdeal {
  FiniteKAlgebra algebra;
  AlgebraMorphism projection;
};
QuotientByIdeal quotient_by_ideal(const FiniteKAlgebra& a, const Subspace& ideal);

}  // namespace infdef
