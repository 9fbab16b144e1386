#pragma once

#include <span>
#include <string>
#include <vector>

#include "infdef/artin.hpp"
#include "infdef/groebner.hpp"
#include "infdef/linalg.hpp"
#include "infdef/poly.hpp"

namespace infdef {

/// The Tjurina algebra k[x]/(f, df/dx_1, ..., df/dx_n) of f.
struct TjurinaData {
  Polynomial f;
  GroebnerBasis gb;
  std::vector<Monomial> basis;  // standard monomials, ascending

  std::size_t tjurina_number() const noexcept { return basis.size(); }
};

/// Throws constant_polynomial for constant f and non_isolated when the
/// Tjurina algebra is infinite-dimensional.
TjurinaData tjurina(const Polynomial& f);

/// Kodaira-Spencer class of the first-order deformation f + eps*g: the
/// coordinates of g in the Tjurina algebra basis.
Vector ks_class(const TjurinaData& td, const Polynomial& g);

/// F = f + t_1 g_1 + ... + t_m g_m, where g_i are the Tjurina basis
/// monomials.
struct MiniversalFamily {
  Polynomial f;
  RingPtr family_ring;                  // x_1..x_n followed by t_1..t_m
  std::vector<std::string> parameters;  // t_1..t_m
  std::vector<Polynomial> directions;   // g_i, in f's ring
  Polynomial family;                    // F, in family_ring
  Matrix kodaira_spencer;               // column i = class of dF/dt_i at t = 0

  std::size_t parameter_count() const noexcept { return parameters.size(); }
};

MiniversalFamily miniversal_family(const TjurinaData& td);

/// A hypersurface deformation over an artinian base A: the equation
/// sum_i e_i * F_i with F_i in k[x], indexed by the basis of A. The
/// coefficient at e_0 = 1 is the central fiber.
class DeformationOverA {
 public:
  DeformationOverA(FiniteKAlgebra base, std::vector<Polynomial> coefficients);

  static DeformationOverA trivial(const Polynomial& f, const FiniteKAlgebra& base);

  const FiniteKAlgebra& base() const noexcept { return base_; }
  const std::vector<Polynomial>& coefficients() const noexcept { return coefficients_; }
  const Polynomial& central_fiber() const { return coefficients_.front(); }
  const RingPtr& ring() const { return coefficients_.front().ring(); }

  /// e.g. "x*y+(t)*(-1)".
  std::string to_string() const;

  friend bool operator==(const DeformationOverA& a, const DeformationOverA& b) {
    return a.base_ == b.base_ && a.coefficients_ == b.coefficients_;
  }

 private:
  FiniteKAlgebra base_;
  std::vector<Polynomial> coefficients_;
};

/// Base change of d along phi: base(d) -> B.
DeformationOverA pushforward(const DeformationOverA& d, const AlgebraMorphism& phi);

/// Pulls the miniversal family back along t_i -> assignment[i] in m_A.
/// Throws parameter_count or not_in_maximal_ideal.
DeformationOverA specialize_family(const MiniversalFamily& mf, const FiniteKAlgebra& base,
                                   std::span<const Vector> assignment);

/// Linear section s: A -> A' of a surjection, with s(1) = 1. A basis element
/// of A goes to the basis element of A' with the same label when ext maps
/// that element onto it; otherwise to the echelon solution of ext(x) = e_j.
Matrix linear_section(const AlgebraMorphism& ext);

/// Lifts d along the small extension ext: A' -> A by pushing each
/// coefficient through linear_section(ext). Throws target_mismatch or
/// not_small.
DeformationOverA lift_deformation(const DeformationOverA& d, const AlgebraMorphism& ext);

struct GluedDeformation {
  FiberedProduct product;
  DeformationOverA deformation;  // over product.algebra
};

/// The deformation over A' x_A A'' restricting to `left` and `right`.
/// Throws incompatible when their pushforwards to A differ.
GluedDeformation glue_deformations(const DeformationOverA& left, const DeformationOverA& right,
                                   const AlgebraMorphism& p, const AlgebraMorphism& q);

struct MuOptions {
  unsigned truncation_cap = 64;
};

struct MuResult {
  std::size_t value = 0;
  /// (N, dim (I + m^N) / (m I + m^N)) for each truncation evaluated.
  std::vector<std::pair<unsigned, std::size_t>> history;
};

/// Minimal number of generators of I in k[[x]] as dim I / m I, by
/// truncating at m^N until three consecutive levels agree. N starts at the
/// largest generator degree + 2 and doubles otherwise. Throws
/// not_in_maximal_ideal for generators with a constant term and
/// no_stabilization past the cap.
MuResult mu_generators(const RingPtr& ring, std::span<const Polynomial> generators,
                       MuOptions options = {});

}  // namespace infdef
