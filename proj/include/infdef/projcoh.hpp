#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infdef/linalg.hpp"

namespace infdef {

enum class CohMethod { formula, cech };
enum class DeltaMethod { closed_form, linear_algebra };

/// H^q(P^n, O(d)).
struct CohomologyQuery {
  int n = 1;
  int d = 0;
  int q = 0;
};

/// Largest |d| accepted by the Cech oracle, and largest n.
inline constexpr int kCechMaxTwist = 40;
inline constexpr int kCechMaxDimension = 8;

/// dim_k H^q(P^n, O(d)). The formula method uses C(n+d, n) and Serre
/// duality; the Cech method computes ranks in the Cech complex of the
/// standard affine cover, one Laurent multidegree block at a time. Throws
/// out_of_range for bad (n, q) and truncation_overflow when the Cech box
/// would exceed its configured bound.
std::uint64_t coh_dim(const CohomologyQuery& query, CohMethod method = CohMethod::formula);

/// Euler characteristic as the signed binomial: C(n+d, n) for d >= 0, 0 for
/// -n <= d <= -1, (-1)^n C(-d-1, n) for d <= -n-1.
std::int64_t euler_characteristic(int n, int d);

/// Multiplication by (x_0, ..., x_n): H^0(O(e))^(n+1) -> H^0(O(e+1)) on
/// monomial bases (graded lex order of exponent vectors).
struct GradedMultiplicationMap {
  int n = 0;
  int source_degree = 0;
  Matrix matrix;  // rows: degree e+1 monomials; columns: n+1 blocks of degree e monomials
};

GradedMultiplicationMap multiplication_map(int n, int source_degree);

/// Whether the coboundary H^0(Z, N_Z) -> H^1(Z, T_Z) is surjective for a
/// smooth degree-d hypersurface Z in P^n. Throws out_of_range unless n >= 2
/// and d >= 1.
bool delta_surjective(int n, int d, DeltaMethod method);

struct HypersurfaceReport {
  int n = 0;
  int d = 0;
  std::uint64_t hilb_tangent_dim = 0;      // h^0(Z, O_Z(d))
  std::uint64_t hilb_obstruction_dim = 0;  // h^1(Z, O_Z(d))
  bool delta_surjective = false;
  bool all_deformations_embedded = false;
  std::vector<std::string> citations;
};

HypersurfaceReport hypersurface_report(int n, int d);

/// Dimension of the base of a miniversal deformation of a smooth projective
/// curve of genus g: h^1(T) from Riemann-Roch.
std::uint64_t curve_moduli_dim(int genus);

/// chi(N) for a smooth curve of degree d and genus g in P^3, from the
/// restricted Euler sequence and the conormal sequence.
struct NormalChi {
  std::int64_t total = 0;
  std::int64_t twisted_term = 0;     // 4 chi(O_Z(1))
  std::int64_t structure_term = 0;   // chi(O_Z)
  std::int64_t tangent_term = 0;     // chi(T_Z)
};

NormalChi chi_normal_p3(int d, int genus);

}  // namespace infdef
