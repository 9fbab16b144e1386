#include <doctest.h>

#include "infdef/error.hpp"
#include "infdef/projcoh.hpp"

using namespace infdef;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::syntax;
}

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("line bundle cohomology examples") {
  CHECK(coh_dim({2, 3, 0}) == 10);
  CHECK(coh_dim({2, 3, 0}, CohMethod::cech) == 10);
  CHECK(coh_dim({2, 0, 0}) == 1);
  CHECK(coh_dim({3, -4, 3}) == 1);
  CHECK(coh_dim({3, -4, 3}, CohMethod::cech) == 1);
  CHECK(coh_dim({1, -2, 1}, CohMethod::cech) == 1);
  CHECK(coh_dim({1, -5, 1}) == 4);
  CHECK(coh_dim({2, -1, 2}) == 0);
  CHECK(coh_dim({4, 3, 2}, CohMethod::cech) == 0);
  CHECK(coh_dim({4, -7, 4}, CohMethod::cech) == coh_dim({4, -7, 4}));

  CHECK(kind_of([] { coh_dim({0, 1, 0}); }) == ErrorKind::out_of_range);
  CHECK(kind_of([] { coh_dim({2, 1, 3}); }) == ErrorKind::out_of_range);
  CHECK(kind_of([] { coh_dim({2, 1, -1}); }) == ErrorKind::out_of_range);
  CHECK(kind_of([] { coh_dim({2, kCechMaxTwist + 1, 0}, CohMethod::cech); }) ==
        ErrorKind::truncation_overflow);
  CHECK(coh_dim({2, kCechMaxTwist + 1, 0}) == static_cast<std::uint64_t>(choose(kCechMaxTwist + 3, 2)));
}

TEST_CASE("formula and Cech oracle agree") {
  for (int n = 1; n <= 3; ++n)
    for (int d = -8; d <= 8; ++d)
      for (int q = 0; q <= n; ++q) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(q);
        CHECK(coh_dim({n, d, q}, CohMethod::formula) == coh_dim({n, d, q}, CohMethod::cech));
      }
}

TEST_CASE("Serre duality and the Euler characteristic") {
  for (int n = 1; n <= 3; ++n)
    for (int d = -8; d <= 8; ++d) {
      std::int64_t chi = 0;
      for (int q = 0; q <= n; ++q) {
        CHECK(coh_dim({n, d, q}) == coh_dim({n, -d - n - 1, n - q}));
        auto h = static_cast<std::int64_t>(coh_dim({n, d, q}, CohMethod::cech));
        chi += q % 2 == 0 ? h : -h;
      }
      CHECK(chi == euler_characteristic(n, d));
      // the Hilbert polynomial (d+1)...(d+n)/n!, evaluated at any integer
      std::int64_t num = 1, den = 1;
      for (int i = 1; i <= n; ++i) {
        num *= d + i;
        den *= i;
      }
      CHECK(euler_characteristic(n, d) == num / den);
    }
}

TEST_CASE("multiplication maps") {
  GradedMultiplicationMap m = multiplication_map(2, 1);
  CHECK(m.matrix.rows() == 6);
  CHECK(m.matrix.cols() == 9);
  for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
    int ones = 0;
    for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
      const Scalar& x = m.matrix(r, c);
      CHECK((x.is_zero() || x.is_one()));
      ones += x.is_one() ? 1 : 0;
    }
    CHECK(ones == 1);
  }
  // exactness of the Koszul complex in low degree: the map is onto for e >= 0,
  // with kernel of dimension (n+1) C(n+e, n) - C(n+e+1, n)
  for (int n = 1; n <= 3; ++n)
    for (int e = 0; e <= 4; ++e) {
      GradedMultiplicationMap g = multiplication_map(n, e);
      CHECK(rank(g.matrix) == g.matrix.rows());
      CHECK(static_cast<std::int64_t>(g.matrix.cols() - rank(g.matrix)) ==
            (n + 1) * choose(n + e, n) - choose(n + e + 1, n));
    }
  GradedMultiplicationMap empty = multiplication_map(3, -1);
  CHECK(empty.matrix.cols() == 0);
  CHECK(empty.matrix.rows() == 1);
}

TEST_CASE("coboundary surjectivity") {
  CHECK(delta_surjective(2, 4, DeltaMethod::closed_form));
  CHECK_FALSE(delta_surjective(2, 5, DeltaMethod::closed_form));
  CHECK_FALSE(delta_surjective(3, 4, DeltaMethod::closed_form));
  CHECK(delta_surjective(3, 5, DeltaMethod::closed_form));
  CHECK(delta_surjective(4, 7, DeltaMethod::closed_form));
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 8; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(delta_surjective(n, d, DeltaMethod::closed_form) ==
            delta_surjective(n, d, DeltaMethod::linear_algebra));
    }
  CHECK(kind_of([] { delta_surjective(1, 3, DeltaMethod::closed_form); }) == ErrorKind::out_of_range);
  CHECK(kind_of([] { delta_surjective(2, 0, DeltaMethod::linear_algebra); }) ==
        ErrorKind::out_of_range);
}

TEST_CASE("hypersurface reports") {
  HypersurfaceReport r = hypersurface_report(3, 4);
  CHECK(r.hilb_tangent_dim == 34);
  CHECK(r.hilb_obstruction_dim == 0);
  CHECK_FALSE(r.all_deformations_embedded);
  HypersurfaceReport s = hypersurface_report(2, 3);
  CHECK(s.hilb_tangent_dim == 9);
  CHECK(s.all_deformations_embedded);
  CHECK(hypersurface_report(4, 2).all_deformations_embedded);
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 8; ++d) {
      HypersurfaceReport h = hypersurface_report(n, d);
      CHECK(h.hilb_tangent_dim == static_cast<std::uint64_t>(choose(n + d, n) - 1));
      CHECK(h.hilb_obstruction_dim == 0);
      CHECK(h.all_deformations_embedded == h.delta_surjective);
      CHECK_FALSE(h.citations.empty());
    }
  CHECK(kind_of([] { hypersurface_report(1, 2); }) == ErrorKind::out_of_range);
}

TEST_CASE("curve formulas") {
  CHECK(curve_moduli_dim(0) == 0);
  CHECK(curve_moduli_dim(1) == 1);
  CHECK(curve_moduli_dim(2) == 3);
  CHECK(curve_moduli_dim(5) == 12);
  CHECK(kind_of([] { curve_moduli_dim(-1); }) == ErrorKind::out_of_range);

  CHECK(chi_normal_p3(3, 0).total == 12);
  CHECK(chi_normal_p3(4, 1).total == 16);
  CHECK(chi_normal_p3(1, 0).total == 4);
  NormalChi c = chi_normal_p3(5, 2);
  CHECK(c.twisted_term == 4 * (5 + 1 - 2));
  CHECK(c.structure_term == -1);
  CHECK(c.tangent_term == -2 + 1 - 2);
  for (int d = 1; d <= 10; ++d)
    for (int g = 0; g <= 10; ++g) CHECK(chi_normal_p3(d, g).total == 4 * d);
  CHECK(kind_of([] { chi_normal_p3(0, 1); }) == ErrorKind::out_of_range);
}
