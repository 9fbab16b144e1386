#include <doctest.h>

#include "infdef/error.hpp"
#include "support.hpp"

using namespace infdef;
using testing::Gen;
using testing::map_of;
using testing::present;
using testing::residue_k;
using testing::to_zero;

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

// A random element of the maximal ideal.
Vector random_nilpotent(Gen& gen, const FiniteKAlgebra& a) {
  Vector v = gen.vector(a.field(), a.dimension(), 3);
  v[0] = a.field().zero();
  return v;
}

// k[s]/(s^r) -> a sending s to x.
AlgebraMorphism from_truncated_line(const FiniteKAlgebra& line, const FiniteKAlgebra& a,
                                    const Vector& x) {
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < line.dimension(); ++i) columns.push_back(a.power(x, i));
  return AlgebraMorphism(line, a, Matrix::from_columns(a.field(), a.dimension(), columns));
}

}  // namespace

TEST_CASE("algebras from quotients") {
  auto dual = present("t", {"t^2"}).algebra;
  CHECK(dual.dimension() == 2);
  CHECK(dual.order() == 1);
  auto t4 = present("t", {"t^4"}).algebra;
  CHECK(t4.dimension() == 4);
  CHECK(t4.order() == 3);
  auto xy = present("x,y", {"x^2", "x*y", "y^2"}).algebra;
  CHECK(xy.dimension() == 3);
  CHECK(xy.order() == 1);
  std::vector<std::string> sorted = xy.labels();
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::string>{"1", "x", "y"});

  auto k = residue_k().algebra;
  CHECK(k.dimension() == 1);
  CHECK(k.order() == 0);
  CHECK(k == FiniteKAlgebra::residue_field(Field::rationals()));
}

TEST_CASE("quotient errors") {
  CHECK(kind_of([] { present("x,y", {"x^2"}); }) == ErrorKind::not_artinian);
  CHECK(kind_of([] { present("x", {"x-1"}); }) == ErrorKind::residue_field);
  CHECK(kind_of([] { present("x", {"x^2-1"}); }) == ErrorKind::residue_field);
  CHECK(kind_of([] { present("x", {"x", "x+1"}); }) == ErrorKind::residue_field);
}

TEST_CASE("structure constant validation") {
  Field q = Field::rationals();
  auto e = [&](std::initializer_list<int> xs) {
    Vector v;
    for (int x : xs) v.push_back(q.from_int(x));
    return v;
  };
  // k[t]/t^2 by hand
  FiniteKAlgebra dual(q, {"1", "t"}, {{e({1, 0}), e({0, 1})}, {e({0, 1}), e({0, 0})}});
  CHECK(dual.order() == 1);
  CHECK(dual == present("t", {"t^2"}).algebra);
  // k x k is not local
  CHECK(kind_of([&] {
          FiniteKAlgebra(q, {"1", "u"}, {{e({1, 0}), e({0, 1})}, {e({0, 1}), e({0, 1})}});
        }) == ErrorKind::invalid_algebra);
  // e0 not a unit
  CHECK(kind_of([&] {
          FiniteKAlgebra(q, {"1", "t"}, {{e({1, 0}), e({0, 0})}, {e({0, 0}), e({0, 0})}});
        }) == ErrorKind::invalid_algebra);
  // not commutative
  CHECK(kind_of([&] {
          FiniteKAlgebra(q, {"1", "a", "b"},
                         {{e({1, 0, 0}), e({0, 1, 0}), e({0, 0, 1})},
                          {e({0, 1, 0}), e({0, 0, 0}), e({0, 0, 1})},
                          {e({0, 0, 1}), e({0, 0, 0}), e({0, 0, 0})}});
        }) == ErrorKind::invalid_algebra);
  CHECK(kind_of([&] { FiniteKAlgebra(q, {}, {}); }) == ErrorKind::invalid_algebra);
}

TEST_CASE("every presented algebra satisfies the axioms") {
  for (const auto& a : {present("t", {"t^5"}).algebra,
                        present("x,y", {"x^3", "y^2"}).algebra,
                        present("x,y,z", {"x^2", "y^2", "z^2", "x*y*z"}).algebra,
                        present("x,y", {"x*y", "x^2-y^3"}).algebra,
                        present("x,y", {"x^2", "y^2"}, Field::prime(5)).algebra}) {
    const std::size_t d = a.dimension();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        CHECK(a.product(i, j) == a.product(j, i));
        for (std::size_t l = 0; l < d; ++l)
          CHECK(a.multiply(a.product(i, j), a.basis_element(l)) ==
                a.multiply(a.basis_element(i), a.product(j, l)));
      }
    CHECK(a.maximal_ideal_power(a.order()).dimension() > 0);
    CHECK(a.maximal_ideal_power(a.order() + 1).dimension() == 0);
  }
  auto plane = present("x,y", {"x*y", "x^2-y^3"}).algebra;
  CHECK(plane.dimension() == 5);
  CHECK(plane.order() == 3);
}

TEST_CASE("morphisms") {
  auto t3 = present("t", {"t^3"});
  auto t2 = present("t", {"t^2"});
  auto k = residue_k();
  AlgebraMorphism proj = map_of(t3, t2, {"t"});
  CHECK(proj.is_surjective());
  CHECK(proj.is_tiny());
  CHECK(proj.kernel().dimension() == 1);
  AlgebraMorphism aug = to_zero(t3, k);
  CHECK(aug == AlgebraMorphism::augmentation(t3.algebra));
  CHECK_FALSE(aug.is_small());
  CHECK(to_zero(t2, k).after(proj) == aug);
  CHECK(AlgebraMorphism::identity(t3.algebra).after(AlgebraMorphism::identity(t3.algebra)) ==
        AlgebraMorphism::identity(t3.algebra));

  // t -> t^2 from k[t]/t^2 into k[t]/t^3 is injective, not surjective
  AlgebraMorphism sq = map_of(t2, t3, {"t^2"});
  CHECK_FALSE(sq.is_surjective());
  CHECK(kind_of([&] { map_of(t2, t3, {"t"}); }) == ErrorKind::invalid_morphism);
  CHECK(kind_of([&] { map_of(t3, t2, {"1+t"}); }) == ErrorKind::invalid_morphism);
  CHECK(kind_of([&] { map_of(t3, t2, {"t", "t"}); }) == ErrorKind::invalid_morphism);
  CHECK(kind_of([&] { proj.after(proj); }) == ErrorKind::target_mismatch);

  Matrix bad = Matrix::identity(Field::rationals(), 2);
  bad(1, 1) = Field::rationals().from_int(2);
  // t -> 2t is fine on k[t]/t^2, but 1 -> 1 and t -> 2t on k[t]/t^3 needs t^2 -> 4t^2
  CHECK_NOTHROW(AlgebraMorphism(t2.algebra, t2.algebra, bad));
  Matrix bad3 = Matrix::identity(Field::rationals(), 3);
  bad3(1, 1) = Field::rationals().from_int(2);
  CHECK(kind_of([&] { AlgebraMorphism(t3.algebra, t3.algebra, bad3); }) ==
        ErrorKind::invalid_morphism);
}

TEST_CASE("fibered product examples") {
  auto k = residue_k();
  auto eps = present("e", {"e^2"});
  FiberedProduct fp = fibered_product(to_zero(eps, k), to_zero(eps, k));
  CHECK(fp.algebra.dimension() == 3);
  CHECK(fp.algebra.order() == 1);
  // isomorphic to k[a,b]/(a,b)^2: the maximal ideal squares to zero
  CHECK(fp.algebra.maximal_ideal_power(2).dimension() == 0);
  CHECK(fp.algebra.labels() == std::vector<std::string>{"1", "(e,0)", "(0,e)"});

  auto t3 = present("t", {"t^3"});
  auto t2 = present("t", {"t^2"});
  FiberedProduct id = fibered_product(AlgebraMorphism::identity(t3.algebra),
                                      AlgebraMorphism::identity(t3.algebra));
  CHECK(id.algebra.dimension() == 3);
  CHECK(id.to_left.matrix() == Matrix::identity(Field::rationals(), 3));
  CHECK(id.to_right.matrix() == Matrix::identity(Field::rationals(), 3));

  FiberedProduct tt = fibered_product(map_of(t3, t2, {"t"}), map_of(t3, t2, {"t"}));
  CHECK(tt.algebra.dimension() == 4);
  CHECK(tt.algebra.order() == 2);

  CHECK(kind_of([&] { fibered_product(to_zero(eps, k), map_of(t2, t3, {"t^2"})); }) ==
        ErrorKind::target_mismatch);
  CHECK(kind_of([&] { fibered_product(map_of(t2, t3, {"t^2"}), map_of(t2, t3, {"t^2"})); }) ==
        ErrorKind::not_surjective);
}

TEST_CASE("fibered product dimension law and universal property") {
  Gen gen(1729);
  auto fleet = testing::fiber_fleet();
  REQUIRE(fleet.size() >= 10);
  for (const auto& [name, p, q] : fleet) {
    CAPTURE(name);
    FiberedProduct fp = fibered_product(p, q);
    const FiniteKAlgebra& b = fp.algebra;
    CHECK(b.dimension() ==
          p.source().dimension() + q.source().dimension() - p.target().dimension());
    CHECK(p.after(fp.to_left) == q.after(fp.to_right));
    CHECK(rank(fp.embedding) == b.dimension());

    const std::size_t r = std::max(p.source().order(), q.source().order()) + 1;
    RingPtr sring = Ring::make({"s"});
    FiniteKAlgebra line = algebra_from_quotient(
        sring, std::vector<Polynomial>{Polynomial::monomial(
                   sring, Monomial::variable(1, 0, static_cast<std::uint32_t>(r)),
                   Field::rationals().one())});
    for (int trial = 0; trial < 5; ++trial) {
      Vector a1 = random_nilpotent(gen, p.source());
      // lift p(a1) through q inside the maximal ideal, plus a random kernel element
      Vector target = p.apply(a1);
      std::vector<std::size_t> mi = q.source().maximal_ideal_indices();
      Matrix restricted(Field::rationals(), q.target().dimension(), mi.size());
      for (std::size_t c = 0; c < mi.size(); ++c)
        for (std::size_t row = 0; row < q.target().dimension(); ++row)
          restricted(row, c) = q.matrix()(row, mi[c]);
      auto sol = solve(restricted, target);
      REQUIRE(sol);
      Vector a2 = zero_vector(Field::rationals(), q.source().dimension());
      for (std::size_t c = 0; c < mi.size(); ++c) a2[mi[c]] = (*sol)[c];
      const Subspace ker = q.kernel();
      for (const auto& kv : ker.basis())
        a2 = add(a2, scale(gen.scalar(Field::rationals(), 2), kv));
      REQUIRE(q.apply(a2) == target);

      AlgebraMorphism u = from_truncated_line(line, p.source(), a1);
      AlgebraMorphism v = from_truncated_line(line, q.source(), a2);
      REQUIRE(p.after(u) == q.after(v));
      AlgebraMorphism w = fp.induced(u, v);
      CHECK(fp.to_left.after(w) == u);
      CHECK(fp.to_right.after(w) == v);
      // uniqueness: the embedding is injective, so w is determined by (u, v)
      for (std::size_t c = 0; c < line.dimension(); ++c) {
        Vector stacked = u.matrix().column(c);
        for (const auto& x : v.matrix().column(c)) stacked.push_back(x);
        CHECK(fp.embedding.apply(w.matrix().column(c)) == stacked);
      }
    }
  }
}

TEST_CASE("factorization into tiny extensions") {
  auto k = residue_k();
  auto t3 = present("t", {"t^3"});
  SmallExtensionChain c3 = factor_small_extension(to_zero(t3, k));
  REQUIRE(c3.length() == 2);
  CHECK(c3.steps[0].target().dimension() == 2);
  CHECK(c3.steps[0].target() == present("t", {"t^2"}).algebra);
  CHECK(c3.composite() == to_zero(t3, k));

  auto eps = present("e", {"e^2"});
  CHECK(factor_small_extension(to_zero(eps, k)).length() == 1);

  auto cube = present("x,y", {"x^3", "x^2*y", "x*y^2", "y^3"});
  CHECK(factor_small_extension(to_zero(cube, k)).length() == 5);

  SmallExtensionChain none = factor_small_extension(AlgebraMorphism::identity(t3.algebra));
  CHECK(none.length() == 0);
  CHECK(none.composite() == AlgebraMorphism::identity(t3.algebra));

  CHECK(kind_of([&] { factor_small_extension(map_of(present("t", {"t^2"}), t3, {"t^2"})); }) ==
        ErrorKind::not_surjective);
}

TEST_CASE("tiny-step invariant on the fleet") {
  auto k = residue_k();
  std::vector<AlgebraMorphism> surjections;
  for (const auto& [name, p, q] : testing::fiber_fleet()) {
    surjections.push_back(q);
    surjections.push_back(AlgebraMorphism::augmentation(p.source()));
    FiberedProduct fp = fibered_product(p, q);
    surjections.push_back(fp.to_right);
    surjections.push_back(AlgebraMorphism::augmentation(fp.algebra));
  }
  for (const auto& phi : surjections) {
    if (!phi.is_surjective()) continue;
    SmallExtensionChain chain = factor_small_extension(phi);
    CHECK(chain.length() == phi.kernel().dimension());
    CHECK(chain.composite() == phi);
    for (const auto& step : chain.steps) {
      CHECK(step.is_tiny());
      Subspace ker = step.kernel();
      CHECK(ker.dimension() == 1);
      CHECK(step.source().maximal_ideal_times(ker).dimension() == 0);
    }
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i)
      CHECK(chain.steps[i].target() == chain.steps[i + 1].source());
  }
}

TEST_CASE("quotients by ideals") {
  auto t4 = present("t", {"t^4"}).algebra;
  QuotientByIdeal q = quotient_by_ideal(t4, t4.maximal_ideal_power(2));
  CHECK(q.algebra == present("t", {"t^2"}).algebra);
  CHECK(q.projection.is_surjective());
  Subspace bad = Subspace::span(t4.field(), 4, {t4.one()});
  CHECK(kind_of([&] { quotient_by_ideal(t4, bad); }) == ErrorKind::invalid_algebra);
}
