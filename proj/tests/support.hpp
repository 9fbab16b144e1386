#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "infdef/artin.hpp"
#include "infdef/groebner.hpp"
#include "infdef/hyperdef.hpp"
#include "infdef/linalg.hpp"
#include "infdef/poly.hpp"

namespace testing {

using namespace infdef;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar scalar(const Field& field, int bound = 5) {
    int num = integer(-bound, bound);
    int den = field.is_rational() ? integer(1, 3) : 1;
    return field.from_fraction(num, den);
  }

  Monomial monomial(std::size_t nvars, int max_degree) {
    Monomial m(nvars);
    int left = integer(0, max_degree);
    for (std::size_t i = 0; i < nvars && left > 0; ++i) {
      int e = i + 1 == nvars ? left : integer(0, left);
      m[i] = static_cast<std::uint32_t>(e);
      left -= e;
    }
    return m;
  }

  Polynomial poly(const RingPtr& ring, int max_terms = 4, int max_degree = 3,
                  bool constant_term = true) {
    std::vector<Term> terms;
    int count = integer(0, max_terms);
    for (int i = 0; i < count; ++i) {
      Monomial m = monomial(ring->nvars(), max_degree);
      if (!constant_term && m.is_one()) continue;
      terms.push_back({m, scalar(ring->field())});
    }
    return Polynomial(ring, std::move(terms));
  }

  Vector vector(const Field& field, std::size_t n, int bound = 5) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(field, bound));
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Polynomial P(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

inline std::vector<Polynomial> Ps(std::initializer_list<const char*> texts, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

// All exponent vectors in nvars variables of total degree < bound.
inline std::vector<Monomial> monomials_below(std::size_t nvars, int bound) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  if (bound > 0) rec(rec, 0, bound - 1);
  return out;
}

// dim k[x]/(gens + m^N) by linear algebra on polynomials truncated at degree
// N: I/m^N is spanned by the truncations of monomial multiples of the gens.
inline std::size_t truncated_quotient_dim(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                          int N) {
  auto mons = monomials_below(ring->nvars(), N);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  Subspace span(ring->field(), mons.size());
  for (const auto& g : gens)
    for (const auto& m : mons) {
      Vector v = zero_vector(ring->field(), mons.size());
      for (const auto& t : g.terms()) {
        Monomial prod = t.monomial * m;
        if (prod.degree() < static_cast<std::uint64_t>(N)) v[index.at(prod)] += t.coefficient;
      }
      span.insert(std::move(v));
    }
  return mons.size() - span.dimension();
}

// Dimension of the image of P_{<=d0} in P_{<=D} / V_D, where V_D is spanned
// by all m*g with deg(m*g) <= D. For D well past d0 this is the image of
// P_{<=d0} in k[x]/I, hence dim k[x]/I once d0 covers a monomial basis.
inline std::size_t macaulay_quotient_dim(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                         int d0, int D) {
  auto mons = monomials_below(ring->nvars(), D + 1);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  Subspace span(ring->field(), mons.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto deg = static_cast<int>(g.total_degree());
    for (const auto& m : mons) {
      if (static_cast<int>(m.degree()) + deg > D) continue;
      Vector v = zero_vector(ring->field(), mons.size());
      for (const auto& t : g.terms()) v[index.at(t.monomial * m)] += t.coefficient;
      span.insert(std::move(v));
    }
  }
  std::size_t count = 0;
  for (const auto& m : mons)
    if (static_cast<int>(m.degree()) <= d0 &&
        span.insert(unit_vector(ring->field(), mons.size(), index.at(m))))
      ++count;
  return count;
}

// Schoolbook product through a dense exponent map.
inline Polynomial dense_product(const Polynomial& a, const Polynomial& b) {
  std::map<Monomial, Scalar> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      Monomial m = s.monomial * t.monomial;
      auto [it, fresh] = acc.try_emplace(m, a.field().zero());
      it->second += s.coefficient * t.coefficient;
    }
  std::vector<Term> terms;
  for (auto& [m, c] : acc) terms.push_back({m, c});
  return Polynomial(a.ring(), std::move(terms));
}

// Lazily presented algebras over Q used throughout the artin and hyperdef tests.
inline PresentedAlgebra present(const std::string& vars, std::initializer_list<const char*> gens,
                                const Field& field = Field::rationals()) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : vars) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  RingPtr ring = Ring::make(names, field);
  return present_quotient(ring, Ps(gens, ring));
}

inline PresentedAlgebra residue_k(const Field& field = Field::rationals()) {
  return present_quotient(Ring::make({}, field), {});
}

inline AlgebraMorphism map_of(const PresentedAlgebra& src, const PresentedAlgebra& tgt,
                              std::initializer_list<const char*> images) {
  return morphism_from_images(src, tgt, Ps(images, tgt.ring));
}

// Sends every variable of src to zero in tgt.
inline AlgebraMorphism to_zero(const PresentedAlgebra& src, const PresentedAlgebra& tgt) {
  std::vector<Polynomial> imgs(src.ring->nvars(), Polynomial(tgt.ring));
  return morphism_from_images(src, tgt, imgs);
}

struct FiberTriple {
  std::string name;
  AlgebraMorphism p;
  AlgebraMorphism q;
};

// Pairs (p: A' -> A, q: A'' -> A) with q surjective.
inline std::vector<FiberTriple> fiber_fleet() {
  auto k = residue_k();
  auto eps = present("e", {"e^2"});
  auto t3 = present("t", {"t^3"});
  auto t2 = present("t", {"t^2"});
  auto t4 = present("t", {"t^4"});
  auto ab = present("a,b", {"a^2", "a*b", "b^2"});
  auto xy3 = present("x,y", {"x^3", "x^2*y", "x*y^2", "y^3"});
  auto cusp = present("x,y", {"y", "x^2"});
  auto uv = present("u,v", {"u^2", "v^2"});
  std::vector<FiberTriple> fleet;
  auto add = [&](std::string name, AlgebraMorphism p, AlgebraMorphism q) {
    fleet.push_back({std::move(name), std::move(p), std::move(q)});
  };
  add("eps x_k eps", to_zero(eps, k), to_zero(eps, k));
  add("t3 x_t2 t3", map_of(t3, t2, {"t"}), map_of(t3, t2, {"t"}));
  add("t3 x_eps eps", map_of(t3, eps, {"e"}), AlgebraMorphism::identity(eps.algebra));
  add("id x_id id", AlgebraMorphism::identity(t3.algebra), AlgebraMorphism::identity(t3.algebra));
  add("t4 x_t2 t3", map_of(t4, t2, {"t"}), map_of(t3, t2, {"t"}));
  add("ab x_k t3", to_zero(ab, k), to_zero(t3, k));
  add("xy3 x_eps t2", map_of(xy3, eps, {"e", "0"}), map_of(t2, eps, {"e"}));
  add("xy3 x_ab ab", map_of(xy3, ab, {"a", "b"}), AlgebraMorphism::identity(ab.algebra));
  add("uv x_eps t3", map_of(uv, eps, {"e", "e"}), map_of(t3, eps, {"e"}));
  add("k x_k k", AlgebraMorphism::identity(k.algebra), AlgebraMorphism::identity(k.algebra));
  add("cusp x_k uv", to_zero(cusp, k), to_zero(uv, k));
  add("t4 x_eps uv", map_of(t4, eps, {"2*e"}), map_of(uv, eps, {"e", "-e"}));
  add("eps x_eps t4", AlgebraMorphism::identity(eps.algebra), map_of(t4, eps, {"e"}));
  return fleet;
}

}  // namespace testing
