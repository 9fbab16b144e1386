#pragma once

#include <span>
#include <vector>

#include "infdef/poly.hpp"

namespace infdef {

/// A Groebner basis together with the ring (and term order) it lives in.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;  // sorted ascending by leading monomial
  bool reduced = false;

  const MonomialOrder& order() const { return ring->order(); }
  bool is_unit_ideal() const;
};

/// Reduced Groebner basis of the ideal generated by `generators` with respect
/// to `order`. S-pairs are processed by the normal strategy (smallest lcm
/// degree first, ties by pair index). The zero ideal yields an empty basis.
GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order = {});

/// Same, with the ring given explicitly so that an empty generator list is
/// allowed.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         MonomialOrder order = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Fully reduced remainder of p modulo gb. The result lives in gb's ring.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Standard monomials (not divisible by any leading monomial), ascending in
/// the order. Throws not_zero_dimensional when infinitely many exist.
std::vector<Monomial> quotient_basis(const GroebnerBasis& gb);

bool is_zero_dimensional(const GroebnerBasis& gb);

}  // namespace infdef
