#include "infdef/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "infdef/error.hpp"

namespace infdef {

namespace {

struct DescendingIn {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->greater(a, b);
  }
};

Polynomial to_ring(const Polynomial& p, const RingPtr& ring) {
  const Ring& r = *p.ring();
  if (r.variables() != ring->variables() || !(r.field() == ring->field()))
    throw Error(ErrorKind::ring_mismatch, "polynomial is not over the basis ring");
  return Polynomial(ring, p.terms());
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero() || p.leading().coefficient.is_one()) return p;
  return p.leading().coefficient.inverse() * p;
}

// Full reduction of p by the polynomials in `by` (all monic, nonzero).
// Divisors are tried in list order.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& by) {
  const RingPtr& ring = p.ring();
  const MonomialOrder& order = ring->order();
  std::map<Monomial, Scalar, DescendingIn> work(DescendingIn{&order});
  for (const auto& t : p.terms()) work.emplace(t.monomial, t.coefficient);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Polynomial* divisor = nullptr;
    for (const auto& g : by)
      if (g.leading().monomial.divides(it->first)) {
        divisor = &g;
        break;
      }
    if (divisor == nullptr) {
      remainder.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    Monomial shift = it->first / divisor->leading().monomial;
    Scalar c = it->second / divisor->leading().coefficient;
    for (const auto& t : divisor->terms()) {
      Monomial m = t.monomial * shift;
      Scalar delta = c * t.coefficient;
      auto [pos, inserted] = work.try_emplace(std::move(m), -delta);
      if (!inserted) {
        pos->second -= delta;
        if (pos->second.is_zero()) work.erase(pos);
      }
    }
  }
  return Polynomial(ring, std::move(remainder));
}

struct Pair {
  std::size_t i, j;
  std::uint64_t degree;
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return generators.size() == 1 && generators.front().is_constant();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading();
  const Term& lg = g.leading();
  Monomial l = lcm(lf.monomial, lg.monomial);
  return f.mul_term(l / lf.monomial, lf.coefficient.inverse()) -
         g.mul_term(l / lg.monomial, lg.coefficient.inverse());
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order) {
  if (generators.empty())
    throw Error(ErrorKind::ring_mismatch, "empty generator list has no ring; pass the ring explicitly");
  return buchberger(generators.front().ring(), generators, order);
}

GroebnerBasis buchberger(const RingPtr& base, std::span<const Polynomial> generators,
                         MonomialOrder order) {
  RingPtr ring = base->with_order(order);
  std::vector<Polynomial> basis;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Polynomial h) {
    std::size_t idx = basis.size();
    for (std::size_t i = 0; i < idx; ++i) {
      Monomial l = lcm(basis[i].leading().monomial, h.leading().monomial);
      pairs.push_back({i, idx, l.degree()});
      pending.insert({i, idx});
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : generators) {
    Polynomial p = to_ring(g, ring);
    if (p.is_zero()) continue;
    p = reduce_full(p, basis);
    if (!p.is_zero()) add(make_monic(p));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.contains({std::min(a, b), std::max(a, b)});
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
    });
    Pair pr = *best;
    pairs.erase(best);
    pending.erase({pr.i, pr.j});

    const Monomial& li = basis[pr.i].leading().monomial;
    const Monomial& lj = basis[pr.j].leading().monomial;
    if (coprime(li, lj)) continue;
    Monomial l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      chain = basis[k].leading().monomial.divides(l) && !is_pending(pr.i, k) &&
              !is_pending(pr.j, k);
    }
    if (chain) continue;

    Polynomial r = reduce_full(s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (!r.is_zero()) add(make_monic(r));
  }

  // minimalize: drop generators whose leading monomial is a multiple of another's
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& li = basis[i].leading().monomial;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].leading().monomial;
      redundant = lj.divides(li) && (lj != li || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // interreduce tails
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term& lead = minimal[i].leading();
    Polynomial head = Polynomial::monomial(ring, lead.monomial, lead.coefficient);
    Polynomial tail = reduce_full(minimal[i] - head, others);
    reduced.push_back(make_monic(head + tail));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading().monomial, b.leading().monomial) < 0;
  });
  return GroebnerBasis{ring, std::move(reduced), true};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return reduce_full(to_ring(p, gb.ring), gb.generators);
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return true;
  for (std::size_t v = 0; v < gb.ring->nvars(); ++v) {
    bool found = false;
    for (const auto& g : gb.generators) {
      const Monomial& m = g.leading().monomial;
      bool pure = m[v] > 0;
      for (std::size_t w = 0; w < m.size() && pure; ++w)
        if (w != v && m[w] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> quotient_basis(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb))
    throw Error(ErrorKind::not_zero_dimensional,
                "quotient ring is infinite-dimensional (ideal is not zero-dimensional)");
  std::vector<Monomial> out;
  if (gb.is_unit_ideal()) return out;
  const std::size_t n = gb.ring->nvars();
  auto standard = [&](const Monomial& m) {
    return std::none_of(gb.generators.begin(), gb.generators.end(),
                        [&](const Polynomial& g) { return g.leading().monomial.divides(m); });
  };
  // Depth-first walk; variables are raised in index order from `from` on so
  // each monomial is visited once. Non-standard monomials prune the subtree.
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(n), 0}};
  while (!stack.empty()) {
    auto [m, from] = std::move(stack.back());
    stack.pop_back();
    if (!standard(m)) continue;
    out.push_back(m);
    for (std::size_t v = from; v < n; ++v) {
      Monomial next = m;
      next[v] += 1;
      stack.push_back({std::move(next), v});
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order().compare(a, b) < 0;
  });
  return out;
}

}  // namespace infdef
