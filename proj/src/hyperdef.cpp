#include "infdef/hyperdef.hpp"

#include <algorithm>
#include <map>

#include "infdef/error.hpp"

namespace infdef {

// ------------------------------------------------------------- Tjurina data

TjurinaData tjurina(const Polynomial& f) {
  if (f.is_constant())
    throw Error(ErrorKind::constant_polynomial, "hypersurface equation is constant");
  std::vector<Polynomial> gens{f};
  for (auto& d : jacobian(f)) gens.push_back(std::move(d));
  GroebnerBasis gb = buchberger(f.ring(), gens, f.ring()->order());
  if (!is_zero_dimensional(gb))
    throw Error(ErrorKind::non_isolated,
                "Tjurina algebra of " + f.to_string() +
                    " is infinite-dimensional: singularities are not isolated");
  std::vector<Monomial> basis = quotient_basis(gb);
  return TjurinaData{f, std::move(gb), std::move(basis)};
}

Vector ks_class(const TjurinaData& td, const Polynomial& g) {
  Polynomial r = normal_form(g, td.gb);
  Vector v = zero_vector(td.f.field(), td.basis.size());
  for (const auto& t : r.terms()) {
    auto it = std::find(td.basis.begin(), td.basis.end(), t.monomial);
    v[static_cast<std::size_t>(it - td.basis.begin())] = t.coefficient;
  }
  return v;
}

// -------------------------------------------------------- miniversal family

namespace {

std::vector<std::string> parameter_names(const std::vector<std::string>& vars, std::size_t m) {
  for (std::string prefix : {"t", "s", "u", "v", "w", "param"}) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back(prefix + std::to_string(i));
    bool clash = std::any_of(names.begin(), names.end(), [&](const std::string& n) {
      return std::find(vars.begin(), vars.end(), n) != vars.end();
    });
    if (!clash) return names;
  }
  throw Error(ErrorKind::syntax, "cannot choose parameter names distinct from the variables");
}

}  // namespace

MiniversalFamily miniversal_family(const TjurinaData& td) {
  const RingPtr& ring = td.f.ring();
  const std::size_t n = ring->nvars();
  const std::size_t m = td.tjurina_number();
  const Field& field = ring->field();

  std::vector<std::string> params = parameter_names(ring->variables(), m);
  std::vector<std::string> all = ring->variables();
  all.insert(all.end(), params.begin(), params.end());
  RingPtr family_ring = Ring::make(all, field, ring->order());

  std::vector<std::size_t> embed(n);
  for (std::size_t i = 0; i < n; ++i) embed[i] = i;

  std::vector<Polynomial> directions;
  Polynomial family = td.f.rebase(family_ring, embed);
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial g = Polynomial::monomial(ring, td.basis[i], field.one());
    family += Polynomial::variable(family_ring, n + i) * g.rebase(family_ring, embed);
    directions.push_back(std::move(g));
  }

  // dF/dt_i at t = 0, brought back to k[x]
  std::vector<Polynomial> restrict_images;
  for (std::size_t i = 0; i < n; ++i) restrict_images.push_back(Polynomial::variable(ring, i));
  for (std::size_t i = 0; i < m; ++i) restrict_images.push_back(Polynomial(ring));
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial first_order = family.derivative(n + i).substitute(restrict_images, ring);
    columns.push_back(ks_class(td, first_order));
  }
  Matrix ks = Matrix::from_columns(field, m, columns);
  if (!(ks == Matrix::identity(field, m)))
    throw std::logic_error("Kodaira-Spencer matrix of the miniversal family is not the identity");

  return MiniversalFamily{td.f, family_ring, std::move(params), std::move(directions),
                          std::move(family), std::move(ks)};
}

// ------------------------------------------------------ deformations over A

DeformationOverA::DeformationOverA(FiniteKAlgebra base, std::vector<Polynomial> coefficients)
    : base_(std::move(base)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != base_.dimension())
    throw Error(ErrorKind::parameter_count,
                "deformation needs one coefficient per basis element of the base");
  for (const auto& c : coefficients_)
    if (!(*c.ring() == *coefficients_.front().ring()))
      throw Error(ErrorKind::ring_mismatch, "deformation coefficients from different rings");
  if (!(coefficients_.front().field() == base_.field()))
    throw Error(ErrorKind::ring_mismatch, "base algebra and equation over different fields");
}

DeformationOverA DeformationOverA::trivial(const Polynomial& f, const FiniteKAlgebra& base) {
  std::vector<Polynomial> coeffs(base.dimension(), Polynomial(f.ring()));
  coeffs[0] = f;
  return DeformationOverA(base, std::move(coeffs));
}

std::string DeformationOverA::to_string() const {
  std::string out = coefficients_.front().to_string();
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    out += "+(" + base_.labels()[i] + ")*(" + coefficients_[i].to_string() + ")";
  }
  return out;
}

DeformationOverA pushforward(const DeformationOverA& d, const AlgebraMorphism& phi) {
  if (!(phi.source() == d.base()))
    throw Error(ErrorKind::target_mismatch, "morphism does not start at the deformation's base");
  const Matrix& m = phi.matrix();
  std::vector<Polynomial> coeffs;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    Polynomial c(d.ring());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) c += m(k, j) * d.coefficients()[j];
    coeffs.push_back(std::move(c));
  }
  return DeformationOverA(phi.target(), std::move(coeffs));
}

DeformationOverA specialize_family(const MiniversalFamily& mf, const FiniteKAlgebra& base,
                                   std::span<const Vector> assignment) {
  const std::size_t m = mf.parameter_count();
  if (assignment.size() != m)
    throw Error(ErrorKind::parameter_count,
                "expected " + std::to_string(m) + " parameter values, got " +
                    std::to_string(assignment.size()));
  for (const auto& a : assignment) {
    if (a.size() != base.dimension())
      throw Error(ErrorKind::parameter_count, "parameter value has wrong length for the base");
    if (!base.in_maximal_ideal(a))
      throw Error(ErrorKind::not_in_maximal_ideal,
                  "parameter value " + base.format(a) + " is not in the maximal ideal");
  }
  const RingPtr& ring = mf.f.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::vector<Term>> coeff_terms(base.dimension());
  for (const auto& t : mf.family.terms()) {
    Monomial x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = t.monomial[i];
    Vector element = base.one();
    for (std::size_t i = 0; i < m; ++i)
      if (t.monomial[n + i] != 0)
        element = base.multiply(element, base.power(assignment[i], t.monomial[n + i]));
    for (std::size_t k = 0; k < element.size(); ++k)
      if (!element[k].is_zero()) coeff_terms[k].push_back({x, t.coefficient * element[k]});
  }
  std::vector<Polynomial> coeffs;
  for (auto& terms : coeff_terms) coeffs.emplace_back(ring, std::move(terms));
  return DeformationOverA(base, std::move(coeffs));
}

Matrix linear_section(const AlgebraMorphism& ext) {
  if (!ext.is_surjective())
    throw Error(ErrorKind::not_surjective, "extension is not surjective");
  const FiniteKAlgebra& src = ext.source();
  const FiniteKAlgebra& tgt = ext.target();
  const Field& field = src.field();
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < tgt.dimension(); ++j) {
    if (j == 0) {
      columns.push_back(src.one());
      continue;
    }
    Vector target_e = tgt.basis_element(j);
    const auto& labels = src.labels();
    auto it = std::find(labels.begin(), labels.end(), tgt.labels()[j]);
    if (it != labels.end()) {
      auto idx = static_cast<std::size_t>(it - labels.begin());
      if (ext.matrix().column(idx) == target_e) {
        columns.push_back(src.basis_element(idx));
        continue;
      }
    }
    // restrict to the maximal ideal so that s(e_j) stays in m_A'
    Matrix restricted(field, tgt.dimension(), src.dimension() - 1);
    for (std::size_t r = 0; r < tgt.dimension(); ++r)
      for (std::size_t c = 1; c < src.dimension(); ++c) restricted(r, c - 1) = ext.matrix()(r, c);
    auto x = solve(restricted, target_e);
    if (!x) throw Error(ErrorKind::not_surjective, "maximal ideal does not surject");
    Vector lift = zero_vector(field, src.dimension());
    for (std::size_t c = 1; c < src.dimension(); ++c) lift[c] = (*x)[c - 1];
    columns.push_back(std::move(lift));
  }
  return Matrix::from_columns(field, src.dimension(), columns);
}

DeformationOverA lift_deformation(const DeformationOverA& d, const AlgebraMorphism& ext) {
  if (!(ext.target() == d.base()))
    throw Error(ErrorKind::target_mismatch, "extension does not end at the deformation's base");
  if (!ext.is_surjective())
    throw Error(ErrorKind::not_surjective, "extension is not surjective");
  if (!ext.is_small())
    throw Error(ErrorKind::not_small, "extension kernel is not annihilated by the maximal ideal");
  Matrix section = linear_section(ext);
  std::vector<Polynomial> coeffs;
  for (std::size_t k = 0; k < section.rows(); ++k) {
    Polynomial c(d.ring());
    for (std::size_t j = 0; j < section.cols(); ++j)
      if (!section(k, j).is_zero()) c += section(k, j) * d.coefficients()[j];
    coeffs.push_back(std::move(c));
  }
  return DeformationOverA(ext.source(), std::move(coeffs));
}

GluedDeformation glue_deformations(const DeformationOverA& left, const DeformationOverA& right,
                                   const AlgebraMorphism& p, const AlgebraMorphism& q) {
  if (!(*left.ring() == *right.ring()))
    throw Error(ErrorKind::ring_mismatch, "deformations live in different polynomial rings");
  if (!(pushforward(left, p) == pushforward(right, q)))
    throw Error(ErrorKind::incompatible, "deformations disagree over the common base");
  FiberedProduct fp = fibered_product(p, q);
  const RingPtr& ring = left.ring();
  const Field& field = ring->field();
  const std::size_t d1 = left.base().dimension();
  const std::size_t d2 = right.base().dimension();

  // collect coefficient vectors per x-monomial
  std::map<Monomial, std::pair<Vector, Vector>> per_monomial;
  auto slot = [&](const Monomial& m) -> std::pair<Vector, Vector>& {
    auto [it, inserted] =
        per_monomial.try_emplace(m, zero_vector(field, d1), zero_vector(field, d2));
    return it->second;
  };
  for (std::size_t k = 0; k < d1; ++k)
    for (const auto& t : left.coefficients()[k].terms()) slot(t.monomial).first[k] = t.coefficient;
  for (std::size_t k = 0; k < d2; ++k)
    for (const auto& t : right.coefficients()[k].terms())
      slot(t.monomial).second[k] = t.coefficient;

  std::vector<std::vector<Term>> coeff_terms(fp.algebra.dimension());
  for (const auto& [mono, pair] : per_monomial) {
    Vector coords = fp.coordinates(pair.first, pair.second);
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) coeff_terms[k].push_back({mono, coords[k]});
  }
  std::vector<Polynomial> coeffs;
  for (auto& terms : coeff_terms) coeffs.emplace_back(ring, std::move(terms));
  DeformationOverA glued(fp.algebra, std::move(coeffs));
  return GluedDeformation{std::move(fp), std::move(glued)};
}

// ------------------------------------------------------------------- mu(I)

namespace {

// All monomials of degree < bound, indexed.
std::map<Monomial, std::size_t> monomials_below(std::size_t nvars, unsigned bound) {
  std::map<Monomial, std::size_t> index;
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(nvars), 0}};
  while (!stack.empty()) {
    auto [m, from] = std::move(stack.back());
    stack.pop_back();
    if (m.degree() >= bound) continue;
    index.emplace(m, 0);
    for (std::size_t v = from; v < nvars; ++v) {
      Monomial next = m;
      next[v] += 1;
      stack.push_back({std::move(next), v});
    }
  }
  std::size_t i = 0;
  for (auto& [m, idx] : index) idx = i++;
  return index;
}

std::size_t mu_at(const RingPtr& ring, std::span<const Polynomial> gens, unsigned n_trunc) {
  const Field& field = ring->field();
  auto index = monomials_below(ring->nvars(), n_trunc);
  const std::size_t dim = index.size();
  auto truncate = [&](const Polynomial& g, const Monomial& shift) {
    Vector v = zero_vector(field, dim);
    for (const auto& t : g.terms()) {
      Monomial m = t.monomial * shift;
      if (m.degree() >= n_trunc) continue;
      v[index.at(m)] = t.coefficient;
    }
    return v;
  };
  Subspace ideal(field, dim), m_ideal(field, dim);
  for (const auto& g : gens)
    for (const auto& [shift, idx] : index) {
      (void)idx;
      Vector v = truncate(g, shift);
      if (is_zero(v)) continue;
      ideal.insert(v);
      if (!shift.is_one()) m_ideal.insert(std::move(v));
    }
  return ideal.dimension() - m_ideal.dimension();
}

}  // namespace

MuResult mu_generators(const RingPtr& ring, std::span<const Polynomial> generators,
                       MuOptions options) {
  std::uint64_t max_degree = 0;
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    if (!(*g.ring() == *ring))
      throw Error(ErrorKind::ring_mismatch, "generator from a different ring");
    if (!g.coefficient(Monomial(ring->nvars())).is_zero())
      throw Error(ErrorKind::not_in_maximal_ideal,
                  "generator " + g.to_string() + " has a nonzero constant term");
    if (g.is_zero()) continue;
    max_degree = std::max(max_degree, g.total_degree());
    gens.push_back(g);
  }
  MuResult result;
  unsigned n = static_cast<unsigned>(max_degree) + 2;
  while (true) {
    if (n + 2 > options.truncation_cap)
      throw Error(ErrorKind::no_stabilization,
                  "mu(I) did not stabilize below truncation cap " +
                      std::to_string(options.truncation_cap));
    std::size_t a = mu_at(ring, gens, n);
    std::size_t b = mu_at(ring, gens, n + 1);
    std::size_t c = mu_at(ring, gens, n + 2);
    result.history.push_back({n, a});
    result.history.push_back({n + 1, b});
    result.history.push_back({n + 2, c});
    if (a == b && b == c) {
      result.value = c;
      return result;
    }
    n *= 2;
  }
}

}  // namespace infdef
