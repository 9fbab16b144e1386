#include "infdef/artin.hpp"

#include <algorithm>
#include <map>

#include "infdef/error.hpp"

namespace infdef {

// ---------------------------------------------------------- FiniteKAlgebra

FiniteKAlgebra::FiniteKAlgebra(Field field, std::vector<std::string> labels,
                               std::vector<std::vector<Vector>> table)
    : field_(field), labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw Error(ErrorKind::invalid_algebra, "algebra must have positive dimension");
  if (table_.size() != d)
    throw Error(ErrorKind::invalid_algebra, "structure table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != d)
      throw Error(ErrorKind::invalid_algebra, "structure table has wrong number of columns");
    for (const auto& v : row) {
      if (v.size() != d)
        throw Error(ErrorKind::invalid_algebra, "structure constant vector has wrong length");
      for (const auto& s : v)
        if (!(s.field() == field_))
          throw Error(ErrorKind::invalid_algebra, "structure constant from another field");
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!(table_[0][i] == basis_element(i)) || !(table_[i][0] == basis_element(i)))
      throw Error(ErrorKind::invalid_algebra, "e0 is not the identity");
    for (std::size_t j = 0; j < d; ++j)
      if (!(table_[i][j] == table_[j][i]))
        throw Error(ErrorKind::invalid_algebra, "multiplication is not commutative");
  }
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 1; j < d; ++j)
      if (!table_[i][j][0].is_zero())
        throw Error(ErrorKind::invalid_algebra,
                    "span of e1.. is not closed under multiplication");
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 1; j < d; ++j)
      for (std::size_t l = 1; l < d; ++l) {
        Vector left = multiply(table_[i][j], basis_element(l));
        Vector right = multiply(basis_element(i), table_[j][l]);
        if (!(left == right))
          throw Error(ErrorKind::invalid_algebra, "multiplication is not associative");
      }
  // order: least n with m^(n+1) = 0
  Subspace power = maximal_ideal_power(1);
  std::size_t n = 0;
  while (power.dimension() > 0) {
    if (n >= d)
      throw Error(ErrorKind::invalid_algebra, "maximal ideal is not nilpotent");
    power = maximal_ideal_times(power);
    ++n;
  }
  order_ = n;
}

FiniteKAlgebra FiniteKAlgebra::residue_field(const Field& field) {
  return FiniteKAlgebra(field, {"1"}, {{{field.one()}}});
}

std::vector<std::size_t> FiniteKAlgebra::maximal_ideal_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i < dimension(); ++i) idx.push_back(i);
  return idx;
}

Vector FiniteKAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dimension();
  if (a.size() != d || b.size() != d)
    throw Error(ErrorKind::ring_mismatch, "algebra element has wrong length");
  Vector out = zero_vector(field_, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const Vector& e = table_[i][j];
      for (std::size_t k = 0; k < d; ++k)
        if (!e[k].is_zero()) out[k] += c * e[k];
    }
  }
  return out;
}

Vector FiniteKAlgebra::power(const Vector& a, std::uint64_t e) const {
  Vector result = one();
  for (std::uint64_t i = 0; i < e; ++i) result = multiply(result, a);
  return result;
}

Subspace FiniteKAlgebra::maximal_ideal_times(const Subspace& s) const {
  Subspace out(field_, dimension());
  for (const auto& v : s.basis())
    for (std::size_t i = 1; i < dimension(); ++i) out.insert(multiply(basis_element(i), v));
  return out;
}

Subspace FiniteKAlgebra::maximal_ideal_power(std::size_t k) const {
  Subspace s(field_, dimension());
  if (k == 0) {
    for (std::size_t i = 0; i < dimension(); ++i) s.insert(basis_element(i));
    return s;
  }
  for (std::size_t i = 1; i < dimension(); ++i) s.insert(basis_element(i));
  for (std::size_t p = 1; p < k && s.dimension() > 0; ++p) s = maximal_ideal_times(s);
  return s;
}

std::string FiniteKAlgebra::format(const Vector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (labels_[i] == "1")
      out += c;
    else
      out += (c == "1" ? "" : c + "*") + labels_[i];
  }
  return out.empty() ? "0" : out;
}

// --------------------------------------------------------- AlgebraMorphism

AlgebraMorphism::AlgebraMorphism(FiniteKAlgebra source, FiniteKAlgebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dimension() || matrix_.cols() != source_.dimension())
    throw Error(ErrorKind::invalid_morphism, "morphism matrix has wrong shape");
  if (!(source_.field() == target_.field()) || !(matrix_.field() == source_.field()))
    throw Error(ErrorKind::invalid_morphism, "morphism between algebras over different fields");
  if (!(matrix_.column(0) == target_.one()))
    throw Error(ErrorKind::invalid_morphism, "morphism does not send 1 to 1");
  for (std::size_t i = 1; i < source_.dimension(); ++i)
    if (!target_.in_maximal_ideal(matrix_.column(i)))
      throw Error(ErrorKind::invalid_morphism, "morphism does not preserve maximal ideals");
  for (std::size_t i = 1; i < source_.dimension(); ++i)
    for (std::size_t j = i; j < source_.dimension(); ++j) {
      Vector lhs = apply(source_.product(i, j));
      Vector rhs = target_.multiply(matrix_.column(i), matrix_.column(j));
      if (!(lhs == rhs))
        throw Error(ErrorKind::invalid_morphism, "morphism is not multiplicative");
    }
}

AlgebraMorphism AlgebraMorphism::identity(const FiniteKAlgebra& a) {
  return AlgebraMorphism(a, a, Matrix::identity(a.field(), a.dimension()));
}

AlgebraMorphism AlgebraMorphism::augmentation(const FiniteKAlgebra& a) {
  Matrix m(a.field(), 1, a.dimension());
  m(0, 0) = a.field().one();
  return AlgebraMorphism(a, FiniteKAlgebra::residue_field(a.field()), std::move(m));
}

bool AlgebraMorphism::is_surjective() const { return rank(matrix_) == target_.dimension(); }

Subspace AlgebraMorphism::kernel() const {
  return Subspace::span(source_.field(), source_.dimension(), nullspace(matrix_));
}

bool AlgebraMorphism::is_small() const {
  if (!is_surjective()) return false;
  return source_.maximal_ideal_times(kernel()).dimension() == 0;
}

bool AlgebraMorphism::is_tiny() const { return is_small() && kernel().dimension() == 1; }

AlgebraMorphism AlgebraMorphism::after(const AlgebraMorphism& inner) const {
  if (!(inner.target_ == source_))
    throw Error(ErrorKind::target_mismatch, "morphisms are not composable");
  return AlgebraMorphism(inner.source_, target_, matrix_ * inner.matrix_);
}

// -------------------------------------------------------- PresentedAlgebra

Vector PresentedAlgebra::coordinates(const Polynomial& p) const {
  Polynomial r = normal_form(p, gb);
  Vector v = zero_vector(ring->field(), basis.size());
  for (const auto& t : r.terms()) {
    auto it = std::find(basis.begin(), basis.end(), t.monomial);
    v[static_cast<std::size_t>(it - basis.begin())] = t.coefficient;
  }
  return v;
}

Polynomial PresentedAlgebra::representative(const Vector& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.push_back({basis[i], v[i]});
  return Polynomial(ring, std::move(terms));
}

PresentedAlgebra present_quotient(const RingPtr& ring, std::span<const Polynomial> generators) {
  GroebnerBasis gb = buchberger(ring, generators, ring->order());
  if (gb.is_unit_ideal())
    throw Error(ErrorKind::residue_field, "ideal is the unit ideal; the quotient is zero");
  if (!is_zero_dimensional(gb))
    throw Error(ErrorKind::not_artinian, "quotient is infinite-dimensional");
  std::vector<Monomial> basis = quotient_basis(gb);
  const std::size_t d = basis.size();
  const RingPtr& gring = gb.ring;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    Polynomial xp = Polynomial::monomial(gring, Monomial::variable(ring->nvars(), v,
                                                                   static_cast<std::uint32_t>(d)),
                                         ring->field().one());
    if (!normal_form(xp, gb).is_zero())
      throw Error(ErrorKind::residue_field,
                  "quotient is not local at the origin (" + ring->variables()[v] +
                      " is not nilpotent)");
  }
  std::vector<std::string> labels;
  for (const auto& m : basis) labels.push_back(ring->format(m));
  PresentedAlgebra pa{gring, gb, basis, FiniteKAlgebra::residue_field(ring->field())};
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Polynomial prod = Polynomial::monomial(gring, basis[i] * basis[j], ring->field().one());
      table[i][j] = pa.coordinates(prod);
      table[j][i] = table[i][j];
    }
  pa.algebra = FiniteKAlgebra(ring->field(), std::move(labels), std::move(table));
  return pa;
}

FiniteKAlgebra algebra_from_quotient(const RingPtr& ring, std::span<const Polynomial> generators) {
  return present_quotient(ring, generators).algebra;
}

AlgebraMorphism morphism_from_images(const PresentedAlgebra& source,
                                     const PresentedAlgebra& target,
                                     std::span<const Polynomial> images) {
  if (images.size() != source.ring->nvars())
    throw Error(ErrorKind::invalid_morphism, "need one image per source variable");
  std::vector<Polynomial> imgs;
  for (const auto& p : images) imgs.push_back(Polynomial(target.ring, p.terms()));
  for (const auto& g : source.gb.generators)
    if (!is_zero(target.coordinates(g.substitute(imgs, target.ring))))
      throw Error(ErrorKind::invalid_morphism,
                  "generator " + g.to_string() + " does not map to zero");
  std::vector<Vector> columns;
  for (const auto& m : source.basis) {
    Polynomial mono = Polynomial::monomial(source.ring, m, source.ring->field().one());
    columns.push_back(target.coordinates(mono.substitute(imgs, target.ring)));
  }
  return AlgebraMorphism(source.algebra, target.algebra,
                         Matrix::from_columns(source.ring->field(),
                                              target.algebra.dimension(), columns));
}

// ---------------------------------------------------------- FiberedProduct

FiberedProduct fibered_product(const AlgebraMorphism& p, const AlgebraMorphism& q) {
  if (!(p.target() == q.target()))
    throw Error(ErrorKind::target_mismatch, "morphisms have different targets");
  if (!q.is_surjective())
    throw Error(ErrorKind::not_surjective, "second morphism is not surjective");
  const FiniteKAlgebra& left = p.source();
  const FiniteKAlgebra& right = q.source();
  const Field& field = left.field();
  const std::size_t d1 = left.dimension();
  const std::size_t d2 = right.dimension();
  const std::size_t d = p.target().dimension();

  // constraint p(a') - q(a'') = 0 restricted to m' + m''
  Matrix constraint(field, d, (d1 - 1) + (d2 - 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 1; c < d1; ++c) constraint(r, c - 1) = p.matrix()(r, c);
    for (std::size_t c = 1; c < d2; ++c) constraint(r, d1 - 1 + c - 1) = -q.matrix()(r, c);
  }
  std::vector<Vector> kernel = nullspace(constraint);

  std::vector<Vector> basis;  // elements of A' + A''
  Vector unit = zero_vector(field, d1 + d2);
  unit[0] = field.one();
  unit[d1] = field.one();
  basis.push_back(unit);
  for (const auto& k : kernel) {
    Vector v = zero_vector(field, d1 + d2);
    for (std::size_t c = 1; c < d1; ++c) v[c] = k[c - 1];
    for (std::size_t c = 1; c < d2; ++c) v[d1 + c] = k[d1 - 1 + c - 1];
    basis.push_back(std::move(v));
  }
  const std::size_t db = basis.size();
  if (db != d1 + d2 - d)
    throw Error(ErrorKind::invalid_morphism, "fibered product has unexpected dimension");

  auto split = [&](const Vector& v) {
    return std::pair{Vector(v.begin(), v.begin() + static_cast<long>(d1)),
                     Vector(v.begin() + static_cast<long>(d1), v.end())};
  };
  Matrix embedding = Matrix::from_columns(field, d1 + d2, basis);

  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < db; ++i) {
    auto [a, b] = split(basis[i]);
    labels.push_back("(" + left.format(a) + "," + right.format(b) + ")");
  }
  std::vector<std::vector<Vector>> table(db, std::vector<Vector>(db));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = i; j < db; ++j) {
      auto [ai, bi] = split(basis[i]);
      auto [aj, bj] = split(basis[j]);
      Vector prod = left.multiply(ai, aj);
      Vector prod2 = right.multiply(bi, bj);
      prod.insert(prod.end(), prod2.begin(), prod2.end());
      auto coords = solve(embedding, prod);
      if (!coords) throw Error(ErrorKind::invalid_algebra, "fibered product not closed under products");
      table[i][j] = *coords;
      table[j][i] = *coords;
    }
  FiniteKAlgebra b(field, std::move(labels), std::move(table));

  Matrix to_left(field, d1, db), to_right(field, d2, db);
  for (std::size_t c = 0; c < db; ++c) {
    for (std::size_t r = 0; r < d1; ++r) to_left(r, c) = basis[c][r];
    for (std::size_t r = 0; r < d2; ++r) to_right(r, c) = basis[c][d1 + r];
  }
  return FiberedProduct{p,
                        q,
                        b,
                        AlgebraMorphism(b, left, std::move(to_left)),
                        AlgebraMorphism(b, right, std::move(to_right)),
                        std::move(embedding)};
}

Vector FiberedProduct::coordinates(const Vector& left, const Vector& right) const {
  if (!(left_map.apply(left) == right_map.apply(right)))
    throw Error(ErrorKind::incompatible, "pair does not agree over the common target");
  Vector v = left;
  v.insert(v.end(), right.begin(), right.end());
  auto coords = solve(embedding, v);
  if (!coords) throw Error(ErrorKind::incompatible, "pair is not in the fibered product");
  return *coords;
}

AlgebraMorphism FiberedProduct::induced(const AlgebraMorphism& u, const AlgebraMorphism& v) const {
  if (!(u.source() == v.source()))
    throw Error(ErrorKind::target_mismatch, "morphisms have different sources");
  if (!(u.target() == left_map.source()) || !(v.target() == right_map.source()))
    throw Error(ErrorKind::target_mismatch, "morphisms do not land in the factors");
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < u.source().dimension(); ++c)
    columns.push_back(coordinates(u.matrix().column(c), v.matrix().column(c)));
  return AlgebraMorphism(u.source(), algebra,
                         Matrix::from_columns(algebra.field(), algebra.dimension(), columns));
}

// ----------------------------------------------------- small extensions

QuotientByIdeal quotient_by_ideal(const FiniteKAlgebra& a, const Subspace& ideal) {
  const std::size_t d = a.dimension();
  std::vector<bool> pivot(d, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  if (pivot[0]) throw Error(ErrorKind::invalid_algebra, "ideal is not inside the maximal ideal");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d; ++i)
    if (!pivot[i]) keep.push_back(i);
  auto project = [&](const Vector& v) {
    Vector r = ideal.reduce(v);
    Vector out;
    out.reserve(keep.size());
    for (auto i : keep) out.push_back(r[i]);
    return out;
  };
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(a.labels()[i]);
  std::vector<std::vector<Vector>> table(keep.size(), std::vector<Vector>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      table[i][j] = project(a.product(keep[i], keep[j]));
  FiniteKAlgebra q(a.field(), std::move(labels), std::move(table));
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < d; ++i) columns.push_back(project(a.basis_element(i)));
  Matrix m = Matrix::from_columns(a.field(), keep.size(), columns);
  return {q, AlgebraMorphism(a, q, std::move(m))};
}

AlgebraMorphism SmallExtensionChain::composite() const {
  // an isomorphism factors through no tiny extension at all
  if (steps.empty()) return original;
  AlgebraMorphism c = AlgebraMorphism::identity(original.source());
  for (const auto& step : steps) c = step.after(c);
  return c;
}

SmallExtensionChain factor_small_extension(const AlgebraMorphism& phi) {
  if (!phi.is_surjective())
    throw Error(ErrorKind::not_surjective, "morphism is not surjective");
  const FiniteKAlgebra& a = phi.source();
  const Field& field = a.field();

  // filtration levels K, mK, m^2 K, ..., 0
  std::vector<Subspace> levels{phi.kernel()};
  while (levels.back().dimension() > 0) levels.push_back(a.maximal_ideal_times(levels.back()));

  // ideals K = J_0 > J_1 > ... > J_r = 0, each of codimension one in the last
  std::vector<Subspace> ideals;
  for (std::size_t s = 0; s + 1 < levels.size(); ++s) {
    const Subspace& next = levels[s + 1];
    std::vector<Vector> complement;
    Subspace probe = next;
    for (const auto& v : levels[s].basis())
      if (probe.insert(v)) complement.push_back(v);
    // drop the complement lines one at a time, earliest first
    for (std::size_t i = 0; i < complement.size(); ++i) {
      Subspace j = next;
      for (std::size_t t = i; t < complement.size(); ++t) j.insert(complement[t]);
      ideals.push_back(std::move(j));
    }
  }

  SmallExtensionChain chain{phi, {}};
  const std::size_t r = ideals.size();
  if (r == 0) return chain;
  // quotients Q_i = A / J_i for i = 1..r-1; Q_r = A
  std::vector<QuotientByIdeal> quotients;
  for (std::size_t i = 1; i < r; ++i) quotients.push_back(quotient_by_ideal(a, ideals[i]));
  auto algebra_at = [&](std::size_t i) -> const FiniteKAlgebra& {
    return i == r ? a : quotients[i - 1].algebra;
  };
  auto projection_to = [&](std::size_t i) -> const AlgebraMorphism& {
    return quotients[i - 1].projection;
  };
  // basis index (in A) of the k-th basis element of Q_i
  auto lift_index = [&](std::size_t i) {
    std::vector<std::size_t> idx;
    const Subspace& j = i == r ? Subspace(field, a.dimension()) : ideals[i];
    std::vector<bool> pivot(a.dimension(), false);
    for (auto p : j.pivots()) pivot[p] = true;
    for (std::size_t k = 0; k < a.dimension(); ++k)
      if (!pivot[k]) idx.push_back(k);
    return idx;
  };
  for (std::size_t i = r; i >= 2; --i) {
    auto idx = lift_index(i);
    std::vector<Vector> columns;
    for (auto k : idx) columns.push_back(projection_to(i - 1).apply(a.basis_element(k)));
    chain.steps.emplace_back(algebra_at(i), algebra_at(i - 1),
                             Matrix::from_columns(field, algebra_at(i - 1).dimension(), columns));
  }
  {
    auto idx = lift_index(1);
    std::vector<Vector> columns;
    for (auto k : idx) columns.push_back(phi.apply(a.basis_element(k)));
    chain.steps.emplace_back(algebra_at(1), phi.target(),
                             Matrix::from_columns(field, phi.target().dimension(), columns));
  }
  return chain;
}

}  // namespace infdef
