#include "infdef/projcoh.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <gmpxx.h>

#include "infdef/error.hpp"

namespace infdef {

namespace {

std::uint64_t to_u64(const mpz_class& z) {
  if (z < 0 || !z.fits_ulong_p())
    throw Error(ErrorKind::out_of_range, "dimension does not fit in 64 bits");
  return z.get_ui();
}

mpz_class binomial(long top, long bottom) {
  if (bottom < 0 || top < bottom) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return r;
}

void check_query(const CohomologyQuery& q) {
  if (q.n < 1) throw Error(ErrorKind::out_of_range, "projective dimension must be at least 1");
  if (q.q < 0 || q.q > q.n)
    throw Error(ErrorKind::out_of_range, "cohomological degree out of range [0, n]");
}

std::uint64_t formula_dim(const CohomologyQuery& query) {
  const int n = query.n, d = query.d;
  if (query.q == 0) return d >= 0 ? to_u64(binomial(n + d, n)) : 0;
  if (query.q == n) {
    long dual = -static_cast<long>(d) - n - 1;
    return dual >= 0 ? to_u64(binomial(n + dual, n)) : 0;
  }
  return 0;
}

// Cech complex of the standard cover restricted to Laurent multidegrees with
// negative support exactly `negative` (a bitmask over 0..n). Cochains in
// degree p are indexed by (p+1)-subsets containing the negative support.
std::vector<std::uint64_t> cech_block_cohomology(int n, unsigned negative, const Field& field) {
  const unsigned vertices = static_cast<unsigned>(n + 1);
  std::vector<std::vector<unsigned>> cells(vertices);  // cells[p] = subsets of size p+1
  for (unsigned s = 1; s < (1u << vertices); ++s) {
    if ((s & negative) != negative) continue;
    cells[static_cast<unsigned>(__builtin_popcount(s)) - 1].push_back(s);
  }
  std::vector<std::size_t> ranks(vertices, 0);  // rank of d^p: C^p -> C^{p+1}
  for (unsigned p = 0; p + 1 < vertices; ++p) {
    const auto& src = cells[p];
    const auto& dst = cells[p + 1];
    if (src.empty() || dst.empty()) continue;
    std::map<unsigned, std::size_t> src_index;
    for (std::size_t i = 0; i < src.size(); ++i) src_index[src[i]] = i;
    Matrix m(field, dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r) {
      unsigned face = dst[r];
      int position = 0;
      for (unsigned j = 0; j < vertices; ++j) {
        if (!(face & (1u << j))) continue;
        unsigned sub = face & ~(1u << j);
        auto it = src_index.find(sub);
        if (it != src_index.end()) m(r, it->second) = field.from_int(position % 2 == 0 ? 1 : -1);
        ++position;
      }
    }
    ranks[p] = rank(m);
  }
  std::vector<std::uint64_t> h(vertices, 0);
  for (unsigned q = 0; q < vertices; ++q) {
    std::size_t dim = cells[q].size();
    std::size_t out = ranks[q];
    std::size_t in = q == 0 ? 0 : ranks[q - 1];
    h[q] = dim - out - in;
  }
  return h;
}

// Number of a in [-bound, bound]^(n+1) with sum d whose negative support is
// exactly `negative`.
mpz_class multidegree_count(int n, unsigned negative, int d, int bound) {
  const int vertices = n + 1;
  const int offset = vertices * bound;
  std::vector<mpz_class> ways(static_cast<std::size_t>(2 * offset + 1), 0);
  ways[static_cast<std::size_t>(offset)] = 1;
  for (int j = 0; j < vertices; ++j) {
    bool neg = (negative >> j) & 1u;
    int lo = neg ? -bound : 0;
    int hi = neg ? -1 : bound;
    std::vector<mpz_class> next(ways.size(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s) {
      if (ways[s] == 0) continue;
      for (int a = lo; a <= hi; ++a) {
        long t = static_cast<long>(s) + a;
        if (t < 0 || t >= static_cast<long>(ways.size())) continue;
        next[static_cast<std::size_t>(t)] += ways[s];
      }
    }
    ways = std::move(next);
  }
  long idx = static_cast<long>(offset) + d;
  if (idx < 0 || idx >= static_cast<long>(ways.size())) return 0;
  return ways[static_cast<std::size_t>(idx)];
}

std::uint64_t cech_dim(const CohomologyQuery& query) {
  const int n = query.n, d = query.d;
  if (std::abs(d) > kCechMaxTwist || n > kCechMaxDimension)
    throw Error(ErrorKind::truncation_overflow,
                "Cech oracle supports |d| <= " + std::to_string(kCechMaxTwist) +
                    " and n <= " + std::to_string(kCechMaxDimension));
  const int bound = std::abs(d) + n + 1;
  const Field field = Field::rationals();
  mpz_class total = 0;
  for (unsigned negative = 0; negative < (1u << (n + 1)); ++negative) {
    auto h = cech_block_cohomology(n, negative, field);
    if (h[static_cast<std::size_t>(query.q)] == 0) continue;
    total += multidegree_count(n, negative, d, bound) * h[static_cast<std::size_t>(query.q)];
  }
  return to_u64(total);
}

}  // namespace

std::uint64_t coh_dim(const CohomologyQuery& query, CohMethod method) {
  check_query(query);
  return method == CohMethod::formula ? formula_dim(query) : cech_dim(query);
}

std::int64_t euler_characteristic(int n, int d) {
  if (d >= 0) return binomial(n + d, n).get_si();
  if (d >= -n) return 0;
  mpz_class v = binomial(-d - 1, n);
  return (n % 2 == 0 ? v : -v).get_si();
}

namespace {

// Exponent vectors of degree `degree` in `vars` variables, lex descending.
std::vector<std::vector<int>> monomials_of_degree(int vars, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == vars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace

GradedMultiplicationMap multiplication_map(int n, int source_degree) {
  const Field field = Field::rationals();
  auto src = monomials_of_degree(n + 1, source_degree);
  auto dst = monomials_of_degree(n + 1, source_degree + 1);
  std::map<std::vector<int>, std::size_t> dst_index;
  for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = i;
  Matrix m(field, dst.size(), src.size() * static_cast<std::size_t>(n + 1));
  for (int var = 0; var <= n; ++var)
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto e = src[c];
      e[static_cast<std::size_t>(var)] += 1;
      m(dst_index.at(e), static_cast<std::size_t>(var) * src.size() + c) = field.one();
    }
  return GradedMultiplicationMap{n, source_degree, std::move(m)};
}

bool delta_surjective(int n, int d, DeltaMethod method) {
  if (n < 2 || d < 1) throw Error(ErrorKind::out_of_range, "need n >= 2 and d >= 1");
  if (method == DeltaMethod::closed_form)
    return (n == 2 && d <= 4) || (n == 3 && d != 4) || n >= 4;

  if (n == 2) {
    // coker(delta) is dual to the kernel of H^0(O(d-4))^3 -> H^0(O(d-3))
    GradedMultiplicationMap map = multiplication_map(2, d - 4);
    return map.matrix.cols() - rank(map.matrix) == 0;
  }
  if (n == 3) {
    // coker(delta) is dual to the cokernel of H^0(O(d-5))^4 -> H^0(O(d-4))
    GradedMultiplicationMap map = multiplication_map(3, d - 5);
    return map.matrix.rows() - rank(map.matrix) == 0;
  }
  // n >= 4: coker(delta) sits between H^2(O(1-d))^(n+1) and H^3(O(-d))
  std::uint64_t left = coh_dim({n, 1 - d, 2});
  std::uint64_t right = coh_dim({n, -d, 3});
  if (left == 0 && right == 0) return true;
  throw std::logic_error("unexpected nonvanishing intermediate cohomology");
}

HypersurfaceReport hypersurface_report(int n, int d) {
  if (n < 2 || d < 1) throw Error(ErrorKind::out_of_range, "need n >= 2 and d >= 1");
  // 0 -> O -> O(d) -> O_Z(d) -> 0, multiplication by the equation
  const std::uint64_t h0_o = coh_dim({n, 0, 0});
  const std::uint64_t h0_od = coh_dim({n, d, 0});
  const std::uint64_t h1_o = coh_dim({n, 0, 1});
  const std::uint64_t h1_od = coh_dim({n, d, 1});
  const std::uint64_t h2_o = coh_dim({n, 0, 2});
  if (h1_o != 0 || h1_od != 0 || h2_o != 0)
    throw std::logic_error("twisting sequence does not determine h^0, h^1 of O_Z(d)");

  HypersurfaceReport report;
  report.n = n;
  report.d = d;
  report.hilb_tangent_dim = h0_od - h0_o;
  report.hilb_obstruction_dim = 0;
  report.delta_surjective = delta_surjective(n, d, DeltaMethod::linear_algebra);
  report.all_deformations_embedded = report.delta_surjective;
  report.citations = {
      "hilbert-tangent: H^0(Z, N) with N = O_Z(d)",
      "hilbert-obstruction: H^1(Z, N) = 0",
      "delta-surjectivity: coker(delta) = H^2(P^n, T(-d))",
      "embedded-deformations: every abstract deformation embeds iff delta is surjective",
  };
  return report;
}

std::uint64_t curve_moduli_dim(int genus) {
  if (genus < 0) throw Error(ErrorKind::out_of_range, "genus must be non-negative");
  // chi(T) = deg T + 1 - g with deg T = 2 - 2g
  const std::int64_t g = genus;
  const std::int64_t chi = (2 - 2 * g) + 1 - g;
  std::int64_t h0 = 0;
  if (g == 0) h0 = 3;       // T = O(2) on P^1
  else if (g == 1) h0 = 1;  // T trivial
  return static_cast<std::uint64_t>(h0 - chi);
}

NormalChi chi_normal_p3(int d, int genus) {
  if (d < 1) throw Error(ErrorKind::out_of_range, "degree must be positive");
  if (genus < 0) throw Error(ErrorKind::out_of_range, "genus must be non-negative");
  auto chi = [&](std::int64_t degree) { return degree + 1 - genus; };
  NormalChi r;
  r.twisted_term = 4 * chi(d);
  r.structure_term = chi(0);
  r.tangent_term = chi(2 - 2 * static_cast<std::int64_t>(genus));
  r.total = r.twisted_term - r.structure_term - r.tangent_term;
  return r;
}

}  // namespace infdef
