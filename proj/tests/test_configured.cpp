#include "catch_amalgamated.hpp"

#include "cocycle/configured.hpp"
#include "cocycle/error.hpp"

#include <json.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <random>

using namespace cocycle;
using boost::multiprecision::cpp_rational;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  IntMatrix A(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A(i, j) = u(rng);
  return A;
}

// determinant by cofactor expansion
Integer det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    d += (j % 2 == 0 ? 1 : -1) * m[0][j] * det(minor);
  }
  return d;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors
Integer determinantal_divisor(const IntMatrix& A, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(A.rows(), k, 0, cur, rs);
  subsets(A.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = A(r[i], c[j]);
      g = boost::multiprecision::gcd(g, abs(det(m)));
    }
  }
  return g;
}

std::size_t rank_over_q(const IntMatrix& A) {
  std::vector<std::vector<cpp_rational>> m(A.rows(), std::vector<cpp_rational>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) m[i][j] = cpp_rational(A(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < A.cols() && rank < A.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < A.rows() && m[piv][col] == 0) ++piv;
    if (piv == A.rows()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < A.rows(); ++i) {
      if (m[i][col] == 0) continue;
      const cpp_rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < A.cols(); ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

long falling(long n, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace

TEST_CASE("generator counts") {
  const auto C = build_configured(FiniteGroupTable::cyclic(5), Predicate::conf_distinct, 3);
  for (int n = 0; n <= 3; ++n) CHECK(static_cast<long>(C.generators(n).size()) == falling(5, n + 1));
  const auto A = build_configured(FiniteGroupTable::cyclic(3), Predicate::all_tuples, 3);
  for (int n = 0; n <= 3; ++n) CHECK(A.generators(n).size() == static_cast<std::size_t>(std::pow(3, n + 1)));
  CHECK(C.index_of({0, 1}) >= 0);
  CHECK(C.index_of({1, 1}) == -1);
  CHECK(C.contains({4, 2, 0}));
  CHECK(!C.contains({4, 2, 4}));
}

TEST_CASE("boundary maps compose to zero") {
  for (Predicate p : {Predicate::conf_distinct, Predicate::all_tuples}) {
    const auto C = build_configured(FiniteGroupTable::cyclic(4), p, 3);
    for (int n = 2; n <= 3; ++n) CHECK((C.boundary(n - 1) * C.boundary(n)).is_zero());
  }
  const auto Q = build_configured(FiniteGroupTable::quaternion8(), Predicate::distinct_hopf, 2);
  CHECK((Q.boundary(1) * Q.boundary(2)).is_zero());
}

TEST_CASE("configured sets are invariant under the diagonal action") {
  const auto G = FiniteGroupTable::binary_tetrahedral();
  for (Predicate p : {Predicate::conf_distinct, Predicate::distinct_hopf}) {
    const auto C = build_configured(G, p, 1);
    for (const auto& t : all_tuples(G.order(), 2)) {
      for (int g : {1, 5, 17}) {
        const std::vector<int> gt{G.mul(g, t[0]), G.mul(g, t[1])};
        CHECK(C.contains(t) == C.contains(gt));
      }
    }
  }
}

TEST_CASE("distinct-hopf on the quaternion group") {
  // the fibers g T meet Q8 in the cosets {+-1, +-i} and {+-j, +-k}
  const auto G = FiniteGroupTable::quaternion8();
  const auto C = build_configured(G, Predicate::distinct_hopf, 1);
  CHECK(C.generators(1).size() == 8 * 4);
}

TEST_CASE("Smith form matches determinantal divisors") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 30; ++k) {
    const IntMatrix A = random_matrix(rng, 3, 4, -4, 4);
    const SmithResult s = smith_normal_form(A, true);
    Integer prod = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      const Integer d = determinantal_divisor(A, i + 1);
      if (i < s.rank) {
        CHECK(s.diagonal[i] > 0);
        if (i > 0) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
        prod *= s.diagonal[i];
        CHECK(prod == d);
      } else {
        CHECK(d == 0);
      }
    }
    IntMatrix D(3, 4);
    for (std::size_t i = 0; i < s.rank; ++i) D(i, i) = s.diagonal[i];
    CHECK(s.P * A * s.Q == D);
  }
}

TEST_CASE("ranks over Q agree with an independent elimination") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 30; ++k) {
    IntMatrix A = random_matrix(rng, 5, 6, -2, 2);
    // force dependencies now and then
    if (k % 3 == 0)
      for (std::size_t j = 0; j < 6; ++j) A(4, j) = A(0, j) * 2 - A(1, j);
    CHECK(rational_rank(A) == rank_over_q(A));
    CHECK(smith_normal_form(A).rank == rank_over_q(A));
  }
  const auto C = build_configured(FiniteGroupTable::cyclic(5), Predicate::conf_distinct, 3);
  for (int n = 1; n <= 3; ++n) CHECK(rational_rank(C.boundary(n)) == rank_over_q(C.boundary(n)));
}

TEST_CASE("free ranks agree with rank-nullity") {
  for (Predicate p : {Predicate::conf_distinct, Predicate::all_tuples}) {
    const auto C = build_configured(FiniteGroupTable::cyclic(4), p, 3);
    for (int n = 0; n < 3; ++n) {
      const std::size_t dim = C.generators(n).size();
      const std::size_t out = n == 0 ? 0 : rank_over_q(C.boundary(n));
      const std::size_t in = rank_over_q(C.boundary(n + 1));
      CHECK(homology(C, n).free_rank == dim - out - in);
    }
  }
}

TEST_CASE("homology of the configuration complex of Z/5") {
  const auto C = build_configured(FiniteGroupTable::cyclic(5), Predicate::conf_distinct, 3);
  const HomologySummary h0 = homology(C, 0);
  CHECK(h0.free_rank == 1);
  CHECK(h0.torsion.empty());
  for (int n = 1; n <= 2; ++n) {
    const HomologySummary h = homology(C, n);
    CHECK(h.free_rank == 0);
    CHECK(h.torsion.empty());
  }
  CHECK_THROWS_AS(homology(C, 3), Error);
}

TEST_CASE("cone filling") {
  const auto C = build_configured(FiniteGroupTable::cyclic(7), Predicate::conf_distinct, 3);
  HomogeneousChain z;
  z.degree = 2;
  z.add({0, 1, 2}, 1);
  const HomogeneousChain cycle = boundary(z);
  const HomogeneousChain fill = cone_fill(C, cycle, 5);
  CHECK(fill.degree == 2);
  CHECK(boundary(fill).terms == cycle.terms);

  HomogeneousChain pts;
  pts.degree = 0;
  pts.add({3}, 1);
  pts.add({4}, -1);
  CHECK(boundary(cone_fill(C, pts, 0)).terms == pts.terms);

  HomogeneousChain wide;
  wide.degree = 1;
  for (int a = 0; a < 7; ++a) wide.add({a, (a + 1) % 7}, 1);
  for (int y = 0; y < 7; ++y) {
    try {
      cone_fill(C, wide, y);
      FAIL("expected NoCommonApex");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoCommonApex);
    }
  }

  HomogeneousChain open;
  open.degree = 1;
  open.add({0, 1}, 1);
  CHECK_THROWS_AS(cone_fill(C, open, 3), Error);
}

TEST_CASE("retraction and cocycle extension") {
  const auto C = build_configured(FiniteGroupTable::cyclic(4), Predicate::conf_distinct, 2);
  const Retraction r = build_retraction(C, 2);
  CHECK(retraction_restricts_to_identity(C, r));
  CHECK(retraction_is_chain_map(C, r));
  // r_0 is the identity on single elements
  const IntMatrix& r0 = r.r[0];
  CHECK(r0 == IntMatrix::identity(4));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const IntMatrix& d = C.boundary(2);
  std::vector<Integer> g(d.rows()), f(d.cols(), 0);
  for (auto& v : g) v = coeff(rng);
  for (std::size_t j = 0; j < d.cols(); ++j)
    for (std::size_t i = 0; i < d.rows(); ++i) f[j] += g[i] * d(i, j);
  const ExtendedCochain ext = extend_cocycle(C, f, r);
  CHECK(ext.degree == 2);
  CHECK(coboundary_vanishes(ext));
  for (std::size_t j = 0; j < C.generators(2).size(); ++j) CHECK(ext(C.generators(2)[j]) == f[j]);

  const auto ker = kernel_basis(C, 2);
  REQUIRE(!ker.empty());
  for (const auto& k : ker) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < d.cols(); ++j) s += d(i, j) * k[j];
      CHECK(s == 0);
    }
  }
  try {
    extend_cocycle(C, ker.front(), r);
    FAIL("expected KernelObstruction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KernelObstruction);
  }
}

TEST_CASE("homology report is valid JSON") {
  const auto C = build_configured(FiniteGroupTable::cyclic(5), Predicate::conf_distinct, 3);
  const auto j = nlohmann::json::parse(homology_report_json(C));
  CHECK(j.at("predicate").get<std::string>() == to_string(Predicate::conf_distinct));
  CHECK(j.at("order").get<int>() == 5);
  CHECK(j.at("degrees").at("0").at("rank").get<int>() == 1);
  CHECK(j.at("degrees").at("1").at("rank").get<int>() == 0);
  CHECK(j.at("degrees").at("2").at("torsion").empty());
}
