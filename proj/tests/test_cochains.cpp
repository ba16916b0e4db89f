#include "catch_amalgamated.hpp"

#include "cocycle/cochains.hpp"
#include "cocycle/error.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>

using namespace cocycle;
using std::numbers::pi;

namespace {

Vec3 random_ball(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Vec3 v;
  do {
    v = Vec3(u(rng), u(rng), u(rng));
  } while (v.norm() > 1);
  return v;
}

UnitQuaternion random_quat(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  return {n(rng), n(rng), n(rng), n(rng)};
}

HomogeneousChain random_chain(std::mt19937_64& rng, int degree, int order, int terms) {
  std::uniform_int_distribution<int> e(0, order - 1), c(-3, 3);
  HomogeneousChain out;
  out.degree = degree;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> t(degree + 1);
    for (auto& x : t) x = e(rng);
    out.add(t, c(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("lattice reduction") {
  CHECK(reduce_mod(2.25, Lattice::integers()) == Catch::Approx(0.25));
  CHECK(reduce_mod(-0.25, Lattice::integers()) == Catch::Approx(0.75));
  CHECK(reduce_mod(-0.25, Lattice::none()) == -0.25);
  CHECK(centered_mod(0.75, Lattice::integers()) == Catch::Approx(-0.25));
  CHECK(std::abs(reduce_mod(7.0, Lattice::two_pi()) - (7.0 - 2 * pi)) < 1e-14);
  CHECK(circle_distance(0.99, 0.01, Lattice::integers()) == Catch::Approx(0.02));
  CHECK(circle_distance(0.2, 0.5, Lattice::integers()) == Catch::Approx(0.3));
}

TEST_CASE("boundary of a boundary vanishes") {
  std::mt19937_64 rng(1);
  for (int degree = 1; degree <= 4; ++degree) {
    for (int k = 0; k < 10; ++k) CHECK(boundary(boundary(random_chain(rng, degree, 5, 12))).empty());
  }
}

TEST_CASE("chains cancel opposite terms") {
  HomogeneousChain c;
  c.degree = 1;
  c.add({0, 1}, 2);
  c.add({0, 1}, -2);
  CHECK(c.empty());
  c.add({1, 2}, 1);
  const HomogeneousChain b = boundary(c);
  CHECK(b.terms.size() == 2);
  CHECK(b.terms.at({2}) == 1);
  CHECK(b.terms.at({1}) == -1);
}

TEST_CASE("tau_cycle") {
  for (int m : {2, 3, 5, 8}) {
    const CyclicCycle tau = tau_cycle(m);
    CHECK(tau.m == m);
    CHECK(tau.chain.degree == 3);
    long total = 0;
    for (const auto& [t, c] : tau.chain.terms) {
      total += c;
      CHECK(t[0] == 0);
      CHECK(t[1] == 1 % m);
    }
    CHECK(total == m);
    // a cycle in the coinvariants
    CHECK(normalize_cyclic(boundary(tau.chain), m).empty());
  }
  CHECK(tau_cycle(3).chain.terms.count({0, 1, 1, 2}) == 1);
  CHECK_THROWS_AS(tau_cycle(1), Error);
}

TEST_CASE("the coboundary of a coboundary vanishes") {
  const HomogeneousCochain<double> h(0, Lattice::none(), [](const std::vector<double>& t) {
    return CochainValue{std::sin(t[0]) + t[0] * t[0], 0.0};
  });
  const auto dh = coboundary(h);
  const auto ddh = coboundary(dh);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n(0, 1);
  for (int k = 0; k < 50; ++k) {
    const double a = n(rng), b = n(rng), c = n(rng);
    CHECK(std::abs(dh({a, b}) - (h({b}) - h({a}))) < 1e-14);
    CHECK(std::abs(ddh({a, b, c})) < 1e-13);
  }
  CHECK_THROWS_AS(h.evaluate({1.0, 2.0}), Error);
}

TEST_CASE("guards propagate through the coboundary") {
  const HomogeneousCochain<double> f(
      1, Lattice::none(), [](const std::vector<double>& t) { return CochainValue{t[1] - t[0], 0.0}; },
      [](const std::vector<double>& t) { return std::abs(t[1] - t[0]) < 1.0; });
  const auto df = coboundary(f);
  CHECK(df.admissible({0.0, 0.5, 0.9}));
  CHECK(!df.admissible({0.0, 0.5, 1.2}));
  try {
    df.evaluate({0.0, 0.5, 1.2});
    FAIL("expected DomainGuard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainGuard);
  }
}

TEST_CASE("volume cochain on the orthant tuple") {
  const auto F = F_sigma_spherical(vol_form(Ambient::S3, 1.0), Lattice::none());
  const auto one = UnitQuaternion::identity();
  const std::vector<Rotation> t{so4_of(one, one), so4_of(UnitQuaternion::i(), one), so4_of(UnitQuaternion::j(), one),
                                so4_of(UnitQuaternion::k(), one)};
  const CochainValue v = F.evaluate(t);
  CHECK(std::abs(std::abs(v.value) - 1.0 / 16) < 1e-9);
  std::vector<Rotation> swapped = t;
  std::swap(swapped[0], swapped[3]);
  CHECK(std::abs(F(swapped) + v.value) < 1e-9);
}

TEST_CASE("volume cochain is left invariant and vanishes on repeated entries") {
  const auto F = F_sigma_spherical(vol_form(Ambient::S3, 1.0), Lattice::none());
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    std::vector<Rotation> t;
    for (int i = 0; i < 4; ++i) t.push_back(so4_of(quat_exp(Vec3(0.5 * random_ball(rng))), quat_exp(Vec3(0.5 * random_ball(rng)))));
    const Rotation g = so4_of(random_quat(rng), random_quat(rng));
    std::vector<Rotation> gt;
    for (const auto& x : t) gt.push_back(g * x);
    CHECK(std::abs(F(gt) - F(t)) < 1e-9);
    std::vector<Rotation> rep = t;
    rep[2] = rep[1];
    CHECK(std::abs(F(rep)) < 1e-12);
  }
}

TEST_CASE("chart cochain of the Maurer-Cartan form is a cocycle on small tuples") {
  const auto F = F_sigma_chart(mc3_form(), Lattice::none());
  std::mt19937_64 rng(4);
  for (int k = 0; k < 3; ++k) {
    const UnitQuaternion c = random_quat(rng);
    std::vector<UnitQuaternion> t;
    for (int i = 0; i < 5; ++i) t.push_back(c * quat_exp(Vec3(0.1 * random_ball(rng))));
    const CochainValue d = cocycle_defect(F, t);
    CHECK(std::abs(d.value) <= std::max(5 * d.error, 1e-9));
  }
  const std::vector<UnitQuaternion> far{UnitQuaternion::identity(), UnitQuaternion::j(), UnitQuaternion::k(),
                                        UnitQuaternion::i()};
  CHECK(!F.admissible(far));
}

TEST_CASE("Kronecker pairing is linear and translation independent") {
  const int m = 5;
  FillingOptions opts;
  opts.base_point = generic_base_point();
  const auto F = F_sigma_spherical(vol_form(Ambient::S3, 1.0), Lattice::none(), opts);
  std::function<Rotation(int)> embed = [](int a) { return so4_of(j_embed(m, a), j_embed(m, -2L * a)); };
  const CyclicCycle tau = tau_cycle(m);
  HomogeneousChain zero;
  zero.degree = 3;
  CHECK(kronecker_pair<Rotation>(F, zero, embed).value == 0.0);

  HomogeneousChain twice = tau.chain;
  for (auto& [t, c] : twice.terms) c *= 2;
  const double once = kronecker_pair<Rotation>(F, tau.chain, embed).value;
  CHECK(std::abs(kronecker_pair<Rotation>(F, twice, embed).value - 2 * once) < 1e-9);

  std::mt19937_64 rng(5);
  const Rotation g = so4_of(random_quat(rng), random_quat(rng));
  std::function<Rotation(int)> shifted = [g, embed](int a) { return g * embed(a); };
  CHECK(std::abs(kronecker_pair<Rotation>(F, tau.chain, shifted).value - once) < 1e-9);

  HomogeneousChain wrong;
  wrong.degree = 2;
  wrong.add({0, 1, 2}, 1);
  CHECK_THROWS_AS(kronecker_pair<Rotation>(F, wrong, embed), Error);
}

TEST_CASE("pairings of a free cyclic action are m-torsion") {
  for (auto [m, p, r] : {std::tuple{5, 1, 2}, std::tuple{7, 1, 3}}) {
    const PairingResult res = cyclic_pairing(m, p, r);
    const double v = centered_mod(m * res.value, Lattice::integers());
    CHECK(std::abs(v) < 1e-6);
  }
}

TEST_CASE("transfer agrees with a direct evaluation") {
  const auto gamma = FiniteGroupTable::cyclic(6);
  const std::vector<int> sub{0, 2, 4}, reps{0, 1};
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> num(0, 11);
  std::map<std::vector<int>, Fraction> table;
  for (const auto& t : all_tuples(6, 2)) table[t] = Fraction(num(rng), 12);
  const FiniteCochain psi{1, [table](const std::vector<int>& t) { return table.at(t); }};
  const FiniteCochain tr = transfer(psi, gamma, sub, reps);
  for (const auto& g : all_tuples(6, 2)) {
    Fraction expected(0);
    for (int t = 0; t < 2; ++t) {
      std::vector<int> h;
      for (int x : g) h.push_back(((t + x) % 6) - ((t + x) % 6) % 2);
      expected += table.at(h);
    }
    CHECK(tr(g) == reduce_mod1(expected));
  }
}

TEST_CASE("transfer rejects non-normal subgroups and bad representatives") {
  const auto T = FiniteGroupTable::binary_tetrahedral();
  REQUIRE(T.order() == 24);
  const auto& q = *T.quaternions();
  std::vector<int> sub;
  for (int a = 0; a < T.order(); ++a) {
    const Vec4 v = q[a].vec();
    if (std::abs(v[2]) < 1e-9 && std::abs(v[3]) < 1e-9) sub.push_back(a);
  }
  REQUIRE(sub.size() == 4);
  REQUIRE(T.is_subgroup(sub));
  const FiniteCochain phi{1, [](const std::vector<int>&) { return Fraction(0); }};
  std::vector<int> reps;
  for (int a = 0; a < 6; ++a) reps.push_back(a);
  try {
    transfer(phi, T, sub, reps);
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }

  const auto Z6 = FiniteGroupTable::cyclic(6);
  for (const std::vector<int>& bad : {std::vector<int>{0}, std::vector<int>{1, 3}, std::vector<int>{0, 2}}) {
    try {
      transfer(phi, Z6, {0, 2, 4}, bad);
      FAIL("expected BadReps");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadReps);
    }
  }
}

TEST_CASE("reduce_mod1") {
  CHECK(reduce_mod1(Fraction(7, 3)) == Fraction(1, 3));
  CHECK(reduce_mod1(Fraction(-1, 4)) == Fraction(3, 4));
  CHECK(reduce_mod1(Fraction(2)).numerator() == 0);
}

TEST_CASE("degrees of simple maps") {
  QuadratureSpec q;
  q.depth = 2;
  q.max_depth = 3;
  CHECK(std::abs(degree_of_map([](const Vec4& x) { return x; }, q).value - 1.0) < 1e-6);
  CHECK(std::abs(degree_of_map([](const Vec4&) { return Vec4(0, 0, 1, 0); }, q).value) < 1e-12);
  CHECK(std::abs(degree_of_map([](const Vec4& x) { return quat_conj(x); }, q).value + 1.0) < 1e-6);
}
