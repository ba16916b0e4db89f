#include "catch_amalgamated.hpp"

#include "cocycle/error.hpp"
#include "cocycle/forms.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

using namespace cocycle;
using std::numbers::pi;

namespace {

Vec4 random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  return {n(rng), n(rng), n(rng), n(rng)};
}

Vec4 random_s3(std::mt19937_64& rng) { return random_vec(rng).normalized(); }

std::array<Vec4, 3> random_tangents(std::mt19937_64& rng, const Vec4& p) {
  std::array<Vec4, 3> v;
  for (auto& x : v) {
    x = random_vec(rng);
    x -= x.dot(p) * p;
  }
  return v;
}

}  // namespace

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  for (int order : {1, 3, 6, 10}) {
    gauss_legendre(order, x, w);
    REQUIRE(static_cast<int>(x.size()) == order);
    for (int p = 0; p < 2 * order; ++p) {
      double s = 0;
      for (int i = 0; i < order; ++i) s += w[i] * std::pow(x[i], p);
      CHECK(std::abs(s - 1.0 / (p + 1)) < 1e-14);
    }
  }
}

TEST_CASE("volume form of S3 has total 1") {
  const IntegralResult r = sphere_integral(vol_form(Ambient::S3, 1.0), Ambient::S3);
  CHECK(std::abs(r.value - 1.0) < 1e-8);
  const IntegralResult s = sphere_integral(vol_form(Ambient::S3, 2.5), Ambient::S3);
  CHECK(std::abs(s.value - 2.5) < 1e-8);
}

TEST_CASE("hemisphere is half the sphere") {
  const auto cells = sphere_atlas(Ambient::S3);
  REQUIRE(cells.size() == 16);
  const DifferentialForm vol = vol_form(Ambient::S3, 1.0);
  double total = 0;
  int used = 0;
  for (const auto& c : cells) {
    bool upper = false;
    for (const auto& v : c.vertices()) upper = upper || v[0] > 0.5;
    if (upper) {
      total += pullback_integral(vol, c).value;
      ++used;
    }
  }
  CHECK(used == 8);
  CHECK(std::abs(total - 0.5) < 1e-8);
}

TEST_CASE("orthant simplex has volume 1/16 with an honest error estimate") {
  const std::vector<Vec4> e{Vec4::Unit(0), Vec4::Unit(1), Vec4::Unit(2), Vec4::Unit(3)};
  const GeodesicSimplex S = build_simplex(e, JoinKind::spherical);
  for (int depth : {2, 3}) {
    QuadratureSpec q;
    q.depth = depth;
    q.max_depth = depth + 1;
    const IntegralResult r = pullback_integral(vol_form(Ambient::S3, 1.0), S, q);
    CHECK(std::abs(std::abs(r.value) - 1.0 / 16) < 1e-9);
    CHECK(std::abs(std::abs(r.value) - 1.0 / 16) <= r.error_estimate);
  }
}

TEST_CASE("Fubini-Study form has total 2 pi") {
  const IntegralResult r = sphere_integral(fubini_study_form(), Ambient::S2);
  CHECK(std::abs(r.value - 2 * pi) < 1e-8);
}

TEST_CASE("Fubini-Study integrals are rotation invariant") {
  // radially projected triangles on the radius-1/2 sphere
  auto triangle = [](const std::array<Vec3, 3>& v) {
    return ParametrizedSimplex{2, [v](std::span<const double> b) {
                                 const Vec3 x = (b[0] * v[0] + b[1] * v[1] + b[2] * v[2]).normalized() / 2;
                                 return Vec4(x[0], x[1], x[2], 0.0);
                               },
                               {}};
  };
  std::mt19937_64 rng(8);
  const DifferentialForm fs = fubini_study_form();
  for (int k = 0; k < 5; ++k) {
    const Vec3 c = random_vec(rng).head<3>().normalized();
    std::array<Vec3, 3> v;
    for (auto& x : v) x = (c + 0.5 * random_vec(rng).head<3>()).normalized();
    const Eigen::Matrix3d R = so3_of(UnitQuaternion(random_s3(rng))).matrix();
    const std::array<Vec3, 3> rv{R * v[0], R * v[1], R * v[2]};
    const IntegralResult a = pullback_integral(fs, triangle(v)), b = pullback_integral(fs, triangle(rv));
    CHECK(std::abs(a.value - b.value) < 1e-8);
  }
}

TEST_CASE("Maurer-Cartan 3-form has total of modulus 1") {
  const IntegralResult r = sphere_integral(mc3_form(), Ambient::SU2);
  CHECK(std::abs(std::abs(r.value) - 1.0) < 1e-8);
}

TEST_CASE("forms are alternating and multilinear") {
  std::mt19937_64 rng(1);
  for (const DifferentialForm& f : {vol_form(Ambient::S3, 1.0), mc3_form(), contact_volume()}) {
    for (int k = 0; k < 20; ++k) {
      const Vec4 p = random_s3(rng);
      auto v = random_tangents(rng, p);
      const Vec4 w = random_tangents(rng, p)[0];
      const double base = f(p, v);
      const std::array<Vec4, 3> swapped{v[1], v[0], v[2]};
      CHECK(std::abs(f(p, swapped) + base) < 1e-12);
      const std::array<Vec4, 3> repeated{v[0], v[0], v[2]};
      CHECK(std::abs(f(p, repeated)) < 1e-12);
      const std::array<Vec4, 3> sum{Vec4(2.0 * v[0] + w), v[1], v[2]};
      const std::array<Vec4, 3> wv{w, v[1], v[2]};
      CHECK(std::abs(f(p, sum) - (2 * base + f(p, wv))) < 1e-11);
    }
  }
}

TEST_CASE("Maurer-Cartan and volume forms are left invariant") {
  std::mt19937_64 rng(2);
  for (const DifferentialForm& f : {vol_form(Ambient::SU2, 1.0), mc3_form()}) {
    for (int k = 0; k < 20; ++k) {
      const Vec4 p = random_s3(rng), g = random_s3(rng);
      const auto v = random_tangents(rng, p);
      const std::array<Vec4, 3> gv{quat_mul(g, v[0]), quat_mul(g, v[1]), quat_mul(g, v[2])};
      CHECK(std::abs(f(quat_mul(g, p), gv) - f(p, v)) < 1e-12);
    }
  }
}

TEST_CASE("contact form evaluates to 1 on i q") {
  std::mt19937_64 rng(3);
  const DifferentialForm a = contact_form_alpha(), da = contact_form_dalpha();
  for (int k = 0; k < 20; ++k) {
    const Vec4 q = random_s3(rng);
    const Vec4 R = quat_mul(Vec4(0, 1, 0, 0), q);
    const std::array<Vec4, 1> r{R};
    CHECK(std::abs(a(q, r) - 1.0) < 1e-14);
    const Vec4 u = random_tangents(rng, q)[0];
    const std::array<Vec4, 2> ru{R, u};
    CHECK(std::abs(da(q, ru)) < 1e-12);
  }
}

TEST_CASE("volume of a spherical simplex agrees with Monte Carlo cone sampling") {
  const std::vector<Vec4> v{Vec4::Unit(0), Vec4::Unit(1), Vec4::Unit(2), Vec4(1, 0, 0, 1).normalized()};
  const double vol = std::abs(pullback_integral(vol_form(Ambient::S3, 1.0), build_simplex(v, JoinKind::spherical)).value);
  Eigen::Matrix4d M;
  for (int i = 0; i < 4; ++i) M.col(i) = v[i];
  const Eigen::Matrix4d Minv = M.inverse();
  std::mt19937_64 rng(4);
  const int N = 400000;
  int inside = 0;
  for (int k = 0; k < N; ++k) {
    const Eigen::Vector4d c = Minv * random_vec(rng);
    inside += (c.array() >= 0).all() ? 1 : 0;
  }
  const double p = static_cast<double>(inside) / N;
  const double sigma = std::sqrt(p * (1 - p) / N);
  CHECK(std::abs(p - vol) < 5 * sigma);
}

TEST_CASE("swapping two vertices negates the integral") {
  std::mt19937_64 rng(5);
  const DifferentialForm vol = vol_form(Ambient::S3, 1.0);
  for (int k = 0; k < 5; ++k) {
    Vec4 c = random_s3(rng);
    std::vector<Vec4> v;
    for (int i = 0; i < 4; ++i) v.push_back((c + 0.6 * random_s3(rng)).normalized());
    std::vector<Vec4> w = v;
    std::swap(w[1], w[2]);
    const double a = pullback_integral(vol, build_simplex(v, JoinKind::spherical)).value;
    const double b = pullback_integral(vol, build_simplex(w, JoinKind::spherical)).value;
    CHECK(std::abs(a + b) < 1e-9);
  }
}

TEST_CASE("splitting an edge at its midpoint is additive") {
  std::mt19937_64 rng(6);
  const DifferentialForm vol = vol_form(Ambient::S3, 1.0);
  for (int k = 0; k < 5; ++k) {
    Vec4 c = random_s3(rng);
    std::vector<Vec4> v;
    for (int i = 0; i < 4; ++i) v.push_back((c + 0.6 * random_s3(rng)).normalized());
    const Vec4 mid = (v[0] + v[1]).normalized();
    std::vector<Vec4> a = v, b = v;
    a[0] = mid;
    b[1] = mid;
    const double whole = pullback_integral(vol, build_simplex(v, JoinKind::spherical)).value;
    const double parts = pullback_integral(vol, build_simplex(a, JoinKind::spherical)).value +
                         pullback_integral(vol, build_simplex(b, JoinKind::spherical)).value;
    CHECK(std::abs(whole - parts) < 1e-9);
  }
}

TEST_CASE("scaled and times") {
  std::mt19937_64 rng(7);
  const DifferentialForm vol = vol_form(Ambient::S3, 1.0);
  const DifferentialForm twice = vol.scaled(2.0);
  const DifferentialForm weighted = vol.times([](const Vec4& p) { return p[0]; });
  for (int k = 0; k < 10; ++k) {
    const Vec4 p = random_s3(rng);
    const auto v = random_tangents(rng, p);
    CHECK(std::abs(twice(p, v) - 2 * vol(p, v)) < 1e-14);
    CHECK(std::abs(weighted(p, v) - p[0] * vol(p, v)) < 1e-14);
  }
  // odd weight integrates to zero over the sphere
  CHECK(std::abs(sphere_integral(weighted, Ambient::S3).value) < 1e-8);
  CHECK(std::abs(sphere_integral(zero_form(3, Ambient::S3), Ambient::S3).value) == 0.0);
}

TEST_CASE("quadrature reports divergence for a discontinuous integrand") {
  const DifferentialForm jump = vol_form(Ambient::S3, 1.0).times([](const Vec4& p) { return p[1] > 0.3 ? 1.0 : 0.0; });
  const std::vector<Vec4> e{Vec4::Unit(0), Vec4::Unit(1), Vec4::Unit(2), Vec4::Unit(3)};
  QuadratureSpec q;
  q.tolerance = 1e-12;
  q.max_depth = 2;
  try {
    pullback_integral(jump, build_simplex(e, JoinKind::spherical), q);
    FAIL("expected QuadratureDiverged");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::QuadratureDiverged);
  }
}

TEST_CASE("degree mismatch is rejected") {
  const std::vector<Vec4> e{Vec4::Unit(0), Vec4::Unit(1), Vec4::Unit(2)};
  CHECK_THROWS_AS(pullback_integral(vol_form(Ambient::S3, 1.0), build_simplex(e, JoinKind::spherical)), Error);
}
