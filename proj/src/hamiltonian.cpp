#include "cocycle/hamiltonian.hpp"

#include "cocycle/error.hpp"

#include <Eigen/Geometry>

#include <array>
#include <cmath>
#include <numbers>

namespace cocycle {

namespace {

using std::numbers::pi;

const Vec4 kI(0, 1, 0, 0);

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

Vec3 head3(const Vec4& v) { return v.head<3>(); }

}  // namespace

// ---------------------------------------------------------------- polynomials

SphereFunction SphereFunction::constant(const Fraction& c) {
  SphereFunction f;
  f.add_term({0, 0, 0}, c);
  return f;
}

SphereFunction SphereFunction::coordinate(int axis) {
  if (axis < 0 || axis > 2) throw Error(ErrorCode::IndexOut, "axis must be 0, 1 or 2");
  SphereFunction f;
  Exponent e{0, 0, 0};
  e[axis] = 1;
  f.add_term(e, 1);
  return f;
}

SphereFunction SphereFunction::random(std::mt19937_64& rng, int degree) {
  if (degree < 0 || degree > 4) throw Error(ErrorCode::InvalidArgument, "degree must be in 0..4");
  std::uniform_int_distribution<int> coeff(-3, 3);
  SphereFunction f;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c) f.add_term({a, b, c}, Fraction(coeff(rng), 2));
  return f;
}

void SphereFunction::add_term(const Exponent& e, const Fraction& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] > 4) {
    throw Error(ErrorCode::InvalidArgument, "monomial degree must be at most 4");
  }
  if (c.numerator() == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else if ((it->second += c).numerator() == 0) {
    terms_.erase(it);
  }
}

int SphereFunction::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

double SphereFunction::operator()(const Vec3& p) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    s += boost::rational_cast<double>(c) * ipow(p[0], e[0]) * ipow(p[1], e[1]) * ipow(p[2], e[2]);
  }
  return s;
}

Vec3 SphereFunction::gradient(const Vec3& p) const {
  Vec3 g = Vec3::Zero();
  for (const auto& [e, c] : terms_) {
    const double k = boost::rational_cast<double>(c);
    for (int a = 0; a < 3; ++a) {
      if (e[a] == 0) continue;
      double m = k * e[a];
      for (int b = 0; b < 3; ++b) m *= ipow(p[b], b == a ? e[b] - 1 : e[b]);
      g[a] += m;
    }
  }
  return g;
}

SphereFunction operator+(const SphereFunction& a, const SphereFunction& b) {
  SphereFunction out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

SphereFunction operator*(const SphereFunction& a, const SphereFunction& b) {
  SphereFunction out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

SphereFunction operator*(const Fraction& c, const SphereFunction& a) {
  SphereFunction out;
  for (const auto& [e, k] : a.terms_) out.add_term(e, c * k);
  return out;
}

// ---------------------------------------------------------------- symplectic side

double omega1(const Vec3& p, const Vec3& u, const Vec3& v) { return 4.0 * p.dot(u.cross(v)); }

VectorField3 hamiltonian_field(const SphereFunction& f) {
  return [f](const Vec3& p) { return Vec3(p.cross(f.gradient(p))); };
}

ScalarField3 poisson(const SphereFunction& f, const SphereFunction& g) {
  return [f, g](const Vec3& p) { return g.gradient(p).dot(p.cross(f.gradient(p))); };
}

ScalarField3 poisson_omega(const SphereFunction& f, const SphereFunction& g) {
  return [f, g](const Vec3& p) {
    return omega1(p, p.cross(f.gradient(p)), p.cross(g.gradient(p)));
  };
}

IntegralResult sphere_pairing(const ScalarField3& a, const ScalarField3& b, const QuadratureSpec& quad) {
  const DifferentialForm integrand =
      fubini_study_form().times([a, b](const Vec4& p) { return a(head3(p)) * b(head3(p)); });
  return sphere_integral(integrand, Ambient::S2, quad);
}

IntegralResult beta_symplectic(const SphereFunction& f, const SphereFunction& g, const SphereFunction& h,
                               const QuadratureSpec& quad) {
  IntegralResult r = sphere_pairing([f](const Vec3& p) { return f(p); }, poisson(g, h), quad);
  const double c = 3.0 / (pi * pi * pi);
  return {c * r.value, c * r.error_estimate};
}

// ---------------------------------------------------------------- contact side

Vec4 reeb_field(const Vec4& q) { return quat_mul(kI, q); }

double fiber_period(const Vec4& q, int order) {
  std::vector<double> nodes, weights;
  gauss_legendre(order, nodes, weights);
  const DifferentialForm alpha = contact_form_alpha();
  double s = 0.0;
  for (int k = 0; k < order; ++k) {
    const double t = 2.0 * pi * nodes[k];
    const Vec4 e(std::cos(t), std::sin(t), 0.0, 0.0);
    const Vec4 p = quat_mul(e, q);
    const std::array<Vec4, 1> v{quat_mul(kI, p)};
    s += 2.0 * pi * weights[k] * alpha(p, v);
  }
  return s;
}

ContactFunction ContactFunction::pullback(const SphereFunction& f) {
  auto value = [f](const Vec4& q) { return f(hopf(UnitQuaternion(q))); };
  auto grad = [f](const Vec4& q) {
    // the Hopf formula is quadratic, so this is the gradient of the ambient extension
    const Vec3 gf = f.gradient(hopf(UnitQuaternion(q)));
    Vec4 g;
    for (int a = 0; a < 4; ++a) g[a] = gf.dot(hopf_differential(q, Vec4::Unit(a)));
    return g;
  };
  return ContactFunction(value, grad);
}

ContactFunction ContactFunction::custom(ScalarField4 value, VectorField4 gradient) {
  std::mt19937_64 rng(0x5EED);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int k = 0; k < 32; ++k) {
    Vec4 q(n(rng), n(rng), n(rng), n(rng));
    q /= q.norm();
    if (std::abs(gradient(q).dot(reeb_field(q))) > 1e-8) {
      throw Error(ErrorCode::NotReebInvariant, "function is not constant along the Reeb flow");
    }
  }
  return ContactFunction(std::move(value), std::move(gradient));
}

VectorField4 contact_field(const ContactFunction& F) {
  return [F](const Vec4& q) {
    const Vec4 r = reeb_field(q);
    const Vec4 g = F.gradient(q);
    if (std::abs(g.dot(r)) > 1e-8 * std::max(1.0, g.norm())) {
      throw Error(ErrorCode::NotReebInvariant, "function is not constant along the Reeb flow");
    }
    const Vec4 g_xi = g - g.dot(q) * q - g.dot(r) * r;
    return Vec4(F(q) * r + 0.5 * quat_mul(kI, g_xi));
  };
}

ScalarField4 contact_bracket(const ContactFunction& F, const ContactFunction& G) {
  return [XF = contact_field(F), G](const Vec4& q) { return G.differential(q, XF(q)); };
}

ScalarField4 contact_bracket_dalpha(const ContactFunction& F, const ContactFunction& G) {
  return [XF = contact_field(F), XG = contact_field(G)](const Vec4& q) {
    return 2.0 * quat_mul(kI, XF(q)).dot(XG(q));
  };
}

IntegralResult contact_pairing(const ScalarField4& a, const ScalarField4& b, const QuadratureSpec& quad) {
  const DifferentialForm integrand = contact_volume().times([a, b](const Vec4& q) { return a(q) * b(q); });
  return sphere_integral(integrand, Ambient::S3, quad);
}

IntegralResult beta_contact(const ContactFunction& F, const ContactFunction& G, const ContactFunction& H,
                            const QuadratureSpec& quad) {
  IntegralResult r = contact_pairing([F](const Vec4& q) { return F(q); }, contact_bracket(G, H), quad);
  const double c = 3.0 / (pi * pi * pi);
  return {c * r.value, c * r.error_estimate};
}

}  // namespace cocycle
