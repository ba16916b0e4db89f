#pragma once

// Hamiltonian calculus on the radius-1/2 sphere and contact calculus on (S^3, alpha) linked by
// the Hopf map.

#include "cocycle/cochains.hpp"
#include "cocycle/forms.hpp"
#include "cocycle/group.hpp"

#include <array>
#include <functional>
#include <map>
#include <random>

namespace cocycle {

/// Polynomial of degree <= 4 in the ambient coordinates (x, y, z), restricted to the sphere.
class SphereFunction {
 public:
  using Exponent = std::array<int, 3>;

  SphereFunction() = default;
  static SphereFunction constant(const Fraction& c);
  static SphereFunction coordinate(int axis);
  /// Random polynomial of the given degree with small integer coefficients.
  static SphereFunction random(std::mt19937_64& rng, int degree);

  void add_term(const Exponent& e, const Fraction& c);
  const std::map<Exponent, Fraction>& terms() const { return terms_; }
  int degree() const;

  double operator()(const Vec3& p) const;
  /// Ambient gradient, computed from the coefficients.
  Vec3 gradient(const Vec3& p) const;

  friend SphereFunction operator+(const SphereFunction& a, const SphereFunction& b);
  friend SphereFunction operator*(const SphereFunction& a, const SphereFunction& b);
  friend SphereFunction operator*(const Fraction& c, const SphereFunction& a);

 private:
  std::map<Exponent, Fraction> terms_;
};

using VectorField3 = std::function<Vec3(const Vec3&)>;
using VectorField4 = std::function<Vec4(const Vec4&)>;
using ScalarField3 = std::function<double(const Vec3&)>;
using ScalarField4 = std::function<double(const Vec4&)>;

/// Area form of the radius-1/2 sphere on ambient vectors.
double omega1(const Vec3& p, const Vec3& u, const Vec3& v);

/// X_f(p) = p x grad f(p); solves omega(X_f, v) = -df(v).
VectorField3 hamiltonian_field(const SphereFunction& f);
/// {f, g} = X_f(g).
ScalarField3 poisson(const SphereFunction& f, const SphereFunction& g);
/// {f, g} = omega(X_f, X_g), the other displayed expression.
ScalarField3 poisson_omega(const SphereFunction& f, const SphereFunction& g);

/// <a, b> = integral over the sphere of a b omega_1.
IntegralResult sphere_pairing(const ScalarField3& a, const ScalarField3& b, const QuadratureSpec& quad = {});
/// (3 / pi^3) * integral of f {g, h} omega_1.
IntegralResult beta_symplectic(const SphereFunction& f, const SphereFunction& g, const SphereFunction& h,
                               const QuadratureSpec& quad = {});

/// R(q) = i q.
Vec4 reeb_field(const Vec4& q);
/// Integral of alpha over the fiber theta |-> e^{i theta} q, by Gauss-Legendre.
double fiber_period(const Vec4& q, int order = 32);

/// A Reeb-invariant function on S^3.
class ContactFunction {
 public:
  /// h^* f.
  static ContactFunction pullback(const SphereFunction& f);
  /// Custom function; Reeb invariance is checked on seeded sample points (NotReebInvariant).
  static ContactFunction custom(ScalarField4 value, VectorField4 gradient);

  double operator()(const Vec4& q) const { return value_(q); }
  /// Gradient of the ambient extension (not projected).
  Vec4 gradient(const Vec4& q) const { return grad_(q); }
  /// dF(v) for an ambient vector v.
  double differential(const Vec4& q, const Vec4& v) const { return grad_(q).dot(v); }

 private:
  ContactFunction(ScalarField4 v, VectorField4 g) : value_(std::move(v)), grad_(std::move(g)) {}
  ScalarField4 value_;
  VectorField4 grad_;
};

/// X_F = F R + (1/2) i grad_xi F, so that alpha(X_F) = F and i_{X_F} d(alpha) = -dF.
VectorField4 contact_field(const ContactFunction& F);
/// {F, G}_alpha = X_F(G).
ScalarField4 contact_bracket(const ContactFunction& F, const ContactFunction& G);
/// d(alpha)(X_F, X_G).
ScalarField4 contact_bracket_dalpha(const ContactFunction& F, const ContactFunction& G);

/// <a, b>_alpha = integral over S^3 of a b mu_alpha.
IntegralResult contact_pairing(const ScalarField4& a, const ScalarField4& b, const QuadratureSpec& quad = {});
/// (3 / pi^3) * integral of F {G, H}_alpha mu_alpha.
IntegralResult beta_contact(const ContactFunction& F, const ContactFunction& G, const ContactFunction& H,
                            const QuadratureSpec& quad = {});

}  // namespace cocycle
