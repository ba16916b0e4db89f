#pragma once

// Invariant differential forms and deterministic quadrature of their pullbacks.
//
// Points and tangent vectors are Vec4 for every ambient. Points of S^2 (the radius-1/2 model
// of CP^1) use the first three coordinates and leave the fourth at zero.

#include "cocycle/group.hpp"
#include "cocycle/simplex.hpp"

#include <functional>
#include <span>

namespace cocycle {

enum class Ambient { S2, S3, SU2 };

class DifferentialForm {
 public:
  using Evaluator = std::function<double(const Vec4& p, std::span<const Vec4> v)>;

  DifferentialForm(int degree, Ambient ambient, Evaluator eval);

  int degree() const { return degree_; }
  Ambient ambient() const { return ambient_; }
  double operator()(const Vec4& p, std::span<const Vec4> v) const;

  /// Pointwise product with a function.
  DifferentialForm times(std::function<double(const Vec4&)> fn) const;
  DifferentialForm scaled(double c) const;

 private:
  int degree_;
  Ambient ambient_;
  Evaluator eval_;
};

/// Zero form of the given degree.
DifferentialForm zero_form(int degree, Ambient ambient);
/// Rotation-invariant top form with the given total; S^2 here is the unit sphere.
DifferentialForm vol_form(Ambient sphere, double total);
/// Area form of the radius-1/2 sphere: omega(p; u, v) = 4 <p, u x v>, total 2 pi.
DifferentialForm fubini_study_form();
/// (1/24 pi^2) Tr(omega^3) for the Maurer-Cartan form of SU(2).
DifferentialForm mc3_form();
/// alpha_q(v) = <i q, v>.
DifferentialForm contact_form_alpha();
/// d(alpha) = 2 <i u, v>.
DifferentialForm contact_form_dalpha();
/// alpha ^ d(alpha).
DifferentialForm contact_volume();

struct QuadratureSpec {
  int order = 6;             // Gauss-Legendre points per axis and cell
  int depth = 1;             // 2^depth cells per axis; the estimate uses depth + 1 as well
  int max_depth = 3;         // deepest level tried before giving up
  double tolerance = 1e-6;   // QuadratureDiverged when the two levels differ by > 10x this
  double step = 1e-3;        // finite-difference step for tangent vectors
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;

  IntegralResult& operator+=(const IntegralResult& o);
  IntegralResult operator-() const { return {-value, error_estimate}; }
};

IntegralResult pullback_integral(const DifferentialForm& form, const ParametrizedSimplex& f,
                                 const QuadratureSpec& quad = {});
IntegralResult pullback_integral(const DifferentialForm& form, const GeodesicSimplex& s,
                                 const QuadratureSpec& quad = {});

/// Optional map applied to atlas points before the form sees them (pullback along it).
using PointMap = std::function<Vec4(const Vec4&)>;

/// Whole-sphere integral: 16 orthant tetrahedra on S^3, 20 icosahedral faces on S^2.
/// For Ambient::S2 the atlas lives on the radius-1/2 sphere.
IntegralResult sphere_integral(const DifferentialForm& form, Ambient sphere, const QuadratureSpec& quad = {},
                               const PointMap& post = {});

/// Radially projected atlas cells (oriented positively).
std::vector<ParametrizedSimplex> sphere_atlas(Ambient sphere);

/// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace cocycle
