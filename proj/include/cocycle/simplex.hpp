#pragma once

// Vertex tuples, joins and the iterated-join simplices built from them.
//
// Manifold points are carried as Vec4: points of S^3, or of SU(2) viewed as unit quaternions.
// A simplex Delta^n -> M can be evaluated at barycentric coordinates (b_0, ..., b_n) or at
// collapsed coordinates c in [0,1]^n, related by
//   b(c_1..c_n) = ((1 - c_n) * b(c_1..c_{n-1}), c_n),   b() = (1).
// In collapsed coordinates the iterated join is simply
//   sigma(c) = Join(...Join(Join(v_0, v_1; c_1), v_2; c_2)..., v_n; c_n).

#include "cocycle/error.hpp"
#include "cocycle/group.hpp"

#include <Eigen/Core>

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cocycle {

template <class T>
using VertexTuple = std::vector<T>;

/// d_i: drop entry i. Throws IndexOut for i > n, and for degree-0 tuples.
template <class T>
VertexTuple<T> face(std::size_t i, const VertexTuple<T>& t) {
  if (t.size() <= 1) throw Error(ErrorCode::IndexOut, "a degree-0 tuple has no faces");
  if (i >= t.size()) {
    throw Error(ErrorCode::IndexOut,
                "face index " + std::to_string(i) + " exceeds degree " + std::to_string(t.size() - 1));
  }
  VertexTuple<T> out;
  out.reserve(t.size() - 1);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k != i) out.push_back(t[k]);
  }
  return out;
}

inline constexpr double kDefaultSmallRadius = 0.5;

/// |log(g_i^{-1} g_j)| < radius for every pair.
bool is_u_small(const VertexTuple<UnitQuaternion>& t, double radius = kDefaultSmallRadius);

/// Some u has <u, x_i> > 0 for every i, i.e. 0 lies outside the convex hull of the points.
bool in_open_hemisphere(const std::vector<Eigen::VectorXd>& pts);
bool in_open_hemisphere(const std::vector<Vec4>& pts);
/// A unit witness u with min_i <u, x_i> maximal among directions of the min-norm hull point.
std::optional<Eigen::VectorXd> hemisphere_witness(const std::vector<Eigen::VectorXd>& pts);

/// Pairwise distinct fibers g T, T the diagonal torus; invariant under the diagonal left action.
bool distinct_hopf(const VertexTuple<UnitQuaternion>& t);

// Great-circle arc from x to y at parameter s. Throws AntipodalJoin when <x,y> <= -1 + 1e-12.
template <class V>
V slerp_join(const V& x, const V& y, double s) {
  const double d = x.dot(y);
  if (d <= -1.0 + 1e-12) throw Error(ErrorCode::AntipodalJoin, "cannot join antipodal points");
  const double theta = 2.0 * std::atan2((x - y).norm(), (x + y).norm());
  V out;
  if (theta < 1e-8) {
    out = (1.0 - s) * x + s * y;
  } else {
    const double st = std::sin(theta);
    out = (std::sin((1.0 - s) * theta) / st) * x + (std::sin(s * theta) / st) * y;
  }
  return out / out.norm();
}

/// x * exp(s * log(x^{-1} y)). Throws ChartExceeded when x^{-1} y = -1.
UnitQuaternion chart_join(const UnitQuaternion& x, const UnitQuaternion& y, double s);
Vec4 chart_join(const Vec4& x, const Vec4& y, double s);

enum class JoinKind { spherical, chart_affine };

/// A smooth map Delta^n -> M in barycentric coordinates, with an optional collapsed-coordinate
/// evaluator when the map is more naturally written that way.
struct ParametrizedSimplex {
  using Map = std::function<Vec4(std::span<const double>)>;

  int degree = 0;
  Map barycentric;
  Map collapsed;  // may be empty

  Vec4 at(std::span<const double> bary) const { return barycentric(bary); }
  Vec4 at_collapsed(std::span<const double> c) const;
  Vec4 vertex(int i) const;
  std::vector<Vec4> vertices() const;
  /// Restriction to the i-th face, as a map on Delta^{n-1}.
  ParametrizedSimplex face(int i) const;
};

void collapsed_to_barycentric(std::span<const double> c, std::span<double> bary);

class GeodesicSimplex {
 public:
  GeodesicSimplex(std::vector<Vec4> vertices, JoinKind kind);

  int degree() const { return static_cast<int>(data_->vertices.size()) - 1; }
  JoinKind kind() const { return data_->kind; }
  const std::vector<Vec4>& vertices() const { return data_->vertices; }

  /// Throws DegenerateConfig naming the failing sub-join.
  Vec4 operator()(std::span<const double> bary) const;
  Vec4 collapsed(std::span<const double> c) const;

  GeodesicSimplex face(int i) const;
  ParametrizedSimplex as_map() const;

 private:
  struct Data {
    std::vector<Vec4> vertices;
    JoinKind kind;
  };
  Vec4 join(const Vec4& x, int target, double s) const;
  std::shared_ptr<const Data> data_;
};

/// Validates the precondition for `kind` (hemisphere or U-small) and builds sigma_n.
GeodesicSimplex build_simplex(const std::vector<Vec4>& vertices, JoinKind kind,
                              double radius = kDefaultSmallRadius);

/// sigma_n on the vertices of f, chart-affine. Requires a U-small vertex tuple.
GeodesicSimplex straighten(const ParametrizedSimplex& f, double radius = kDefaultSmallRadius);

struct PrismTerm {
  int sign;
  ParametrizedSimplex map;  // degree n+1
};

/// h_n(f) = sum_j (-1)^j H_f o alpha_j, with H_f(x,t) = Join_phi(f(x), str(f)(x); t).
struct PrismChain {
  std::vector<PrismTerm> terms;
};

PrismChain prism_chain(const ParametrizedSimplex& f, double radius = kDefaultSmallRadius);

}  // namespace cocycle
