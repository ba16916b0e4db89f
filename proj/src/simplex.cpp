#include "cocycle/simplex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>

namespace cocycle {

namespace {

constexpr double kAntipodalTol = 1e-12;

// Min-norm point of the convex hull, by enumerating affinely independent subsets.
// Fine for the handful of points the library ever asks about.
Eigen::VectorXd min_norm_hull_point(const std::vector<Eigen::VectorXd>& pts) {
  const std::size_t k = pts.size();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "empty point set");
  if (k > 16) throw Error(ErrorCode::InvalidArgument, "hemisphere test supports at most 16 points");
  const auto dim = pts[0].size();

  Eigen::VectorXd best = pts[0];
  double best_norm = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    const auto s = static_cast<Eigen::Index>(idx.size());
    if (s > dim + 1) continue;
    Eigen::MatrixXd X(dim, s);
    for (Eigen::Index c = 0; c < s; ++c) X.col(c) = pts[idx[c]];

    // KKT system of min |X l|^2 subject to sum(l) = 1
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(s + 1, s + 1);
    K.topLeftCorner(s, s) = X.transpose() * X;
    K.block(0, s, s, 1).setOnes();
    K.block(s, 0, 1, s).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
    rhs[s] = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(K);
    lu.setThreshold(1e-13);
    if (lu.rank() < s + 1) continue;
    const Eigen::VectorXd sol = lu.solve(rhs);
    const Eigen::VectorXd lambda = sol.head(s);
    if (lambda.minCoeff() < -1e-12) continue;
    const Eigen::VectorXd p = X * lambda;
    const double n = p.norm();
    if (n < best_norm) {
      best_norm = n;
      best = p;
    }
  }
  return best;
}

Vec4 normalized(const Vec4& v) { return v / v.norm(); }

}  // namespace

bool is_u_small(const VertexTuple<UnitQuaternion>& t, double radius) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const Vec4 d = quat_mul(quat_conj(t[i].vec()), t[j].vec());
      const Vec3 im(d[1], d[2], d[3]);
      const double angle = std::atan2(im.norm(), d[0]);
      if (!(angle < radius)) return false;
    }
  }
  return true;
}

std::optional<Eigen::VectorXd> hemisphere_witness(const std::vector<Eigen::VectorXd>& pts) {
  const Eigen::VectorXd p = min_norm_hull_point(pts);
  const double n = p.norm();
  if (!(n > 1e-12)) return std::nullopt;
  return Eigen::VectorXd(p / n);
}

bool in_open_hemisphere(const std::vector<Eigen::VectorXd>& pts) {
  return hemisphere_witness(pts).has_value();
}

bool in_open_hemisphere(const std::vector<Vec4>& pts) {
  std::vector<Eigen::VectorXd> v(pts.begin(), pts.end());
  return in_open_hemisphere(v);
}

bool distinct_hopf(const VertexTuple<UnitQuaternion>& t) {
  std::vector<S2Point> h;
  h.reserve(t.size());
  // compare h(g^-1): fibers are right torus cosets, so the test is left-invariant
  for (const auto& q : t) h.push_back(hopf(q.inverse()));
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if ((h[i] - h[j]).norm() <= 1e-9) return false;
    }
  }
  return true;
}

Vec4 chart_join(const Vec4& x, const Vec4& y, double s) {
  const Vec4 d = quat_mul(quat_conj(x), y);
  if ((d + Vec4(1, 0, 0, 0)).norm() < kAntipodalTol) {
    throw Error(ErrorCode::ChartExceeded, "x^-1 y is the antipode of the identity");
  }
  const Vec3 im(d[1], d[2], d[3]);
  const double r = im.norm();
  if (r < 1e-300) return x;
  const double theta = std::atan2(r, d[0]) * s;
  const double k = std::sin(theta) / r;
  const Vec4 e(std::cos(theta), k * im[0], k * im[1], k * im[2]);
  return normalized(quat_mul(x, e));
}

UnitQuaternion chart_join(const UnitQuaternion& x, const UnitQuaternion& y, double s) {
  return UnitQuaternion(chart_join(x.vec(), y.vec(), s));
}

// ---------------------------------------------------------------- parametrized simplices

void collapsed_to_barycentric(std::span<const double> c, std::span<double> bary) {
  if (bary.size() != c.size() + 1) throw Error(ErrorCode::InvalidArgument, "barycentric size mismatch");
  bary[0] = 1.0;
  for (std::size_t k = 1; k <= c.size(); ++k) {
    const double s = c[k - 1];
    for (std::size_t j = 0; j < k; ++j) bary[j] *= (1.0 - s);
    bary[k] = s;
  }
}

Vec4 ParametrizedSimplex::at_collapsed(std::span<const double> c) const {
  if (collapsed) return collapsed(c);
  std::vector<double> b(c.size() + 1);
  collapsed_to_barycentric(c, b);
  return barycentric(b);
}

Vec4 ParametrizedSimplex::vertex(int i) const {
  std::vector<double> b(degree + 1, 0.0);
  b.at(i) = 1.0;
  return barycentric(b);
}

std::vector<Vec4> ParametrizedSimplex::vertices() const {
  std::vector<Vec4> out;
  for (int i = 0; i <= degree; ++i) out.push_back(vertex(i));
  return out;
}

ParametrizedSimplex ParametrizedSimplex::face(int i) const {
  if (degree == 0 || i < 0 || i > degree) throw Error(ErrorCode::IndexOut, "bad face index");
  ParametrizedSimplex out;
  out.degree = degree - 1;
  out.barycentric = [map = barycentric, i](std::span<const double> b) {
    std::vector<double> full(b.size() + 1);
    for (std::size_t k = 0, src = 0; k < full.size(); ++k) {
      full[k] = (static_cast<int>(k) == i) ? 0.0 : b[src++];
    }
    return map(full);
  };
  return out;
}

// ---------------------------------------------------------------- geodesic simplices

GeodesicSimplex::GeodesicSimplex(std::vector<Vec4> vertices, JoinKind kind) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "a simplex needs at least one vertex");
  for (auto& v : vertices) v = normalized(v);
  data_ = std::make_shared<const Data>(Data{std::move(vertices), kind});
}

Vec4 GeodesicSimplex::join(const Vec4& x, int target, double s) const {
  const Vec4& y = data_->vertices[target];
  if (s == 0.0) return x;
  if (s == 1.0) return y;
  try {
    if (data_->kind == JoinKind::spherical) return slerp_join(x, y, s);
    return chart_join(x, y, s);
  } catch (const Error& e) {
    throw Error(ErrorCode::DegenerateConfig,
                "sub-join sigma_" + std::to_string(target - 1) + " -> vertex " + std::to_string(target) +
                    " failed (" + e.what() + ")");
  }
}

Vec4 GeodesicSimplex::collapsed(std::span<const double> c) const {
  if (static_cast<int>(c.size()) != degree()) throw Error(ErrorCode::InvalidArgument, "collapsed size mismatch");
  Vec4 p = data_->vertices[0];
  for (int k = 1; k <= degree(); ++k) p = join(p, k, c[k - 1]);
  return p;
}

Vec4 GeodesicSimplex::operator()(std::span<const double> bary) const {
  const int n = degree();
  if (static_cast<int>(bary.size()) != n + 1) throw Error(ErrorCode::InvalidArgument, "barycentric size mismatch");
  double total = 0.0;
  for (double b : bary) total += b;
  // c_k = b_k / (b_0 + ... + b_k); undefined prefixes contribute nothing, so use 0
  std::vector<double> c(n);
  double prefix = bary[0] / total;
  for (int k = 1; k <= n; ++k) {
    const double bk = bary[k] / total;
    prefix += bk;
    c[k - 1] = prefix > 1e-300 ? bk / prefix : 0.0;
  }
  return collapsed(c);
}

GeodesicSimplex GeodesicSimplex::face(int i) const {
  return GeodesicSimplex(cocycle::face(static_cast<std::size_t>(i), data_->vertices), data_->kind);
}

ParametrizedSimplex GeodesicSimplex::as_map() const {
  ParametrizedSimplex out;
  out.degree = degree();
  out.barycentric = [s = *this](std::span<const double> b) { return s(b); };
  out.collapsed = [s = *this](std::span<const double> c) { return s.collapsed(c); };
  return out;
}

GeodesicSimplex build_simplex(const std::vector<Vec4>& vertices, JoinKind kind, double radius) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "a simplex needs at least one vertex");
  if (kind == JoinKind::chart_affine) {
    VertexTuple<UnitQuaternion> t;
    for (const auto& v : vertices) t.emplace_back(v);
    if (!is_u_small(t, radius)) throw Error(ErrorCode::DegenerateConfig, "vertex tuple is not U-small");
  } else if (!in_open_hemisphere(vertices)) {
    // Not hemispherical: joins are checked lazily, but an antipodal vertex pair always fails.
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (normalized(vertices[i]).dot(normalized(vertices[j])) <= -1.0 + kAntipodalTol) {
          throw Error(ErrorCode::DegenerateConfig,
                      "vertices " + std::to_string(i) + " and " + std::to_string(j) + " are antipodal");
        }
      }
    }
  }
  return GeodesicSimplex(vertices, kind);
}

GeodesicSimplex straighten(const ParametrizedSimplex& f, double radius) {
  return build_simplex(f.vertices(), JoinKind::chart_affine, radius);
}

PrismChain prism_chain(const ParametrizedSimplex& f, double radius) {
  const GeodesicSimplex str = straighten(f, radius);
  const int n = f.degree;
  PrismChain out;
  for (int j = 0; j <= n; ++j) {
    ParametrizedSimplex term;
    term.degree = n + 1;
    term.barycentric = [f, str, j, n](std::span<const double> c) {
      // alpha_j: (v_0,0), ..., (v_j,0), (v_j,1), ..., (v_n,1)
      std::vector<double> x(n + 1, 0.0);
      double t = 0.0;
      for (int k = 0; k <= n + 1; ++k) {
        if (k <= j) {
          x[k] += c[k];
        } else {
          x[k - 1] += c[k];
          t += c[k];
        }
      }
      return chart_join(f.at(x), str(x), t);
    };
    out.terms.push_back({(j % 2 == 0) ? 1 : -1, std::move(term)});
  }
  return out;
}

}  // namespace cocycle
