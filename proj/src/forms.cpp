#include "cocycle/forms.hpp"

#include "cocycle/error.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace cocycle {

namespace {

using std::numbers::pi;

const Vec4 kI(0, 1, 0, 0);

Vec3 head3(const Vec4& v) { return v.head<3>(); }
Vec3 im_part(const Vec4& v) { return v.tail<3>(); }

double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
  Eigen::Matrix4d m;
  m << a, b, c, d;
  return m.determinant();
}

void require_args(std::span<const Vec4> v, int k) {
  if (static_cast<int>(v.size()) != k) throw Error(ErrorCode::InvalidArgument, "wrong number of tangent vectors");
}

// Neumaier compensated sum, so the reduction is both ordered and accurate.
struct Accumulator {
  double sum = 0.0, comp = 0.0, abs_sum = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
    abs_sum += std::abs(x);
  }
  double value() const { return sum + comp; }
};

Vec4 project_tangent(Ambient a, const Vec4& p, const Vec4& v) {
  if (a == Ambient::S2) {
    const Vec3 q = head3(p), w = head3(v);
    const Vec3 t = w - (w.dot(q) / q.squaredNorm()) * q;
    return {t[0], t[1], t[2], 0.0};
  }
  return v - (v.dot(p) / p.squaredNorm()) * p;
}

using CubeMap = std::function<Vec4(std::span<const double>)>;

// Tensor Gauss-Legendre on a uniform grid of (2^level)^n cells of [0,1]^n.
double integrate_level(const DifferentialForm& form, int n, const CubeMap& map, const QuadratureSpec& quad,
                       int level, double& abs_total) {
  std::vector<double> nodes, weights;
  gauss_legendre(quad.order, nodes, weights);
  const long cells_per_axis = 1L << level;
  const double w = 1.0 / static_cast<double>(cells_per_axis);
  const double h = quad.step * w;

  Accumulator acc;
  if (n == 0) {
    const std::vector<double> none;
    const double val = form(map(none), {});
    abs_total = std::abs(val);
    return val;
  }

  std::vector<long> cell(n, 0);
  std::vector<int> node(n, 0);
  std::vector<double> c(n), shifted(n);
  std::vector<Vec4> tangents(n);
  long total_cells = 1;
  for (int i = 0; i < n; ++i) total_cells *= cells_per_axis;
  long nodes_per_cell = 1;
  for (int i = 0; i < n; ++i) nodes_per_cell *= quad.order;

  for (long ci = 0; ci < total_cells; ++ci) {
    long rem = ci;
    for (int a = n - 1; a >= 0; --a) {
      cell[a] = rem % cells_per_axis;
      rem /= cells_per_axis;
    }
    for (long ni = 0; ni < nodes_per_cell; ++ni) {
      long r = ni;
      double weight = 1.0;
      for (int a = n - 1; a >= 0; --a) {
        node[a] = static_cast<int>(r % quad.order);
        r /= quad.order;
        c[a] = (static_cast<double>(cell[a]) + nodes[node[a]]) * w;
        weight *= weights[node[a]] * w;
      }
      const Vec4 p = map(c);
      for (int a = 0; a < n; ++a) {
        shifted = c;
        auto at = [&](double off) {
          shifted[a] = c[a] + off;
          return map(shifted);
        };
        const Vec4 d = (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h);
        tangents[a] = project_tangent(form.ambient(), p, d);
      }
      acc.add(weight * form(p, tangents));
    }
  }
  abs_total = acc.abs_sum;
  return acc.value();
}

IntegralResult integrate_cube(const DifferentialForm& form, int n, const CubeMap& map, const QuadratureSpec& quad) {
  if (form.degree() != n) {
    throw Error(ErrorCode::InvalidArgument, "form degree " + std::to_string(form.degree()) +
                                                " does not match simplex degree " + std::to_string(n));
  }
  if (!(quad.tolerance > 0.0) || quad.depth < 0 || quad.order < 1 || !(quad.step > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "invalid quadrature spec");
  }
  if (n == 0) {
    double a = 0.0;
    return {integrate_level(form, 0, map, quad, 0, a), 0.0};
  }
  double abs_fine = 0.0;
  int level = quad.depth;
  double coarse = integrate_level(form, n, map, quad, level, abs_fine);
  double fine = integrate_level(form, n, map, quad, level + 1, abs_fine);
  double diff = std::abs(fine - coarse);
  // deepen until the two finest levels agree, up to max_depth
  while (diff > 10.0 * quad.tolerance && level + 1 < quad.max_depth) {
    ++level;
    coarse = fine;
    fine = integrate_level(form, n, map, quad, level + 1, abs_fine);
    diff = std::abs(fine - coarse);
  }
  if (diff > 10.0 * quad.tolerance) {
    throw Error(ErrorCode::QuadratureDiverged, "refinement levels differ by " + std::to_string(diff));
  }
  // roundoff floor: summation plus the cancellation in the difference stencil
  const double eps = std::numeric_limits<double>::epsilon();
  const double h_fine = quad.step / static_cast<double>(1L << (level + 1));
  const double floor = abs_fine * eps * (64.0 + n / h_fine);
  return {fine, diff + floor};
}

std::array<Vec3, 12> icosahedron_vertices() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::array<Vec3, 12> v;
  int k = 0;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      v[k++] = Vec3(0, a, b);
      v[k++] = Vec3(a, b, 0);
      v[k++] = Vec3(b, 0, a);
    }
  }
  return v;
}

ParametrizedSimplex radial_cell(std::vector<Vec4> verts, double radius) {
  ParametrizedSimplex s;
  s.degree = static_cast<int>(verts.size()) - 1;
  s.barycentric = [verts = std::move(verts), radius](std::span<const double> b) {
    Vec4 p = Vec4::Zero();
    for (std::size_t i = 0; i < verts.size(); ++i) p += b[i] * verts[i];
    return Vec4(radius * p / p.norm());
  };
  return s;
}

}  // namespace

// ---------------------------------------------------------------- forms

DifferentialForm::DifferentialForm(int degree, Ambient ambient, Evaluator eval)
    : degree_(degree), ambient_(ambient), eval_(std::move(eval)) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative form degree");
}

double DifferentialForm::operator()(const Vec4& p, std::span<const Vec4> v) const {
  require_args(v, degree_);
  return eval_(p, v);
}

DifferentialForm DifferentialForm::times(std::function<double(const Vec4&)> fn) const {
  return {degree_, ambient_, [e = eval_, fn = std::move(fn)](const Vec4& p, std::span<const Vec4> v) {
            return fn(p) * e(p, v);
          }};
}

DifferentialForm DifferentialForm::scaled(double c) const {
  return {degree_, ambient_, [e = eval_, c](const Vec4& p, std::span<const Vec4> v) { return c * e(p, v); }};
}

DifferentialForm zero_form(int degree, Ambient ambient) {
  return {degree, ambient, [](const Vec4&, std::span<const Vec4>) { return 0.0; }};
}

DifferentialForm vol_form(Ambient sphere, double total) {
  if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "total must be positive");
  if (sphere == Ambient::S2) {
    // solid-angle form, independent of the radius
    return {2, sphere, [c = total / (4.0 * pi)](const Vec4& p, std::span<const Vec4> v) {
              const Vec3 q = head3(p);
              return c * q.dot(head3(v[0]).cross(head3(v[1]))) / std::pow(q.norm(), 3);
            }};
  }
  return {3, sphere, [c = total / (2.0 * pi * pi)](const Vec4& p, std::span<const Vec4> v) {
            return c * det4(p, v[0], v[1], v[2]);
          }};
}

DifferentialForm fubini_study_form() {
  return {2, Ambient::S2, [](const Vec4& p, std::span<const Vec4> v) {
            return 4.0 * head3(p).dot(head3(v[0]).cross(head3(v[1])));
          }};
}

DifferentialForm mc3_form() {
  // Tr(X Y Z) summed with signs over the quaternion frame (i, j, k) gives -12, and
  // SU(2) has volume 2 pi^2 in that frame.
  return {3, Ambient::SU2, [](const Vec4& q, std::span<const Vec4> v) {
            const Vec4 qc = quat_conj(q);
            Eigen::Matrix3d m;
            for (int a = 0; a < 3; ++a) m.col(a) = im_part(quat_mul(qc, v[a]));
            return -m.determinant() / (2.0 * pi * pi);
          }};
}

DifferentialForm contact_form_alpha() {
  return {1, Ambient::S3, [](const Vec4& q, std::span<const Vec4> v) { return quat_mul(kI, q).dot(v[0]); }};
}

DifferentialForm contact_form_dalpha() {
  return {2, Ambient::S3,
          [](const Vec4&, std::span<const Vec4> v) { return 2.0 * quat_mul(kI, v[0]).dot(v[1]); }};
}

DifferentialForm contact_volume() {
  return {3, Ambient::S3, [](const Vec4& q, std::span<const Vec4> v) {
            const Vec4 iq = quat_mul(kI, q);
            auto da = [](const Vec4& a, const Vec4& b) { return 2.0 * quat_mul(kI, a).dot(b); };
            return iq.dot(v[0]) * da(v[1], v[2]) - iq.dot(v[1]) * da(v[0], v[2]) + iq.dot(v[2]) * da(v[0], v[1]);
          }};
}

// ---------------------------------------------------------------- quadrature

IntegralResult& IntegralResult::operator+=(const IntegralResult& o) {
  value += o.value;
  error_estimate += o.error_estimate;
  return *this;
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be positive");
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // map [-1,1] to [0,1]; nodes ascend
    nodes[order - 1 - i] = 0.5 * (x + 1.0);
    weights[order - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

IntegralResult pullback_integral(const DifferentialForm& form, const ParametrizedSimplex& f,
                                 const QuadratureSpec& quad) {
  return integrate_cube(form, f.degree, [&f](std::span<const double> c) { return f.at_collapsed(c); }, quad);
}

IntegralResult pullback_integral(const DifferentialForm& form, const GeodesicSimplex& s, const QuadratureSpec& quad) {
  return integrate_cube(form, s.degree(), [&s](std::span<const double> c) { return s.collapsed(c); }, quad);
}

std::vector<ParametrizedSimplex> sphere_atlas(Ambient sphere) {
  std::vector<ParametrizedSimplex> cells;
  if (sphere == Ambient::S2) {
    const auto v = icosahedron_vertices();
    const double edge2 = 4.0;
    for (int a = 0; a < 12; ++a) {
      for (int b = a + 1; b < 12; ++b) {
        for (int c = b + 1; c < 12; ++c) {
          auto adj = [&](int x, int y) { return std::abs((v[x] - v[y]).squaredNorm() - edge2) < 1e-9; };
          if (!adj(a, b) || !adj(b, c) || !adj(a, c)) continue;
          Vec3 p0 = v[a], p1 = v[b], p2 = v[c];
          if (p0.dot(p1.cross(p2)) < 0) std::swap(p1, p2);
          auto lift = [](const Vec3& x) { return Vec4(x[0], x[1], x[2], 0.0); };
          cells.push_back(radial_cell({lift(p0), lift(p1), lift(p2)}, 0.5));
        }
      }
    }
    return cells;
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Vec4> verts;
    int sign = 1;
    for (int a = 0; a < 4; ++a) {
      const double s = (mask & (1 << a)) ? -1.0 : 1.0;
      if (s < 0) sign = -sign;
      verts.push_back(s * Vec4::Unit(a));
    }
    if (sign < 0) std::swap(verts[2], verts[3]);
    cells.push_back(radial_cell(std::move(verts), 1.0));
  }
  return cells;
}

IntegralResult sphere_integral(const DifferentialForm& form, Ambient sphere, const QuadratureSpec& quad,
                               const PointMap& post) {
  const int dim = sphere == Ambient::S2 ? 2 : 3;
  if (form.degree() != dim) throw Error(ErrorCode::InvalidArgument, "sphere_integral needs a top-degree form");
  IntegralResult total;
  for (const auto& cell : sphere_atlas(sphere)) {
    if (post) {
      total += integrate_cube(form, dim,
                              [&cell, &post](std::span<const double> c) { return post(cell.at_collapsed(c)); }, quad);
    } else {
      total += integrate_cube(form, dim, [&cell](std::span<const double> c) { return cell.at_collapsed(c); }, quad);
    }
  }
  return total;
}

}  // namespace cocycle
