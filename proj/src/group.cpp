#include "cocycle/group.hpp"

#include "cocycle/error.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace cocycle {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AntipodalChart: return "AntipodalChart";
    case ErrorCode::AntipodalJoin: return "AntipodalJoin";
    case ErrorCode::ChartExceeded: return "ChartExceeded";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::IndexOut: return "IndexOut";
    case ErrorCode::DegenerateConfig: return "DegenerateConfig";
    case ErrorCode::QuadratureDiverged: return "QuadratureDiverged";
    case ErrorCode::DomainGuard: return "DomainGuard";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::BadReps: return "BadReps";
    case ErrorCode::PredicateNotFaceClosed: return "PredicateNotFaceClosed";
    case ErrorCode::NoCommonApex: return "NoCommonApex";
    case ErrorCode::NotWellConfigured: return "NotWellConfigured";
    case ErrorCode::KernelObstruction: return "KernelObstruction";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NotReebInvariant: return "NotReebInvariant";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ConfigParse: return "ConfigParse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- quaternions

UnitQuaternion::UnitQuaternion(double w, double x, double y, double z) : v_(w, x, y, z) {
  const double n = v_.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite quaternion");
  }
  v_ /= n;
}

UnitQuaternion UnitQuaternion::conjugate() const { return {w(), -x(), -y(), -z()}; }

UnitQuaternion UnitQuaternion::operator-() const { return {-w(), -x(), -y(), -z()}; }

Vec4 quat_mul(const Vec4& a, const Vec4& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  return UnitQuaternion(quat_mul(a.vec(), b.vec()));
}

double distance(const UnitQuaternion& a, const UnitQuaternion& b) { return (a.vec() - b.vec()).norm(); }

// ---------------------------------------------------------------- Lie vectors

std::size_t algebra_dim(Algebra tag) {
  switch (tag) {
    case Algebra::su2:
    case Algebra::so3: return 3;
    case Algebra::so4: return 6;
  }
  return 0;
}

LieVector::LieVector(Algebra tag, Eigen::VectorXd coefficients) : tag_(tag), coeffs_(std::move(coefficients)) {
  if (static_cast<std::size_t>(coeffs_.size()) != algebra_dim(tag_)) {
    throw Error(ErrorCode::InvalidArgument, "coefficient count does not match the algebra dimension");
  }
}

LieVector LieVector::su2(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return {Algebra::su2, v};
}

// ---------------------------------------------------------------- rotations

namespace {

Eigen::MatrixXd nearest_rotation(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace

Rotation::Rotation(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || (m.rows() != 3 && m.rows() != 4)) {
    throw Error(ErrorCode::InvalidArgument, "rotation must be 3x3 or 4x4");
  }
  const auto n = m.rows();
  const double orth = (m.transpose() * m - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (orth > 1e-10 || std::abs(m.determinant() - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "matrix is not in SO(n)");
  }
  m_ = nearest_rotation(m);
}

Rotation::Rotation(const Eigen::MatrixXd& m, Trusted) : m_(nearest_rotation(m)) {}

Rotation Rotation::identity(int dim) { return Rotation(Eigen::MatrixXd::Identity(dim, dim)); }

Rotation Rotation::inverse() const { return Rotation(m_.transpose(), Trusted{}); }

Rotation operator*(const Rotation& a, const Rotation& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::InvalidArgument, "rotation dimensions differ");
  return Rotation(a.m_ * b.m_, Rotation::Trusted{});
}

// ---------------------------------------------------------------- exp / log

UnitQuaternion quat_exp(const Vec3& X) {
  const double theta = X.norm();
  if (theta < 1e-300) return UnitQuaternion::identity();
  const double s = std::sin(theta) / theta;
  return {std::cos(theta), s * X[0], s * X[1], s * X[2]};
}

UnitQuaternion quat_exp(const LieVector& X) {
  if (X.tag() != Algebra::su2) throw Error(ErrorCode::InvalidArgument, "quat_exp expects an su2 vector");
  const auto& c = X.coefficients();
  return quat_exp(Vec3(c[0], c[1], c[2]));
}

Vec3 quat_log_vec(const UnitQuaternion& q) {
  if ((q.vec() + Vec4(1, 0, 0, 0)).norm() < 1e-12) {
    throw Error(ErrorCode::AntipodalChart, "log is undefined at -1");
  }
  const Vec3 im(q.x(), q.y(), q.z());
  const double s = im.norm();
  if (s < 1e-300) return Vec3::Zero();
  const double theta = std::atan2(s, q.w());
  return (theta / s) * im;
}

LieVector quat_log(const UnitQuaternion& q) {
  const Vec3 v = quat_log_vec(q);
  return LieVector::su2(v[0], v[1], v[2]);
}

// ---------------------------------------------------------------- Hopf

const Eigen::Matrix3d& hopf_frame() {
  // cyclic permutation (i, j, k) -> (z, x, y): the fibre through 1 lands on the north pole
  static const Eigen::Matrix3d P = (Eigen::Matrix3d() << 0, 1, 0, 0, 0, 1, 1, 0, 0).finished();
  return P;
}

namespace {

Vec3 im_part(const Vec4& v) { return {v[1], v[2], v[3]}; }

const Vec4 kI(0, 1, 0, 0);

}  // namespace

S2Point hopf(const UnitQuaternion& q) {
  const Vec4& v = q.vec();
  return 0.5 * hopf_frame() * im_part(quat_mul(quat_conj(v), quat_mul(kI, v)));
}

Vec3 hopf_differential(const Vec4& q, const Vec4& v) {
  const Vec4 a = quat_mul(quat_conj(v), quat_mul(kI, q));
  const Vec4 b = quat_mul(quat_conj(q), quat_mul(kI, v));
  return 0.5 * hopf_frame() * im_part(a + b);
}

Rotation so3_of(const UnitQuaternion& q) {
  const double w = q.w(), x = q.x(), y = q.y(), z = q.z();
  Eigen::MatrixXd m(3, 3);
  m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return Rotation(m);
}

Rotation so4_of(const UnitQuaternion& q1, const UnitQuaternion& q2) {
  const Vec4 q2inv = quat_conj(q2.vec());
  Eigen::MatrixXd m(4, 4);
  for (int c = 0; c < 4; ++c) {
    const Vec4 e = Vec4::Unit(c);
    m.col(c) = quat_mul(q1.vec(), quat_mul(e, q2inv));
  }
  return Rotation(m);
}

UnitQuaternion j_embed(int m, long a) {
  if (m < 2) throw Error(ErrorCode::BadOrder, "cyclic order must be at least 2, got " + std::to_string(m));
  const long r = ((a % m) + m) % m;
  const double t = 2.0 * std::numbers::pi * static_cast<double>(r) / m;
  return {std::cos(t), std::sin(t), 0.0, 0.0};
}

Vec4 act_S3(const Rotation& R, const Vec4& x) {
  if (R.dim() != 4) throw Error(ErrorCode::InvalidArgument, "act_S3 needs a 4x4 rotation");
  const Vec4 y = R.matrix() * x;
  return y / y.norm();
}

}  // namespace cocycle
