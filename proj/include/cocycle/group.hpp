#pragma once

// Floating-point models of SU(2), SO(3), SO(4) and the maps between them.
//
// Conventions used throughout the library:
//   * quaternions are (w, x, y, z) = w + x i + y j + z k and double as points of S^3 in R^4;
//   * SU(2) x SU(2) -> SO(4) sends (q1, q2) to x |-> q1 x q2^{-1};
//   * the Hopf map has fibres {e^{i t} q} and lands on the radius-1/2 sphere.

#include <Eigen/Core>

#include <array>
#include <cstddef>

namespace cocycle {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using S2Point = Vec3;

class UnitQuaternion {
 public:
  UnitQuaternion() = default;
  /// Normalizes its input; throws InvalidArgument for the zero vector.
  UnitQuaternion(double w, double x, double y, double z);
  explicit UnitQuaternion(const Vec4& v) : UnitQuaternion(v[0], v[1], v[2], v[3]) {}

  static UnitQuaternion identity() { return {}; }
  static UnitQuaternion i() { return {0, 1, 0, 0}; }
  static UnitQuaternion j() { return {0, 0, 1, 0}; }
  static UnitQuaternion k() { return {0, 0, 0, 1}; }

  double w() const { return v_[0]; }
  double x() const { return v_[1]; }
  double y() const { return v_[2]; }
  double z() const { return v_[3]; }
  const Vec4& vec() const { return v_; }

  UnitQuaternion conjugate() const;
  UnitQuaternion inverse() const { return conjugate(); }
  UnitQuaternion operator-() const;

  friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b);

 private:
  Vec4 v_{1.0, 0.0, 0.0, 0.0};
};

// Raw quaternion product on R^4 (no normalization); used for tangent vectors.
Vec4 quat_mul(const Vec4& a, const Vec4& b);
inline Vec4 quat_conj(const Vec4& a) { return {a[0], -a[1], -a[2], -a[3]}; }

double distance(const UnitQuaternion& a, const UnitQuaternion& b);

enum class Algebra { su2, so3, so4 };

std::size_t algebra_dim(Algebra tag);

// Coefficients in the fixed basis of the algebra:
//   su2: quaternions (i, j, k);  so3: L_x, L_y, L_z;  so4: E_ab - E_ba for a<b, lexicographic.
class LieVector {
 public:
  LieVector(Algebra tag, Eigen::VectorXd coefficients);
  static LieVector su2(double a, double b, double c);

  Algebra tag() const { return tag_; }
  const Eigen::VectorXd& coefficients() const { return coeffs_; }
  double norm() const { return coeffs_.norm(); }

 private:
  Algebra tag_;
  Eigen::VectorXd coeffs_;
};

class Rotation {
 public:
  /// Checks orthogonality and det = +1 within 1e-10, then re-orthonormalizes.
  explicit Rotation(const Eigen::MatrixXd& m);
  static Rotation identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  Rotation inverse() const;

  friend Rotation operator*(const Rotation& a, const Rotation& b);

 private:
  struct Trusted {};
  Rotation(const Eigen::MatrixXd& m, Trusted);
  Eigen::MatrixXd m_;
};

UnitQuaternion quat_exp(const LieVector& X);
UnitQuaternion quat_exp(const Vec3& X);
/// Throws AntipodalChart at q = -1.
LieVector quat_log(const UnitQuaternion& q);
Vec3 quat_log_vec(const UnitQuaternion& q);

S2Point hopf(const UnitQuaternion& q);
/// Derivative of hopf at q applied to the ambient vector v.
Vec3 hopf_differential(const Vec4& q, const Vec4& v);
/// Rotation P of R^3 with hopf(q) = P * Im(q^{-1} i q) / 2.
const Eigen::Matrix3d& hopf_frame();

Rotation so3_of(const UnitQuaternion& q);
Rotation so4_of(const UnitQuaternion& q1, const UnitQuaternion& q2);

/// cos(2 pi a/m) + i sin(2 pi a/m); throws BadOrder when m < 2.
UnitQuaternion j_embed(int m, long a);

Vec4 act_S3(const Rotation& R, const Vec4& x);

}  // namespace cocycle
