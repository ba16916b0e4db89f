#pragma once

// Chevalley-Eilenberg cochains on su(2), so(3), so(4) with exact structure constants, and the
// derivation map D from locally smooth group cochains on SU(2).

#include "cocycle/cochains.hpp"
#include "cocycle/forms.hpp"
#include "cocycle/group.hpp"

#include <string>
#include <vector>

namespace cocycle {

class LieAlgebraTable {
 public:
  static LieAlgebraTable su2();  // quaternion units i, j, k; [i, j] = 2k
  static LieAlgebraTable so3();  // L_x, L_y, L_z; [L_x, L_y] = L_z; pairing Tr(A^T B)/2
  static LieAlgebraTable so4();  // E_ab - E_ba, a < b lexicographic; pairing Tr(A^T B)/2

  Algebra tag() const { return tag_; }
  int dim() const { return dim_; }
  const std::string& basis_name(int i) const { return names_[i]; }
  /// c_{ij}^k with [e_i, e_j] = sum_k c_{ij}^k e_k.
  const Fraction& c(int i, int j, int k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const Fraction& pairing(int i, int j) const { return pairing_[i * dim_ + j]; }

  bool antisymmetric() const;
  bool jacobi() const;
  /// <[x,y],z> + <y,[x,z]> = 0 on basis elements.
  bool pairing_invariant() const;

  /// Pairing scaled by s (for the bilinearity check of the Cartan cocycle).
  LieAlgebraTable with_pairing_scaled(const Fraction& s) const;

 private:
  LieAlgebraTable(Algebra tag, std::vector<std::string> names);
  Algebra tag_;
  int dim_;
  std::vector<std::string> names_;
  std::vector<Fraction> c_;
  std::vector<Fraction> pairing_;
};

/// Dense alternating tensor of degree n over a basis of size dim.
template <class Scalar>
class MultilinearCochain {
 public:
  MultilinearCochain(int degree, int dim) : degree_(degree), dim_(dim), data_(ipow(dim, degree), Scalar(0)) {}

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const Scalar& operator()(const std::vector<int>& idx) const { return data_[offset(idx)]; }
  Scalar& operator()(const std::vector<int>& idx) { return data_[offset(idx)]; }
  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  /// All index tuples, lexicographic.
  std::vector<std::vector<int>> index_tuples() const {
    std::vector<std::vector<int>> out;
    std::vector<int> t(degree_, 0);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      out.push_back(t);
      for (int p = degree_ - 1; p >= 0; --p) {
        if (++t[p] < dim_) break;
        t[p] = 0;
      }
    }
    return out;
  }

  bool is_alternating() const {
    for (const auto& t : index_tuples()) {
      for (int a = 0; a + 1 < degree_; ++a) {
        auto s = t;
        std::swap(s[a], s[a + 1]);
        if ((*this)(s) != -(*this)(t)) return false;
        if (t[a] == t[a + 1] && (*this)(t) != Scalar(0)) return false;
      }
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != Scalar(0)) return false;
    return true;
  }

 private:
  static std::size_t ipow(int b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
    return r;
  }
  std::size_t offset(const std::vector<int>& idx) const {
    std::size_t o = 0;
    for (int i : idx) o = o * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    return o;
  }
  int degree_;
  int dim_;
  std::vector<Scalar> data_;
};

using ExactCochain = MultilinearCochain<Fraction>;
using RealCochain = MultilinearCochain<double>;

/// (d w)(X_1..X_{n+1}) = sum_{i<j} (-1)^{i+j} w([X_i, X_j], X_1, ^i, ^j, ...), trivial coefficients.
ExactCochain ce_differential(const ExactCochain& w, const LieAlgebraTable& L);
RealCochain ce_differential(const RealCochain& w, const LieAlgebraTable& L);

/// Phi(x, y, z) = <x, [y, z]>.
ExactCochain cartan_cocycle(const LieAlgebraTable& L);

/// (1/n!) sum_sigma sgn(sigma) w(X_sigma(1), ...).
RealCochain alternate(const RealCochain& w);

/// exp of t * e_k in SU(2); so(3) basis elements map to half-angle quaternions.
UnitQuaternion lie_exp(const LieAlgebraTable& L, int k, double t);

/// Mixed central differences of Phi_f(t_1 X_1, ..., t_n X_n) = f(e, exp(t_1 X_1), ..., prod exp(t_i X_i))
/// on the lattice {-h, h}^n, then alternated. Throws StepTooLarge when a tuple leaves f's domain.
RealCochain derive_D(const HomogeneousCochain<UnitQuaternion>& f, const LieAlgebraTable& L, int n, double h);

struct HoshiiResult {
  double residual = 0.0;  // max relative deviation of i! D(F_sigma(form)) from form at the identity
  RealCochain lhs{0, 0};  // i! D(F_sigma(form))
  RealCochain rhs{0, 0};  // form at the identity on basis vectors
};

/// Works on SU(2) through the su(2) basis (i, j, k).
HoshiiResult check_hoshii(const DifferentialForm& form, int i, double h, const QuadratureSpec& quad = {});

/// theta^k(q; v) = k-th imaginary coordinate of q^{-1} v.
DifferentialForm left_invariant_covector(int k);

}  // namespace cocycle
