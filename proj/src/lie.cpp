#include "cocycle/lie.hpp"

#include "cocycle/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace cocycle {

LieAlgebraTable::LieAlgebraTable(Algebra tag, std::vector<std::string> names)
    : tag_(tag),
      dim_(static_cast<int>(names.size())),
      names_(std::move(names)),
      c_(static_cast<std::size_t>(dim_ * dim_ * dim_), Fraction(0)),
      pairing_(static_cast<std::size_t>(dim_ * dim_), Fraction(0)) {
  for (int i = 0; i < dim_; ++i) pairing_[i * dim_ + i] = 1;
}

LieAlgebraTable LieAlgebraTable::su2() {
  LieAlgebraTable L(Algebra::su2, {"i", "j", "k"});
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, k = (a + 2) % 3;
    L.c_[(a * 3 + b) * 3 + k] = 2;
    L.c_[(b * 3 + a) * 3 + k] = -2;
  }
  return L;
}

LieAlgebraTable LieAlgebraTable::so3() {
  LieAlgebraTable L(Algebra::so3, {"Lx", "Ly", "Lz"});
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, k = (a + 2) % 3;
    L.c_[(a * 3 + b) * 3 + k] = 1;
    L.c_[(b * 3 + a) * 3 + k] = -1;
  }
  return L;
}

LieAlgebraTable LieAlgebraTable::so4() {
  std::vector<std::pair<int, int>> idx;
  std::vector<std::string> names;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      idx.emplace_back(a, b);
      names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  LieAlgebraTable L(Algebra::so4, names);
  using M = std::array<std::array<long, 4>, 4>;
  auto basis = [&](int k) {
    M m{};
    m[idx[k].first][idx[k].second] = 1;
    m[idx[k].second][idx[k].first] = -1;
    return m;
  };
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const M x = basis(i), y = basis(j);
      M br{};
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          for (int t = 0; t < 4; ++t) br[r][s] += x[r][t] * y[t][s] - y[r][t] * x[t][s];
      for (int k = 0; k < 6; ++k) L.c_[(i * 6 + j) * 6 + k] = br[idx[k].first][idx[k].second];
    }
  }
  return L;
}

bool LieAlgebraTable::antisymmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != -c(j, i, k)) return false;
  return true;
}

bool LieAlgebraTable::jacobi() const {
  // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
  for (int x = 0; x < dim_; ++x)
    for (int y = 0; y < dim_; ++y)
      for (int z = 0; z < dim_; ++z)
        for (int out = 0; out < dim_; ++out) {
          Fraction s(0);
          for (int m = 0; m < dim_; ++m) {
            s += c(x, y, m) * c(m, z, out) + c(y, z, m) * c(m, x, out) + c(z, x, m) * c(m, y, out);
          }
          if (s.numerator() != 0) return false;
        }
  return true;
}

bool LieAlgebraTable::pairing_invariant() const {
  for (int x = 0; x < dim_; ++x)
    for (int y = 0; y < dim_; ++y)
      for (int z = 0; z < dim_; ++z) {
        Fraction s(0);
        for (int m = 0; m < dim_; ++m) s += c(x, y, m) * pairing(m, z) + pairing(y, m) * c(x, z, m);
        if (s.numerator() != 0) return false;
      }
  return true;
}

LieAlgebraTable LieAlgebraTable::with_pairing_scaled(const Fraction& s) const {
  LieAlgebraTable L = *this;
  for (auto& p : L.pairing_) p *= s;
  return L;
}

namespace {

template <class Scalar>
MultilinearCochain<Scalar> ce_impl(const MultilinearCochain<Scalar>& w, const LieAlgebraTable& L) {
  const int n = w.degree();
  if (w.dim() != L.dim()) throw Error(ErrorCode::InvalidArgument, "cochain and algebra dimensions differ");
  MultilinearCochain<Scalar> out(n + 1, L.dim());
  if (n == 0) return out;
  for (const auto& X : out.index_tuples()) {
    Scalar total(0);
    // 1-based positions i < j in the displayed formula
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> rest;
        for (int p = 0; p <= n; ++p)
          if (p != i && p != j) rest.push_back(X[p]);
        const int sign = ((i + 1 + j + 1) % 2 == 0) ? 1 : -1;
        std::vector<int> arg(1);
        arg.insert(arg.end(), rest.begin(), rest.end());
        for (int k = 0; k < L.dim(); ++k) {
          const Fraction& ck = L.c(X[i], X[j], k);
          if (ck.numerator() == 0) continue;
          arg[0] = k;
          if constexpr (std::is_same_v<Scalar, double>) {
            total += sign * boost::rational_cast<double>(ck) * w(arg);
          } else {
            total += Scalar(sign) * ck * w(arg);
          }
        }
      }
    }
    out(X) = total;
  }
  return out;
}

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

ExactCochain ce_differential(const ExactCochain& w, const LieAlgebraTable& L) { return ce_impl(w, L); }
RealCochain ce_differential(const RealCochain& w, const LieAlgebraTable& L) { return ce_impl(w, L); }

ExactCochain cartan_cocycle(const LieAlgebraTable& L) {
  ExactCochain phi(3, L.dim());
  for (const auto& t : phi.index_tuples()) {
    Fraction s(0);
    for (int k = 0; k < L.dim(); ++k) s += L.pairing(t[0], k) * L.c(t[1], t[2], k);
    phi(t) = s;
  }
  return phi;
}

RealCochain alternate(const RealCochain& w) {
  const int n = w.degree();
  RealCochain out(n, w.dim());
  std::vector<int> perm(n);
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  for (const auto& t : out.index_tuples()) {
    std::iota(perm.begin(), perm.end(), 0);
    double s = 0.0;
    do {
      std::vector<int> u(n);
      for (int i = 0; i < n; ++i) u[i] = t[perm[i]];
      s += permutation_sign(perm) * w(u);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out(t) = s / fact;
  }
  return out;
}

UnitQuaternion lie_exp(const LieAlgebraTable& L, int k, double t) {
  if (L.tag() == Algebra::so4 || k < 0 || k >= 3) {
    throw Error(ErrorCode::InvalidArgument, "lie_exp supports su(2) and so(3) bases");
  }
  const double scale = L.tag() == Algebra::so3 ? 0.5 : 1.0;
  Vec3 X = Vec3::Zero();
  X[k] = scale * t;
  return quat_exp(X);
}

RealCochain derive_D(const HomogeneousCochain<UnitQuaternion>& f, const LieAlgebraTable& L, int n, double h) {
  if (f.degree() != n) throw Error(ErrorCode::InvalidArgument, "cochain degree must equal n");
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  RealCochain raw(n, L.dim());
  const double denom = std::pow(2.0 * h, n);
  for (const auto& X : raw.index_tuples()) {
    // repeated basis elements alternate away
    std::vector<int> sorted = X;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    double total = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<UnitQuaternion> tuple{UnitQuaternion::identity()};
      int sign = 1;
      for (int i = 0; i < n; ++i) {
        const double t = (mask & (1u << i)) ? -h : h;
        if (t < 0) sign = -sign;
        tuple.push_back(tuple.back() * lie_exp(L, X[i], t));
      }
      if (!f.admissible(tuple)) throw Error(ErrorCode::StepTooLarge, "exp products leave the cochain domain");
      total += sign * f.evaluate(tuple).value;
    }
    raw(X) = total / denom;
  }
  return alternate(raw);
}

DifferentialForm left_invariant_covector(int k) {
  if (k < 0 || k > 2) throw Error(ErrorCode::IndexOut, "covector index must be 0, 1 or 2");
  return {1, Ambient::SU2, [k](const Vec4& q, std::span<const Vec4> v) { return quat_mul(quat_conj(q), v[0])[k + 1]; }};
}

HoshiiResult check_hoshii(const DifferentialForm& form, int i, double h, const QuadratureSpec& quad) {
  if (i < 1 || i > 3 || form.degree() != i) throw Error(ErrorCode::InvalidArgument, "degree must be 1, 2 or 3");
  const LieAlgebraTable L = LieAlgebraTable::su2();
  FillingOptions opts;
  opts.quad = quad;
  const auto F = F_sigma_chart(form, Lattice::none(), opts);
  HoshiiResult out;
  out.lhs = derive_D(F, L, i, h);
  double fact = 1.0;
  for (int k = 2; k <= i; ++k) fact *= k;
  for (auto& v : out.lhs.data()) v *= fact;

  out.rhs = RealCochain(i, L.dim());
  const Vec4 e(1, 0, 0, 0);
  double scale = 0.0;
  for (const auto& t : out.rhs.index_tuples()) {
    std::vector<Vec4> vs;
    for (int a : t) vs.push_back(Vec4::Unit(a + 1));
    out.rhs(t) = form(e, vs);
    scale = std::max(scale, std::abs(out.rhs(t)));
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < out.rhs.data().size(); ++k) {
    worst = std::max(worst, std::abs(out.lhs.data()[k] - out.rhs.data()[k]));
  }
  out.residual = scale > 0.0 ? worst / scale : worst;
  return out;
}

}  // namespace cocycle
