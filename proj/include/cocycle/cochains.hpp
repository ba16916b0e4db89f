#pragma once

// Homogeneous cochains with values in R / Lambda, integer chains on group tuples, the integrated
// cochain of an invariant form, cyclic cycles, pairings and the transfer.

#include "cocycle/error.hpp"
#include "cocycle/finite_group.hpp"
#include "cocycle/forms.hpp"
#include "cocycle/group.hpp"
#include "cocycle/simplex.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cocycle {

/// Lambda = period * Z; period 0 means no reduction.
struct Lattice {
  double period = 0.0;
  static Lattice none() { return {0.0}; }
  static Lattice integers() { return {1.0}; }
  static Lattice two_pi();
};

/// Representative in [0, period), or v itself when period is 0.
double reduce_mod(double v, Lattice lattice);
/// Signed representative in [-period/2, period/2).
double centered_mod(double v, Lattice lattice);
double circle_distance(double a, double b, Lattice lattice);

struct CochainValue {
  double value = 0.0;
  double error = 0.0;  // accumulated quadrature error estimate
};

template <class G>
class HomogeneousCochain {
 public:
  using Tuple = std::vector<G>;
  using Evaluator = std::function<CochainValue(const Tuple&)>;
  using Guard = std::function<bool(const Tuple&)>;

  HomogeneousCochain(int degree, Lattice lattice, Evaluator eval, Guard guard = {})
      : degree_(degree), lattice_(lattice), eval_(std::move(eval)), guard_(std::move(guard)) {}

  int degree() const { return degree_; }
  Lattice lattice() const { return lattice_; }
  bool admissible(const Tuple& t) const { return !guard_ || guard_(t); }

  /// Reduced mod Lambda. Throws DomainGuard for inadmissible tuples.
  CochainValue evaluate(const Tuple& t) const {
    if (static_cast<int>(t.size()) != degree_ + 1) {
      throw Error(ErrorCode::InvalidArgument, "tuple length does not match cochain degree");
    }
    if (!admissible(t)) throw Error(ErrorCode::DomainGuard, "tuple outside the cochain domain");
    CochainValue v = eval_(t);
    v.value = reduce_mod(v.value, lattice_);
    return v;
  }
  double operator()(const Tuple& t) const { return evaluate(t).value; }

 private:
  int degree_;
  Lattice lattice_;
  Evaluator eval_;
  Guard guard_;
};

/// (df)(a) = sum_i (-1)^i f(d_i a). The domain is the set of tuples whose faces are admissible.
template <class G>
HomogeneousCochain<G> coboundary(const HomogeneousCochain<G>& f) {
  using Tuple = typename HomogeneousCochain<G>::Tuple;
  auto eval = [f](const Tuple& t) {
    CochainValue out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const CochainValue v = f.evaluate(face(i, t));
      out.value += (i % 2 == 0 ? 1.0 : -1.0) * v.value;
      out.error += v.error;
    }
    return out;
  };
  auto guard = [f](const Tuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!f.admissible(face(i, t))) return false;
    }
    return true;
  };
  return HomogeneousCochain<G>(f.degree() + 1, f.lattice(), eval, guard);
}

// ---------------------------------------------------------------- integrated cochains

struct FillingOptions {
  QuadratureSpec quad{};
  Vec4 base_point = Vec4(1, 0, 0, 0);
  double radius = kDefaultSmallRadius;
};

/// Tuples in SO(4) act on the base point; the form (on S^3) is integrated over the spherical
/// iterated-join simplex. Guard: the projected points lie in an open hemisphere.
HomogeneousCochain<Rotation> F_sigma_spherical(const DifferentialForm& form, Lattice lattice,
                                               const FillingOptions& opts = {});
/// Tuples in SU(2); chart-affine simplex. Guard: U-small.
HomogeneousCochain<UnitQuaternion> F_sigma_chart(const DifferentialForm& form, Lattice lattice,
                                                 const FillingOptions& opts = {});

/// (dF)(t) as a signed representative, with the summed error estimates of the five faces.
template <class G>
CochainValue cocycle_defect(const HomogeneousCochain<G>& F, const std::vector<G>& t) {
  CochainValue v = coboundary(F).evaluate(t);
  v.value = centered_mod(v.value, F.lattice());
  return v;
}

// ---------------------------------------------------------------- chains

/// Formal integer combination of integer-labelled tuples of a fixed degree.
struct HomogeneousChain {
  int degree = 0;
  std::map<std::vector<int>, long> terms;

  void add(const std::vector<int>& t, long coeff);
  bool empty() const { return terms.empty(); }
};

HomogeneousChain boundary(const HomogeneousChain& c);
/// Left-translate every tuple of a Z/m chain so its first entry is 0, and merge.
HomogeneousChain normalize_cyclic(const HomogeneousChain& c, int m);

struct CyclicCycle {
  int m = 0;
  HomogeneousChain chain;  // sum_{i=1}^m (0, 1, i, i+1), entries mod m
};

CyclicCycle tau_cycle(int m);

/// sum of coeff * f(embed(t)), reduced mod Lambda. Rethrows DomainGuard with the offending tuple.
template <class G>
CochainValue kronecker_pair(const HomogeneousCochain<G>& f, const HomogeneousChain& c,
                            const std::function<G(int)>& embed) {
  if (!c.empty() && c.degree != f.degree()) throw Error(ErrorCode::InvalidArgument, "degree mismatch");
  CochainValue out;
  for (const auto& [tuple, coeff] : c.terms) {
    std::vector<G> g;
    g.reserve(tuple.size());
    for (int a : tuple) g.push_back(embed(a));
    if (!f.admissible(g)) {
      std::string s = "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + std::to_string(tuple[i]);
      throw Error(ErrorCode::DomainGuard, "tuple " + s + ") is outside the cochain domain");
    }
    const CochainValue v = f.evaluate(g);
    out.value += static_cast<double>(coeff) * v.value;
    out.error += std::abs(static_cast<double>(coeff)) * v.error;
  }
  out.value = reduce_mod(out.value, f.lattice());
  return out;
}

// ---------------------------------------------------------------- CS pairing

/// Base point moved by a fixed pseudorandom rotation drawn from the seed.
Vec4 generic_base_point(std::uint64_t seed = 0x5EED);

struct PairingResult {
  int m = 0;
  bool base_admissible = false;  // whether the identity base point gave hemispherical tuples
  double value_at_base = 0.0;    // meaningful only when base_admissible
  double error_at_base = 0.0;
  double value = 0.0;            // value used for the check (perturbed base point if needed)
  double error = 0.0;
  Vec4 base_used = Vec4(1, 0, 0, 0);
  std::string note;
};

/// <F_sigma(vol_S3), (j_m x j_{-m})_* tau_m> mod 1, with the base-point fallback.
PairingResult cs_pairing(int m, const QuadratureSpec& quad = {}, std::uint64_t seed = 0x5EED);

/// Same pairing for the cyclic representation a |-> (j_m(p a), j_m(-r a)) acting by x |-> q1 x q2^{-1}.
PairingResult cyclic_pairing(int m, int p, int r, const QuadratureSpec& quad = {}, const Vec4& base = Vec4(1, 0, 0, 0));

// ---------------------------------------------------------------- degrees of c1 and c2

PointMap c1_map(const UnitQuaternion& a0 = UnitQuaternion::identity());
PointMap c2_map(const UnitQuaternion& a0 = UnitQuaternion::identity());
/// integral over SU(2) of map^* vol_form(S^3, 1).
IntegralResult degree_of_map(const PointMap& map, const QuadratureSpec& quad = {});

// ---------------------------------------------------------------- finite cochains and transfer

using Fraction = boost::rational<long long>;

/// Representative in [0, 1).
Fraction reduce_mod1(const Fraction& x);

/// Q/Z-valued homogeneous cochain on a finite group (elements as table indices).
struct FiniteCochain {
  int degree = 0;
  std::function<Fraction(const std::vector<int>&)> eval;

  Fraction operator()(const std::vector<int>& t) const { return reduce_mod1(eval(t)); }
};

FiniteCochain finite_coboundary(const FiniteCochain& f);

/// Tr(phi)(g_0..g_n) = sum_t phi(t g_0 bar(t g_0)^{-1}, ...), bar(x) the representative of G x.
/// Throws NotNormal / BadReps.
FiniteCochain transfer(const FiniteCochain& phi, const FiniteGroupTable& gamma, const std::vector<int>& subgroup,
                       const std::vector<int>& reps);

/// All tuples of length len over {0..order-1}, lexicographic.
std::vector<std::vector<int>> all_tuples(int order, int len);

}  // namespace cocycle
