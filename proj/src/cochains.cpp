#include "cocycle/cochains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace cocycle {

Lattice Lattice::two_pi() { return {2.0 * std::numbers::pi}; }

double reduce_mod(double v, Lattice lattice) {
  if (lattice.period == 0.0) return v;
  double r = std::fmod(v, lattice.period);
  if (r < 0) r += lattice.period;
  if (r >= lattice.period) r -= lattice.period;
  return r;
}

double centered_mod(double v, Lattice lattice) {
  if (lattice.period == 0.0) return v;
  double r = reduce_mod(v, lattice);
  if (r >= 0.5 * lattice.period) r -= lattice.period;
  return r;
}

double circle_distance(double a, double b, Lattice lattice) { return std::abs(centered_mod(a - b, lattice)); }

// ---------------------------------------------------------------- integrated cochains

HomogeneousCochain<Rotation> F_sigma_spherical(const DifferentialForm& form, Lattice lattice,
                                               const FillingOptions& opts) {
  const int deg = form.degree();
  auto points = [base = opts.base_point](const std::vector<Rotation>& t) {
    std::vector<Vec4> p;
    p.reserve(t.size());
    for (const auto& g : t) p.push_back(act_S3(g, base));
    return p;
  };
  auto eval = [form, points, quad = opts.quad](const std::vector<Rotation>& t) {
    const GeodesicSimplex s = build_simplex(points(t), JoinKind::spherical);
    const IntegralResult r = pullback_integral(form, s, quad);
    return CochainValue{r.value, r.error_estimate};
  };
  auto guard = [points](const std::vector<Rotation>& t) { return in_open_hemisphere(points(t)); };
  return HomogeneousCochain<Rotation>(deg, lattice, eval, guard);
}

HomogeneousCochain<UnitQuaternion> F_sigma_chart(const DifferentialForm& form, Lattice lattice,
                                                 const FillingOptions& opts) {
  const int deg = form.degree();
  auto eval = [form, quad = opts.quad, radius = opts.radius](const std::vector<UnitQuaternion>& t) {
    std::vector<Vec4> v;
    for (const auto& g : t) v.push_back(g.vec());
    const GeodesicSimplex s = build_simplex(v, JoinKind::chart_affine, radius);
    const IntegralResult r = pullback_integral(form, s, quad);
    return CochainValue{r.value, r.error_estimate};
  };
  auto guard = [radius = opts.radius](const std::vector<UnitQuaternion>& t) { return is_u_small(t, radius); };
  return HomogeneousCochain<UnitQuaternion>(deg, lattice, eval, guard);
}

// ---------------------------------------------------------------- chains

void HomogeneousChain::add(const std::vector<int>& t, long coeff) {
  if (coeff == 0) return;
  if (terms.empty() && degree == 0) degree = static_cast<int>(t.size()) - 1;
  if (static_cast<int>(t.size()) != degree + 1) throw Error(ErrorCode::InvalidArgument, "chain degree mismatch");
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms.emplace(t, coeff);
  } else if ((it->second += coeff) == 0) {
    terms.erase(it);
  }
}

HomogeneousChain boundary(const HomogeneousChain& c) {
  HomogeneousChain out;
  out.degree = c.degree - 1;
  if (c.degree == 0) return out;
  for (const auto& [t, coeff] : c.terms) {
    for (std::size_t i = 0; i < t.size(); ++i) out.add(face(i, t), (i % 2 == 0) ? coeff : -coeff);
  }
  return out;
}

HomogeneousChain normalize_cyclic(const HomogeneousChain& c, int m) {
  HomogeneousChain out;
  out.degree = c.degree;
  for (const auto& [t, coeff] : c.terms) {
    std::vector<int> n(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) n[i] = (((t[i] - t[0]) % m) + m) % m;
    out.add(n, coeff);
  }
  return out;
}

CyclicCycle tau_cycle(int m) {
  if (m < 2) throw Error(ErrorCode::BadOrder, "cyclic order must be at least 2, got " + std::to_string(m));
  CyclicCycle c;
  c.m = m;
  c.chain.degree = 3;
  for (int i = 1; i <= m; ++i) c.chain.add({0, 1 % m, i % m, (i + 1) % m}, 1);
  return c;
}

// ---------------------------------------------------------------- CS pairing

Vec4 generic_base_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  Vec4 v(n(rng), n(rng), n(rng), n(rng));
  return v / v.norm();
}

namespace {

PairingResult pair_with(int m, const std::function<Rotation(int)>& embed, const QuadratureSpec& quad,
                        const Vec4& base, const Vec4& fallback) {
  const CyclicCycle tau = tau_cycle(m);
  PairingResult out;
  out.m = m;
  auto run = [&](const Vec4& a0) {
    FillingOptions opts;
    opts.quad = quad;
    opts.base_point = a0;
    const auto F = F_sigma_spherical(vol_form(Ambient::S3, 1.0), Lattice::integers(), opts);
    return kronecker_pair<Rotation>(F, tau.chain, embed);
  };
  try {
    const CochainValue v = run(base);
    out.base_admissible = true;
    out.value_at_base = v.value;
    out.error_at_base = v.error;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DomainGuard && e.code() != ErrorCode::DegenerateConfig) throw;
    out.note = std::string("base point rejected: ") + e.what();
  }
  if (out.base_admissible) {
    out.value = out.value_at_base;
    out.error = out.error_at_base;
    out.base_used = base;
  } else {
    const CochainValue v = run(fallback);
    out.value = v.value;
    out.error = v.error;
    out.base_used = fallback;
  }
  return out;
}

}  // namespace

PairingResult cs_pairing(int m, const QuadratureSpec& quad, std::uint64_t seed) {
  auto embed = [m](int a) { return so4_of(j_embed(m, a), j_embed(m, -a)); };
  PairingResult r = pair_with(m, embed, quad, Vec4(1, 0, 0, 0), generic_base_point(seed));
  if (r.base_admissible) {
    // also report the perturbed value
    const PairingResult alt = pair_with(m, embed, quad, generic_base_point(seed), generic_base_point(seed));
    if (!r.note.empty()) r.note += "; ";
    r.note += "perturbed base value " + std::to_string(alt.value);
  }
  return r;
}

PairingResult cyclic_pairing(int m, int p, int r, const QuadratureSpec& quad, const Vec4& base) {
  auto embed = [m, p, r](int a) { return so4_of(j_embed(m, static_cast<long>(p) * a), j_embed(m, -static_cast<long>(r) * a)); };
  return pair_with(m, embed, quad, base, generic_base_point(0x5EED));
}

// ---------------------------------------------------------------- degrees

PointMap c1_map(const UnitQuaternion& a0) {
  return [a = a0.vec()](const Vec4& x) { return quat_mul(quat_mul(x, a), quat_conj(x)); };
}

PointMap c2_map(const UnitQuaternion& a0) {
  return [a = a0.vec()](const Vec4& x) { return quat_mul(quat_mul(x, a), x); };
}

IntegralResult degree_of_map(const PointMap& map, const QuadratureSpec& quad) {
  return sphere_integral(vol_form(Ambient::S3, 1.0), Ambient::S3, quad, map);
}

// ---------------------------------------------------------------- finite cochains

Fraction reduce_mod1(const Fraction& x) {
  const long long n = x.numerator(), d = x.denominator();
  long long r = n % d;
  if (r < 0) r += d;
  return Fraction(r, d);
}

FiniteCochain finite_coboundary(const FiniteCochain& f) {
  FiniteCochain out;
  out.degree = f.degree + 1;
  out.eval = [f](const std::vector<int>& t) {
    Fraction s(0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Fraction v = f(face(i, t));
      s += (i % 2 == 0) ? v : -v;
    }
    return s;
  };
  return out;
}

FiniteCochain transfer(const FiniteCochain& phi, const FiniteGroupTable& gamma, const std::vector<int>& subgroup,
                       const std::vector<int>& reps) {
  if (!gamma.is_normal(subgroup)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  const std::set<int> G(subgroup.begin(), subgroup.end());
  if (gamma.order() % static_cast<int>(G.size()) != 0 ||
      static_cast<int>(reps.size()) != gamma.order() / static_cast<int>(G.size())) {
    throw Error(ErrorCode::BadReps, "representative count does not match the index");
  }
  if (std::find(reps.begin(), reps.end(), gamma.identity()) == reps.end()) {
    throw Error(ErrorCode::BadReps, "representatives must contain the identity");
  }
  // bar[x] = the representative t with x in G t
  std::vector<int> bar(gamma.order(), -1);
  for (int x = 0; x < gamma.order(); ++x) {
    for (int t : reps) {
      if (G.count(gamma.mul(x, gamma.inv(t)))) {
        if (bar[x] >= 0) throw Error(ErrorCode::BadReps, "two representatives share a coset");
        bar[x] = t;
      }
    }
    if (bar[x] < 0) throw Error(ErrorCode::BadReps, "cosets not covered by the representatives");
  }
  FiniteCochain out;
  out.degree = phi.degree;
  out.eval = [phi, gamma, reps, bar](const std::vector<int>& g) {
    Fraction s(0);
    for (int t : reps) {
      std::vector<int> h(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        const int tg = gamma.mul(t, g[i]);
        h[i] = gamma.mul(tg, gamma.inv(bar[tg]));
      }
      s += phi(h);
    }
    return s;
  };
  return out;
}

std::vector<std::vector<int>> all_tuples(int order, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(len, 0);
  while (true) {
    out.push_back(t);
    int k = len - 1;
    while (k >= 0 && ++t[k] == order) t[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace cocycle
