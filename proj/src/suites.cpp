#include "cocycle/suites.hpp"

#include "cocycle/cochains.hpp"
#include "cocycle/configured.hpp"
#include "cocycle/error.hpp"
#include "cocycle/hamiltonian.hpp"
#include "cocycle/lie.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace cocycle {

namespace {

using std::numbers::pi;

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used, 0);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigParse, "key '" + key + "' expects an integer, got '" + v + "'");
  }
}

double parse_real(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigParse, "key '" + key + "' expects a number, got '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(ErrorCode::ConfigParse, "key '" + key + "' expects true or false, got '" + v + "'");
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

class Runner {
 public:
  explicit Runner(const SuiteConfig& cfg) : cfg_(cfg) {}

  // fn fills computed and pass
  void run(const std::string& id, CheckValue expected, double tol, const std::function<void(Check&)>& fn) {
    Check c;
    c.id = id;
    c.expected = std::move(expected);
    c.tol = tol;
    const auto t0 = std::chrono::steady_clock::now();
    fn(c);
    const auto t1 = std::chrono::steady_clock::now();
    c.ms = cfg_.timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
    checks_.push_back(std::move(c));
  }

  // numeric comparison |computed - expected| <= tol
  void near(const std::string& id, double expected, double tol, const std::function<double()>& fn) {
    run(id, expected, tol, [&](Check& c) {
      const double v = fn();
      c.computed = v;
      c.pass = std::abs(v - expected) <= tol;
    });
  }

  // exact comparison of strings
  void exact(const std::string& id, const std::string& expected, const std::function<std::string()>& fn) {
    run(id, expected, 0.0, [&](Check& c) {
      const std::string v = fn();
      c.computed = v;
      c.pass = v == expected;
    });
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  const SuiteConfig& cfg_;
  std::vector<Check> checks_;
};

Vec3 random_ball(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(u(rng), u(rng), u(rng));
  } while (v.squaredNorm() > 1.0);
  return v;
}

Vec4 random_s3(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec4 q(n(rng), n(rng), n(rng), n(rng));
  return q / q.norm();
}

Vec3 random_s2(std::mt19937_64& rng, double radius) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 p(n(rng), n(rng), n(rng));
  return radius * p / p.norm();
}

std::string describe(const HomologySummary& h) {
  std::string s;
  if (h.free_rank > 0) s = h.free_rank == 1 ? "Z" : "Z^" + std::to_string(h.free_rank);
  for (const auto& t : h.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- suites

void cs_pairing_suite(Runner& R, const SuiteConfig& cfg) {
  for (int m : cfg.cs_orders) {
    const double target = 4.0 / m;
    R.run("m=" + std::to_string(m), "+-" + fmt(reduce_mod(target, Lattice::integers())) + " mod 1", 2e-3,
          [&](Check& c) {
            const PairingResult p = cs_pairing(m, cfg.quad, cfg.seed);
            c.computed = p.value;
            const double d = std::min(circle_distance(p.value, target, Lattice::integers()),
                                      circle_distance(p.value, -target, Lattice::integers()));
            c.pass = d <= c.tol;
          });
  }
}

void lemma44_suite(Runner& R, const SuiteConfig& cfg) {
  R.near("degree c1", 0.0, 1e-2, [&] { return degree_of_map(c1_map(), cfg.quad).value; });
  R.near("degree c2", 2.0, 1e-2, [&] { return degree_of_map(c2_map(), cfg.quad).value; });
}

void cocycle_defect_suite(Runner& R, const SuiteConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  FillingOptions opts;
  opts.quad = cfg.quad;
  const auto F = F_sigma_spherical(vol_form(Ambient::S3, 1.0), Lattice::integers(), opts);
  const auto dF = coboundary(F);
  auto factor = [&] { return quat_exp(Vec3(cfg.defect_spread * random_ball(rng))); };
  for (int k = 0; k < cfg.defect_samples; ++k) {
    std::vector<Rotation> t;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      t.clear();
      for (int i = 0; i < 5; ++i) t.push_back(so4_of(factor(), factor()));
      if (dF.admissible(t)) break;
    }
    char id[32];
    std::snprintf(id, sizeof id, "sample-%03d", k);
    R.run(id, 0.0, 0.0, [&](Check& c) {
      const CochainValue v = cocycle_defect(F, t);
      c.computed = v.value;
      c.tol = std::max(5.0 * v.error, 1e-4);
      c.pass = std::abs(v.value) <= c.tol;
    });
  }
}

void gf_derivation_suite(Runner& R, const SuiteConfig& cfg) {
  R.near("degree 1 residual", 0.0, 1e-4,
         [&] { return check_hoshii(left_invariant_covector(0), 1, cfg.hoshii_step, cfg.quad).residual; });
  R.near("mc3 residual", 0.0, 5e-2, [&] { return check_hoshii(mc3_form(), 3, cfg.hoshii_step, cfg.quad).residual; });
}

void symplectic_suite(Runner& R, const SuiteConfig& cfg) {
  const auto x = SphereFunction::coordinate(0), y = SphereFunction::coordinate(1), z = SphereFunction::coordinate(2);
  R.near("beta(x,y,z)", 1.0 / (2.0 * pi * pi), 1e-8, [&] { return beta_symplectic(x, y, z, cfg.quad).value; });

  const SphereFunction* c[3] = {&x, &y, &z};
  const char* names[3] = {"{x,y}=z", "{y,z}=x", "{z,x}=y"};
  for (int a = 0; a < 3; ++a) {
    R.near(names[a], 0.0, 1e-9, [&] {
      std::mt19937_64 rng(cfg.seed + a);
      const auto br = poisson(*c[a], *c[(a + 1) % 3]);
      const auto& target = *c[(a + 2) % 3];
      double worst = 0.0;
      for (int k = 0; k < 100; ++k) {
        const Vec3 p = random_s2(rng, 0.5);
        worst = std::max(worst, std::abs(br(p) - target(p)));
      }
      return worst;
    });
  }

  R.near("ad-invariance", 0.0, 1e-7, [&] {
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int k = 0; k < cfg.adinv_samples; ++k) {
      const auto f = SphereFunction::random(rng, 2);
      const auto g = SphereFunction::random(rng, 2);
      const auto h = SphereFunction::random(rng, 2);
      const ScalarField3 gv = [g](const Vec3& p) { return g(p); };
      const ScalarField3 hv = [h](const Vec3& p) { return h(p); };
      const double s = sphere_pairing(poisson(f, g), hv, cfg.quad).value +
                       sphere_pairing(gv, poisson(f, h), cfg.quad).value;
      worst = std::max(worst, std::abs(s));
    }
    return worst;
  });
}

void contact_suite(Runner& R, const SuiteConfig& cfg) {
  R.near("fiber period", 2.0 * pi, 1e-9, [&] {
    std::mt19937_64 rng(cfg.seed);
    double worst = 2.0 * pi;
    for (int k = 0; k < 10; ++k) {
      const double v = fiber_period(random_s3(rng));
      if (std::abs(v - 2.0 * pi) > std::abs(worst - 2.0 * pi)) worst = v;
    }
    return worst;
  });

  R.near("d(alpha) = h*omega", 0.0, 1e-6, [&] {
    // d(alpha) by central differences of the ambient extension of alpha
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> n(0.0, 1.0);
    const DifferentialForm alpha = contact_form_alpha();
    const double eps = 1e-5;
    auto a = [&](const Vec4& p, const Vec4& v) {
      const std::array<Vec4, 1> arg{v};
      return alpha(p, arg);
    };
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Vec4 p = random_s3(rng);
      Vec4 u(n(rng), n(rng), n(rng), n(rng)), v(n(rng), n(rng), n(rng), n(rng));
      u -= u.dot(p) * p;
      v -= v.dot(p) * p;
      const double da = (a(p + eps * u, v) - a(p - eps * u, v)) / (2 * eps) -
                        (a(p + eps * v, u) - a(p - eps * v, u)) / (2 * eps);
      const double w = omega1(hopf(UnitQuaternion(p)), hopf_differential(p, u), hopf_differential(p, v));
      worst = std::max(worst, std::abs(da - w));
    }
    return worst;
  });

  R.run("beta_S3 = 2 pi beta_CP1", 2.0 * pi / (2.0 * pi * pi), 1e-4, [&](Check& c) {
    const auto x = SphereFunction::coordinate(0), y = SphereFunction::coordinate(1), z = SphereFunction::coordinate(2);
    const double base = beta_symplectic(x, y, z, cfg.quad).value;
    const double v = beta_contact(ContactFunction::pullback(x), ContactFunction::pullback(y),
                                  ContactFunction::pullback(z), cfg.quad)
                         .value;
    c.expected = 2.0 * pi * base;
    c.computed = v;
    c.pass = std::abs(v - 2.0 * pi * base) <= c.tol;
  });
}

void configured_suite(Runner& R, const SuiteConfig& cfg) {
  const auto C = build_configured(FiniteGroupTable::cyclic(5), Predicate::conf_distinct, 3);
  const char* expected[3] = {"Z", "0", "0"};
  for (int n = 0; n < 3; ++n) {
    R.exact("Conf(Z/5) H" + std::to_string(n), expected[n], [&] { return describe(homology(C, n)); });
  }
  for (int n = 1; n <= 3; ++n) {
    R.run("Conf(Z/5) rank d" + std::to_string(n) + " over Q", 0.0, 0.0, [&](Check& c) {
      const auto q = static_cast<double>(rational_rank(C.boundary(n)));
      const auto z = static_cast<double>(smith_normal_form(C.boundary(n)).rank);
      c.expected = q;
      c.computed = z;
      c.pass = q == z;
    });
  }
  for (int order : {2, 3}) {
    const int q = 4;
    const auto A = build_configured(FiniteGroupTable::cyclic(order), Predicate::all_tuples, q);
    R.exact("all-tuples Z/" + std::to_string(order) + " H0", "Z", [&] { return describe(homology(A, 0)); });
    for (int n = 1; n < q; ++n) {
      R.exact("all-tuples Z/" + std::to_string(order) + " H" + std::to_string(n), "0",
              [&] { return describe(homology(A, n)); });
    }
  }

  const Retraction r = build_retraction(C, 3);
  R.exact("retraction is identity on C", "true",
          [&] { return retraction_restricts_to_identity(C, r) ? "true" : "false"; });
  R.exact("retraction is a chain map", "true", [&] { return retraction_is_chain_map(C, r) ? "true" : "false"; });
  R.exact("extension is a cocycle", "true", [&] {
    // f = g o d_3 vanishes on Ker d_3
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const IntMatrix& d = C.boundary(3);
    std::vector<Integer> g(d.rows()), f(d.cols(), 0);
    for (auto& v : g) v = coeff(rng);
    for (std::size_t j = 0; j < d.cols(); ++j)
      for (std::size_t i = 0; i < d.rows(); ++i) f[j] += g[i] * d(i, j);
    return coboundary_vanishes(extend_cocycle(C, f, r)) ? "true" : "false";
  });
}

// number of tuples on which two finite cochains differ
long mismatches(const FiniteCochain& a, const FiniteCochain& b, const std::vector<std::vector<int>>& tuples) {
  long bad = 0;
  for (const auto& t : tuples)
    if (a(t) != b(t)) ++bad;
  return bad;
}

std::vector<std::vector<int>> tuples_in(const std::vector<int>& elems, int len) {
  std::vector<std::vector<int>> out;
  for (const auto& t : all_tuples(static_cast<int>(elems.size()), len)) {
    std::vector<int> u;
    for (int a : t) u.push_back(elems[a]);
    out.push_back(u);
  }
  return out;
}

FiniteCochain random_cochain(const FiniteGroupTable& gamma, int degree, int denominator, std::uint64_t seed) {
  std::vector<long long> table(static_cast<std::size_t>(std::pow(gamma.order(), degree + 1)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> pick(0, denominator - 1);
  for (auto& v : table) v = pick(rng);
  const int order = gamma.order();
  return {degree, [table, order, denominator](const std::vector<int>& t) {
            long code = 0;
            for (int a : t) code = code * order + a;
            return Fraction(table[static_cast<std::size_t>(code)], denominator);
          }};
}

void transfer_case(Runner& R, const std::string& name, int big, int index, const FiniteCochain& phi,
                   std::uint64_t seed) {
  const auto gamma = FiniteGroupTable::cyclic(big);
  std::vector<int> sub, reps;
  for (int a = 0; a < big; a += index) sub.push_back(a);
  for (int a = 0; a < index; ++a) reps.push_back(a);
  const auto tr = transfer(phi, gamma, sub, reps);
  const int len = phi.degree + 1;

  FiniteCochain scaled{phi.degree, [phi, index](const std::vector<int>& t) { return Fraction(index) * phi(t); }};
  R.near(name + " restriction = index * phi", 0.0, 0.0,
         [&] { return static_cast<double>(mismatches(tr, scaled, tuples_in(sub, len))); });
  R.near(name + " transfer is a cocycle", 0.0, 0.0, [&] {
    const FiniteCochain zero{phi.degree + 1, [](const std::vector<int>&) { return Fraction(0); }};
    return static_cast<double>(mismatches(finite_coboundary(tr), zero, all_tuples(big, len + 1)));
  });
  R.near(name + " Tr d = d Tr", 0.0, 0.0, [&] {
    // arbitrary (non-cocycle) cochains of the degree below
    const auto psi = random_cochain(gamma, phi.degree - 1, 12, seed);
    const auto lhs = transfer(finite_coboundary(psi), gamma, sub, reps);
    const auto rhs = finite_coboundary(transfer(psi, gamma, sub, reps));
    return static_cast<double>(mismatches(lhs, rhs, all_tuples(big, len)));
  });
}

void transfer_suite(Runner& R, const SuiteConfig& cfg) {
  // Z/3 = {0,2,4} in Z/6, phi(a, b) = (b - a)/3 in the Z/3 coordinate a/2
  const FiniteCochain phi{1, [](const std::vector<int>& t) { return Fraction(t[1] / 2 - t[0] / 2, 3); }};
  transfer_case(R, "Z/3 in Z/6", 6, 2, phi, cfg.seed);

  // Z/2 = {0,2} in Z/4, omega(a, b, c) = abc/2 made homogeneous through successive differences
  const FiniteCochain omega{3, [](const std::vector<int>& t) {
                              auto d = [&](int i) { return ((t[i + 1] - t[i]) / 2 % 2 + 2) % 2; };
                              return Fraction(d(0) * d(1) * d(2), 2);
                            }};
  transfer_case(R, "Z/2 in Z/4", 4, 2, omega, cfg.seed + 1);
}

void prism_suite(Runner& R, const SuiteConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const DifferentialForm v = vol_form(Ambient::SU2, 1.0);
  for (int k = 0; k < cfg.prism_samples; ++k) {
    std::vector<Vec4> verts;
    for (int i = 0; i < 4; ++i) verts.push_back(quat_exp(Vec3(0.12 * random_ball(rng))).vec());
    std::array<Vec3, 6> bump;
    for (auto& b : bump) b = 0.3 * random_ball(rng);
    const GeodesicSimplex straight = build_simplex(verts, JoinKind::chart_affine);
    // vanishes at the vertices, not along the edges
    ParametrizedSimplex f{3, [straight, bump](std::span<const double> b) {
                            Vec3 w = Vec3::Zero();
                            int e = 0;
                            for (int i = 0; i < 4; ++i)
                              for (int j = i + 1; j < 4; ++j) w += b[i] * b[j] * bump[e++];
                            return quat_mul(straight(b), quat_exp(w).vec());
                          },
                          {}};
    char id[32];
    std::snprintf(id, sizeof id, "sample-%02d", k);
    R.run(id, 0.0, 0.0, [&](Check& c) {
      const IntegralResult s = pullback_integral(v, straighten(f), cfg.quad);
      const IntegralResult g = pullback_integral(v, f, cfg.quad);
      IntegralResult h;
      for (int i = 0; i < 4; ++i) {
        for (const auto& term : prism_chain(f.face(i)).terms) {
          const IntegralResult r = pullback_integral(v, term.map, cfg.quad);
          h.value += ((i % 2 == 0) ? 1 : -1) * term.sign * r.value;
          h.error_estimate += r.error_estimate;
        }
      }
      c.computed = (s.value - g.value) - h.value;
      c.tol = 2.0 * (s.error_estimate + g.error_estimate + h.error_estimate);
      c.pass = std::abs(s.value - g.value - h.value) <= c.tol;
    });
  }
}

struct SuiteEntry {
  std::string name;
  std::string description;
  void (*fn)(Runner&, const SuiteConfig&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r{
      {"cs-pairing", "Chern-Simons torsion pairing of the cyclic cycles, expected +-4/m mod 1", cs_pairing_suite},
      {"lemma44", "degrees of the conjugation map c1 and the map c2: x -> q x q", lemma44_suite},
      {"cocycle-defect", "coboundary of the volume cochain on random hemispherical 5-tuples", cocycle_defect_suite},
      {"gf-derivation", "derivation map D recovers a form from its integrated cochain", gf_derivation_suite},
      {"symplectic", "Poisson relations, the value 1/(2 pi^2) and ad-invariance on the 2-sphere",
       symplectic_suite},
      {"contact", "fiber period, d(alpha) = h*omega and the Hopf relation for the contact cocycle", contact_suite},
      {"configured-homology", "Smith-form homology, retraction and cocycle extension for finite groups",
       configured_suite},
      {"transfer", "transfer of cyclic cocycles to a finite-index overgroup", transfer_suite},
      {"prism", "Stokes check of the prism homotopy between a simplex and its straightening", prism_suite},
  };
  return r;
}

}  // namespace

// ---------------------------------------------------------------- config

void SuiteConfig::set(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "quad.order") {
    quad.order = static_cast<int>(parse_int(key, v));
  } else if (key == "quad.depth") {
    quad.depth = static_cast<int>(parse_int(key, v));
  } else if (key == "quad.max_depth") {
    quad.max_depth = static_cast<int>(parse_int(key, v));
  } else if (key == "quad.tolerance") {
    quad.tolerance = parse_real(key, v);
  } else if (key == "quad.step") {
    quad.step = parse_real(key, v);
  } else if (key == "seed") {
    seed = static_cast<std::uint64_t>(parse_int(key, v));
  } else if (key == "cs.orders") {
    cs_orders.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const long long m = parse_int(key, trim(item));
      if (m < 2) throw Error(ErrorCode::ConfigParse, "cs.orders entries must be at least 2");
      cs_orders.push_back(static_cast<int>(m));
    }
  } else if (key == "defect.samples") {
    defect_samples = static_cast<int>(parse_int(key, v));
  } else if (key == "defect.spread") {
    defect_spread = parse_real(key, v);
  } else if (key == "hoshii.step") {
    hoshii_step = parse_real(key, v);
  } else if (key == "adinv.samples") {
    adinv_samples = static_cast<int>(parse_int(key, v));
  } else if (key == "prism.samples") {
    prism_samples = static_cast<int>(parse_int(key, v));
  } else if (key == "timing") {
    timing = parse_bool(key, v);
  } else {
    throw Error(ErrorCode::ConfigParse, "unknown key '" + key + "'");
  }
}

SuiteConfig SuiteConfig::parse(std::string_view text) {
  SuiteConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ConfigParse, "line " + std::to_string(lineno) + ": expected key = value");
    }
    cfg.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

SuiteConfig SuiteConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ConfigParse, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

// ---------------------------------------------------------------- running and reporting

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& e : registry()) {
    if (e.name != name) continue;
    Runner R(config);
    e.fn(R, config);
    SuiteReport rep;
    rep.suite = name;
    rep.checks = R.take();
    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
  }
  throw Error(ErrorCode::UnknownSuite, "no suite named '" + name + "'");
}

const std::vector<std::pair<std::string, std::string>>& list_suites() {
  static const std::vector<std::pair<std::string, std::string>> out = [] {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& e : registry()) v.emplace_back(e.name, e.description);
    return v;
  }();
  return out;
}

std::string to_json(const SuiteReport& report, int indent) {
  auto value = [](const CheckValue& v) {
    return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
  };
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["expected"] = value(c.expected);
    e["computed"] = value(c.computed);
    e["tol"] = c.tol;
    e["pass"] = c.pass;
    e["ms"] = c.ms;
    j["checks"].push_back(std::move(e));
  }
  j["pass"] = report.pass;
  return j.dump(indent);
}

std::string to_text(const SuiteReport& report) {
  auto show = [](const CheckValue& v) {
    return std::holds_alternative<double>(v) ? fmt(std::get<double>(v)) : std::get<std::string>(v);
  };
  std::string out;
  for (const auto& c : report.checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.0f ms", c.ms);
    out += std::string(c.pass ? "PASS " : "FAIL ") + report.suite + " / " + c.id + ": computed " + show(c.computed) +
           ", expected " + show(c.expected) + ", tol " + fmt(c.tol) + " (" + ms + ")\n";
  }
  out += std::string(report.pass ? "PASS " : "FAIL ") + report.suite + "\n";
  return out;
}

}  // namespace cocycle
