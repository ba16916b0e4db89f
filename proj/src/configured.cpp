#include "cocycle/configured.hpp"

#include "cocycle/error.hpp"
#include "cocycle/simplex.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace cocycle {

// ---------------------------------------------------------------- integer matrices

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not match");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

namespace {

struct SnfWork {
  IntMatrix D, P, Q;
  bool track;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
    if (track)
      for (std::size_t j = 0; j < P.cols(); ++j) std::swap(P(a, j), P(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    if (track)
      for (std::size_t i = 0; i < Q.rows(); ++i) std::swap(Q(i, a), Q(i, b));
  }
  // row_dst -= k * row_src
  void row_axpy(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (D(src, j) != 0) D(dst, j) -= k * D(src, j);
    if (track)
      for (std::size_t j = 0; j < P.cols(); ++j)
        if (P(src, j) != 0) P(dst, j) -= k * P(src, j);
  }
  void col_axpy(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < D.rows(); ++i)
      if (D(i, src) != 0) D(i, dst) -= k * D(i, src);
    if (track)
      for (std::size_t i = 0; i < Q.rows(); ++i)
        if (Q(i, src) != 0) Q(i, dst) -= k * Q(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    if (track)
      for (std::size_t j = 0; j < P.cols(); ++j) P(r, j) = -P(r, j);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A, bool with_transforms) {
  SnfWork w{A, {}, {}, with_transforms};
  if (with_transforms) {
    w.P = IntMatrix::identity(A.rows());
    w.Q = IntMatrix::identity(A.cols());
  }
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        const Integer& x = w.D(i, j);
        if (x == 0) continue;
        const Integer ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.D(i, t) == 0) continue;
        const Integer k = w.D(i, t) / w.D(t, t);
        w.row_axpy(i, t, k);
        if (w.D(i, t) != 0) {
          w.swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.D(t, j) == 0) continue;
        const Integer k = w.D(t, j) / w.D(t, t);
        w.col_axpy(j, t, k);
        if (w.D(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // divisibility of the trailing block by the pivot
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i) {
        for (std::size_t j = t + 1; j < n && !fixed; ++j) {
          if (w.D(i, j) % w.D(t, t) != 0) {
            w.row_axpy(t, i, Integer(-1));
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (w.D(t, t) < 0) w.negate_row(t);
  }
  SmithResult out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(w.D(i, i));
  if (with_transforms) {
    out.P = std::move(w.P);
    out.Q = std::move(w.Q);
  }
  return out;
}

std::size_t rational_rank(const IntMatrix& A) {
  // fraction-free (Bareiss) elimination; every division below is exact
  IntMatrix M = A;
  const std::size_t rows = M.rows(), cols = M.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(M(piv, k), M(r, k));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) M(i, k) = (M(r, c) * M(i, k) - M(i, c) * M(r, k)) / prev;
      M(i, c) = 0;
    }
    prev = M(r, c);
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------- configured complexes

std::string to_string(Predicate p) {
  switch (p) {
    case Predicate::conf_distinct: return "conf-distinct";
    case Predicate::distinct_hopf: return "distinct-hopf";
    case Predicate::all_tuples: return "all-tuples";
  }
  return "unknown";
}

long ConfiguredComplex::encode(const Tuple& t) const {
  long code = 0;
  for (int a : t) code = code * group_.order() + a;
  return code;
}

long ConfiguredComplex::index_of(const Tuple& t) const {
  const int n = static_cast<int>(t.size()) - 1;
  if (n < 0 || n > q_) return -1;
  const auto& lk = lookup_[n];
  const long code = encode(t);
  return lk[code];
}

bool ConfiguredComplex::contains(const Tuple& t) const { return index_of(t) >= 0; }

namespace {

std::function<bool(const std::vector<int>&)> make_predicate(const FiniteGroupTable& G, Predicate p) {
  switch (p) {
    case Predicate::all_tuples: return [](const std::vector<int>&) { return true; };
    case Predicate::conf_distinct:
      return [](const std::vector<int>& t) {
        std::unordered_set<int> s(t.begin(), t.end());
        return s.size() == t.size();
      };
    case Predicate::distinct_hopf: {
      if (!G.quaternions()) {
        throw Error(ErrorCode::InvalidArgument, "distinct-hopf needs a group given by quaternions");
      }
      // classes of equal fiber g T, i.e. equal h(g^-1), compared within 1e-9
      std::vector<int> cls(G.order(), -1);
      std::vector<S2Point> reps;
      for (int a = 0; a < G.order(); ++a) {
        const S2Point h = hopf((*G.quaternions())[a].inverse());
        for (std::size_t k = 0; k < reps.size() && cls[a] < 0; ++k) {
          if ((reps[k] - h).norm() <= 1e-9) cls[a] = static_cast<int>(k);
        }
        if (cls[a] < 0) {
          cls[a] = static_cast<int>(reps.size());
          reps.push_back(h);
        }
      }
      return [cls](const std::vector<int>& t) {
        std::unordered_set<int> s;
        for (int a : t) s.insert(cls[a]);
        return s.size() == t.size();
      };
    }
  }
  return {};
}

}  // namespace

ConfiguredComplex build_configured(const FiniteGroupTable& G, Predicate predicate, int q) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "max degree must be at least 1");
  ConfiguredComplex C(G, predicate, q);
  const auto pred = make_predicate(G, predicate);
  const int N = G.order();
  for (int n = 0; n <= q; ++n) {
    long size = 1;
    for (int k = 0; k <= n; ++k) {
      size *= N;
      if (size > 50'000'000) throw Error(ErrorCode::InvalidArgument, "complex too large");
    }
    std::vector<ConfiguredComplex::Tuple> gens;
    std::vector<long> lk(size, -1);
    for (auto& t : all_tuples(N, n + 1)) {
      if (!pred(t)) continue;
      lk[C.encode(t)] = static_cast<long>(gens.size());
      gens.push_back(std::move(t));
    }
    C.gens_.push_back(std::move(gens));
    C.lookup_.push_back(std::move(lk));
  }
  C.bd_.emplace_back();
  for (int n = 1; n <= q; ++n) {
    const auto& src = C.gens_[n];
    IntMatrix d(C.gens_[n - 1].size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (int i = 0; i <= n; ++i) {
        const auto f = face(static_cast<std::size_t>(i), src[j]);
        const long row = C.index_of(f);
        if (row < 0) {
          throw Error(ErrorCode::PredicateNotFaceClosed,
                      "face " + std::to_string(i) + " of a degree-" + std::to_string(n) + " generator is excluded");
        }
        d(static_cast<std::size_t>(row), j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    C.bd_.push_back(std::move(d));
  }
  // diagonal action must permute each generator list
  for (int n = 0; n <= q; ++n) {
    for (const auto& t : C.gens_[n]) {
      for (int g = 0; g < N; ++g) {
        ConfiguredComplex::Tuple s(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) s[i] = G.mul(g, t[i]);
        if (!C.contains(s)) throw Error(ErrorCode::InvalidArgument, "predicate is not invariant under the diagonal action");
      }
    }
  }
  return C;
}

HomologySummary homology(const ConfiguredComplex& C, int n) {
  if (n < 0 || n > C.max_degree() - 1) throw Error(ErrorCode::IndexOut, "homology degree out of range");
  HomologySummary h;
  h.degree = n;
  const std::size_t dim = C.generators(n).size();
  const std::size_t rank_out = n == 0 ? 0 : smith_normal_form(C.boundary(n)).rank;
  const SmithResult in = smith_normal_form(C.boundary(n + 1));
  h.free_rank = dim - rank_out - in.rank;
  for (const auto& d : in.diagonal) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

std::vector<Integer> to_vector(const ConfiguredComplex& C, const HomogeneousChain& chain) {
  std::vector<Integer> v(C.generators(chain.degree).size());
  for (const auto& [t, coeff] : chain.terms) {
    const long i = C.index_of(t);
    if (i < 0) throw Error(ErrorCode::InvalidArgument, "chain has a tuple outside the complex");
    v[i] += coeff;
  }
  return v;
}

HomogeneousChain cone_fill(const ConfiguredComplex& C, const HomogeneousChain& cycle, int y) {
  HomogeneousChain tau;
  tau.degree = cycle.degree + 1;
  if (cycle.empty()) return tau;
  const long sign = (cycle.degree % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
  for (const auto& [t, coeff] : cycle.terms) {
    auto s = t;
    s.push_back(y);
    if (!C.contains(s)) throw Error(ErrorCode::NoCommonApex, "apex " + std::to_string(y) + " fails for a generator");
    tau.add(s, sign * coeff);
  }
  const HomogeneousChain check = boundary(tau);
  if (check.terms != cycle.terms) {
    throw Error(ErrorCode::InvalidArgument, "input is not a cycle (degree 0 needs augmentation 0)");
  }
  return tau;
}

// ---------------------------------------------------------------- retraction

namespace {

struct Solver {
  SmithResult snf;
  std::size_t rows = 0;

  // Integer c with A c = z.
  std::optional<std::vector<Integer>> solve(const std::vector<Integer>& z) const {
    const std::size_t m = snf.P.rows(), n = snf.Q.rows();
    std::vector<Integer> w(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        if (snf.P(i, k) != 0 && z[k] != 0) w[i] += snf.P(i, k) * z[k];
      }
    }
    std::vector<Integer> y(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (i < snf.rank) {
        if (w[i] % snf.diagonal[i] != 0) return std::nullopt;
        y[i] = w[i] / snf.diagonal[i];
      } else if (w[i] != 0) {
        return std::nullopt;
      }
    }
    std::vector<Integer> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < snf.rank; ++k) {
        if (snf.Q(i, k) != 0 && y[k] != 0) c[i] += snf.Q(i, k) * y[k];
      }
    }
    return c;
  }
};

}  // namespace

Retraction build_retraction(const ConfiguredComplex& C, int q) {
  if (q < 0 || q > C.max_degree()) throw Error(ErrorCode::IndexOut, "retraction degree out of range");
  const FiniteGroupTable& G = C.group();
  const int N = G.order();
  Retraction R{{}, build_configured(G, Predicate::all_tuples, std::max(1, C.max_degree()))};

  // r_0 = id requires S_0 = G
  if (C.generators(0).size() != static_cast<std::size_t>(N)) {
    throw Error(ErrorCode::NotWellConfigured, "S_0 must contain every group element");
  }
  R.r.push_back(IntMatrix::identity(N));

  for (int n = 1; n <= q; ++n) {
    const auto& full_gens = R.full.generators(n);
    IntMatrix rn(C.generators(n).size(), full_gens.size());
    const Solver solver{smith_normal_form(C.boundary(n), true), C.generators(n - 1).size()};
    const IntMatrix& prev = R.r[n - 1];
    const IntMatrix& dfull = R.full.boundary(n);

    // normalized tuples (e, g_1, ..., g_n), then translate
    for (std::size_t col = 0; col < full_gens.size(); ++col) {
      const auto& sigma = full_gens[col];
      if (sigma[0] != G.identity()) continue;
      std::vector<Integer> column(C.generators(n).size());
      const long self = C.index_of(sigma);
      if (self >= 0) {
        column[self] = 1;
      } else {
        // z = r_{n-1}(d sigma)
        std::vector<Integer> z(prev.rows());
        for (std::size_t k = 0; k < dfull.rows(); ++k) {
          if (dfull(k, col) == 0) continue;
          for (std::size_t i = 0; i < prev.rows(); ++i) {
            if (prev(i, k) != 0) z[i] += dfull(k, col) * prev(i, k);
          }
        }
        auto c = solver.solve(z);
        if (!c) {
          throw Error(ErrorCode::NotWellConfigured,
                      "no integer filling in degree " + std::to_string(n) + "; H_" + std::to_string(n - 1) +
                          " of the configured complex is not zero");
        }
        column = std::move(*c);
      }
      for (int g = 0; g < N; ++g) {
        std::vector<int> gs(sigma.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) gs[i] = G.mul(g, sigma[i]);
        const long dst = R.full.index_of(gs);
        for (std::size_t i = 0; i < column.size(); ++i) {
          if (column[i] == 0) continue;
          auto t = C.generators(n)[i];
          for (auto& a : t) a = G.mul(g, a);
          rn(static_cast<std::size_t>(C.index_of(t)), static_cast<std::size_t>(dst)) += column[i];
        }
      }
    }
    R.r.push_back(std::move(rn));
  }
  return R;
}

bool retraction_restricts_to_identity(const ConfiguredComplex& C, const Retraction& r) {
  for (std::size_t n = 0; n < r.r.size(); ++n) {
    const auto& gens = C.generators(static_cast<int>(n));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto col = static_cast<std::size_t>(r.full.index_of(gens[j]));
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (r.r[n](i, col) != (i == j ? 1 : 0)) return false;
      }
    }
  }
  return true;
}

bool retraction_is_chain_map(const ConfiguredComplex& C, const Retraction& r) {
  for (std::size_t n = 1; n < r.r.size(); ++n) {
    const int d = static_cast<int>(n);
    if (!(C.boundary(d) * r.r[n] == r.r[n - 1] * r.full.boundary(d))) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> kernel_basis(const ConfiguredComplex& C, int n) {
  const std::size_t dim = C.generators(n).size();
  std::vector<std::vector<Integer>> out;
  if (n == 0) {
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Integer> e(dim);
      e[i] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  const SmithResult s = smith_normal_form(C.boundary(n), true);
  for (std::size_t k = s.rank; k < dim; ++k) {
    std::vector<Integer> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = s.Q(i, k);
    out.push_back(std::move(v));
  }
  return out;
}

Integer ExtendedCochain::operator()(const std::vector<int>& t) const {
  long code = 0;
  for (int a : t) code = code * order + a;
  return values.at(static_cast<std::size_t>(code));
}

ExtendedCochain extend_cocycle(const ConfiguredComplex& C, const std::vector<Integer>& f, const Retraction& r) {
  const int q = static_cast<int>(r.r.size()) - 1;
  if (f.size() != C.generators(q).size()) throw Error(ErrorCode::InvalidArgument, "f has the wrong length");
  for (const auto& k : kernel_basis(C, q)) {
    Integer s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s += f[i] * k[i];
    if (s != 0) {
      std::string desc = "f pairs to " + s.str() + " with kernel vector [";
      for (std::size_t i = 0; i < k.size(); ++i) desc += (i ? "," : "") + k[i].str();
      throw Error(ErrorCode::KernelObstruction, desc + "]");
    }
  }
  ExtendedCochain ext;
  ext.degree = q;
  ext.order = C.group().order();
  const IntMatrix& rq = r.r[q];
  ext.values.assign(rq.cols(), 0);
  for (std::size_t j = 0; j < rq.cols(); ++j) {
    for (std::size_t i = 0; i < rq.rows(); ++i) {
      if (rq(i, j) != 0) ext.values[j] += f[i] * rq(i, j);
    }
  }
  return ext;
}

bool coboundary_vanishes(const ExtendedCochain& ext, long samples) {
  auto check = [&](const std::vector<int>& t) {
    Integer s = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Integer v = ext(face(i, t));
      s += (i % 2 == 0) ? v : Integer(-v);
    }
    return s == 0;
  };
  if (samples <= 0) {
    for (const auto& t : all_tuples(ext.order, ext.degree + 2)) {
      if (!check(t)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<int> pick(0, ext.order - 1);
  for (long k = 0; k < samples; ++k) {
    std::vector<int> t(ext.degree + 2);
    for (auto& a : t) a = pick(rng);
    if (!check(t)) return false;
  }
  return true;
}

std::string homology_report_json(const ConfiguredComplex& C) {
  nlohmann::ordered_json j;
  j["predicate"] = to_string(C.predicate());
  j["order"] = C.group().order();
  j["max_degree"] = C.max_degree();
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (int n = 0; n <= C.max_degree(); ++n) gens.push_back(C.generators(n).size());
  j["generators"] = gens;
  nlohmann::ordered_json deg = nlohmann::ordered_json::object();
  for (int n = 0; n < C.max_degree(); ++n) {
    const HomologySummary h = homology(C, n);
    nlohmann::ordered_json tors = nlohmann::ordered_json::array();
    for (const auto& t : h.torsion) tors.push_back(t.str());
    deg[std::to_string(n)] = {{"rank", h.free_rank}, {"torsion", tors}};
  }
  j["degrees"] = deg;
  return j.dump();
}

}  // namespace cocycle
