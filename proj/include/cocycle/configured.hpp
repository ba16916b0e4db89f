#pragma once

// Configured chain complexes Z<S_*> of a finite group, exact homology by Smith normal form,
// cone filling, and the retraction from the full bar complex.

#include "cocycle/cochains.hpp"
#include "cocycle/finite_group.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cocycle {

using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithResult {
  std::vector<Integer> diagonal;  // nonzero invariant factors d_1 | d_2 | ...
  std::size_t rank = 0;
  IntMatrix P, Q;                 // P A Q = D (only when transforms were requested)
};

SmithResult smith_normal_form(const IntMatrix& A, bool with_transforms = false);

/// Rank over Q by fraction-free elimination, independent of the Smith form.
std::size_t rational_rank(const IntMatrix& A);

enum class Predicate { conf_distinct, distinct_hopf, all_tuples };

std::string to_string(Predicate p);

struct HomologySummary {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each divides the next; entries > 1
};

class ConfiguredComplex {
 public:
  using Tuple = std::vector<int>;

  const FiniteGroupTable& group() const { return group_; }
  Predicate predicate() const { return predicate_; }
  int max_degree() const { return q_; }

  /// Generators of Z<S_n>, lexicographic.
  const std::vector<Tuple>& generators(int n) const { return gens_.at(n); }
  /// Position of t in generators(n), or -1.
  long index_of(const Tuple& t) const;
  /// d_n: Z<S_n> -> Z<S_{n-1}>, with signs (-1)^i; n = 1..q.
  const IntMatrix& boundary(int n) const { return bd_.at(n); }
  bool contains(const Tuple& t) const;

 private:
  friend ConfiguredComplex build_configured(const FiniteGroupTable&, Predicate, int);
  ConfiguredComplex(const FiniteGroupTable& g, Predicate p, int q) : group_(g), predicate_(p), q_(q) {}
  long encode(const Tuple& t) const;

  FiniteGroupTable group_;
  Predicate predicate_;
  int q_;
  std::vector<std::vector<Tuple>> gens_;
  std::vector<std::vector<long>> lookup_;  // per degree: code -> index or -1
  std::vector<IntMatrix> bd_;              // bd_[0] is empty
};

/// Throws PredicateNotFaceClosed when a face of a generator is excluded.
ConfiguredComplex build_configured(const FiniteGroupTable& G, Predicate predicate, int q);

/// Requires n <= q - 1 so that both adjacent boundaries exist.
HomologySummary homology(const ConfiguredComplex& C, int n);

/// Coefficient vector of a chain in the generator basis of degree chain.degree.
std::vector<Integer> to_vector(const ConfiguredComplex& C, const HomogeneousChain& chain);

/// tau = (-1)^{n+1} sum a_i (x_i, y). Throws NoCommonApex.
HomogeneousChain cone_fill(const ConfiguredComplex& C, const HomogeneousChain& cycle, int y);

struct Retraction {
  /// r[n] has rows indexed by generators(n) of C and columns by all (n+1)-tuples (lexicographic code).
  std::vector<IntMatrix> r;
  ConfiguredComplex full;  // all-tuples complex on the same group
};

/// Throws NotWellConfigured when a required integer solve fails.
Retraction build_retraction(const ConfiguredComplex& C, int q);

/// r_n restricted to C-generators is the identity, for every n.
bool retraction_restricts_to_identity(const ConfiguredComplex& C, const Retraction& r);
/// d_n^C r_n = r_{n-1} d_n^full, for n = 1..q.
bool retraction_is_chain_map(const ConfiguredComplex& C, const Retraction& r);

/// Integer vectors spanning Ker d_q (columns of the SNF transform).
std::vector<std::vector<Integer>> kernel_basis(const ConfiguredComplex& C, int n);

struct ExtendedCochain {
  int degree = 0;
  int order = 0;
  std::vector<Integer> values;  // indexed by the lexicographic code of (q+1)-tuples

  Integer operator()(const std::vector<int>& t) const;
};

/// f o r_q. Throws KernelObstruction when f does not vanish on Ker d_q.
ExtendedCochain extend_cocycle(const ConfiguredComplex& C, const std::vector<Integer>& f, const Retraction& r);

/// Checks d(ext) = 0 on every (q+2)-tuple (or on `samples` random ones when samples > 0).
bool coboundary_vanishes(const ExtendedCochain& ext, long samples = 0);

/// {"predicate":..., "order":..., "degrees":{"0":{"rank":..,"torsion":[..]}, ...}}
std::string homology_report_json(const ConfiguredComplex& C);

}  // namespace cocycle
