#include "cocycle/finite_group.hpp"

#include "cocycle/error.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

namespace cocycle {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> mult, std::vector<std::string> labels)
    : mult_(std::move(mult)), labels_(std::move(labels)) {
  const int n = order();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty group table");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::InvalidArgument, "table is not square");
    std::vector<bool> seen(n, false);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw Error(ErrorCode::InvalidArgument, "row is not a permutation");
      seen[v] = true;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mult_[e][a] == a && mult_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(ErrorCode::InvalidArgument, "table has no identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mult_[a][b] == identity_ && mult_[b][a] == identity_) inv_[a] = b;
    }
    if (inv_[a] < 0) throw Error(ErrorCode::InvalidArgument, "element without two-sided inverse");
  }
  auto assoc = [&](int a, int b, int c) { return mult_[mult_[a][b]][c] == mult_[a][mult_[b][c]]; };
  if (n <= 24) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw Error(ErrorCode::InvalidArgument, "table is not associative");
  } else {
    std::mt19937_64 rng(0x5EED);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 20000; ++k) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw Error(ErrorCode::InvalidArgument, "table is not associative");
    }
  }
  if (labels_.empty()) {
    for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels_.size()) != n) throw Error(ErrorCode::InvalidArgument, "label count mismatch");
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::BadOrder, "cyclic order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::from_quaternions(const std::vector<UnitQuaternion>& generators, double tol) {
  std::vector<UnitQuaternion> elems{UnitQuaternion::identity()};
  auto find = [&](const UnitQuaternion& q) -> int {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (distance(elems[i], q) < tol) return static_cast<int>(i);
    }
    return -1;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      const UnitQuaternion p = elems[i] * g;
      if (find(p) < 0) elems.push_back(p);
      if (elems.size() > 10000) throw Error(ErrorCode::InvalidArgument, "generated group is not finite");
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[a][b] = find(elems[a] * elems[b]);
      if (t[a][b] < 0) throw Error(ErrorCode::InvalidArgument, "quaternion set not closed");
    }
    const auto& q = elems[a];
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.4g,%.4g,%.4g,%.4g)", q.w(), q.x(), q.y(), q.z());
    labels.emplace_back(buf);
  }
  FiniteGroupTable g(std::move(t), std::move(labels));
  g.quats_ = std::move(elems);
  return g;
}

FiniteGroupTable FiniteGroupTable::quaternion8() {
  return from_quaternions({UnitQuaternion::i(), UnitQuaternion::j()});
}

FiniteGroupTable FiniteGroupTable::binary_tetrahedral() {
  return from_quaternions({UnitQuaternion::i(), UnitQuaternion::j(), UnitQuaternion(0.5, 0.5, 0.5, 0.5)});
}

bool FiniteGroupTable::is_subgroup(const std::vector<int>& h) const {
  std::set<int> s(h.begin(), h.end());
  if (!s.count(identity_)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(mul(a, inv(b)))) return false;
  return true;
}

bool FiniteGroupTable::is_normal(const std::vector<int>& h) const {
  if (!is_subgroup(h)) return false;
  std::set<int> s(h.begin(), h.end());
  for (int g = 0; g < order(); ++g)
    for (int a : s)
      if (!s.count(mul(mul(g, a), inv(g)))) return false;
  return true;
}

}  // namespace cocycle
