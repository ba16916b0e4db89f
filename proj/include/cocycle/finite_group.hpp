#pragma once

#include "cocycle/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cocycle {

// Finite group by multiplication table; elements are 0..order-1.
class FiniteGroupTable {
 public:
  /// Validates the group axioms (associativity exhaustively up to order 24, sampled above).
  explicit FiniteGroupTable(std::vector<std::vector<int>> mult, std::vector<std::string> labels = {});

  static FiniteGroupTable cyclic(int n);
  /// Closure of the generators under quaternion multiplication.
  static FiniteGroupTable from_quaternions(const std::vector<UnitQuaternion>& generators, double tol = 1e-9);
  static FiniteGroupTable quaternion8();
  static FiniteGroupTable binary_tetrahedral();

  int order() const { return static_cast<int>(mult_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mult_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  /// Present when the group was built from quaternions.
  const std::optional<std::vector<UnitQuaternion>>& quaternions() const { return quats_; }

  bool is_subgroup(const std::vector<int>& h) const;
  bool is_normal(const std::vector<int>& h) const;

 private:
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::optional<std::vector<UnitQuaternion>> quats_;
  int identity_ = 0;
};

}  // namespace cocycle
