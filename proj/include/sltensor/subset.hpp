#pragma once

#include "sltensor/rational.hpp"

#include <string>
#include <vector>

namespace sltensor {

/// A subset S of {1..n}, stored as a bitmask over 0-based indices.
class Subset {
 public:
  Subset() = default;
  Subset(int n, unsigned mask) : n_(n), mask_(mask & ((1u << n) - 1)) {}

  static Subset none(int n) { return Subset(n, 0); }
  static Subset all(int n) { return Subset(n, (1u << n) - 1); }
  /// From 1-based members.
  static Subset of(int n, const std::vector<int>& members);
  /// "1,3" -> {1,3}; "all" -> {1..n}; "" -> empty.
  static Subset parse(const std::string& text, int n);

  int n() const { return n_; }
  unsigned mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }  // 0-based
  int size() const { return __builtin_popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool full() const { return mask_ == (1u << n_) - 1; }
  Subset complement() const { return Subset(n_, ~mask_); }
  /// 0-based members in increasing order.
  std::vector<int> members() const;

  /// "{}" or "{1,3}" (1-based).
  std::string str() const;

  friend bool operator==(const Subset& a, const Subset& b) { return a.n_ == b.n_ && a.mask_ == b.mask_; }

 private:
  int n_ = 0;
  unsigned mask_ = 0;
};

/// All 2^n subsets in mask order.
std::vector<Subset> all_subsets(int n);

}  // namespace sltensor
