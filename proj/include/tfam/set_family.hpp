#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tfam/element_set.hpp"

namespace tfam {

/// A collection of distinct k-subsets of [n], analysed with respect to
/// intersection parameter t. Members are kept in increasing bitmask order.
class SetFamily {
 public:
  SetFamily(int n, int k, int t, std::vector<ElementSet> members);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int t() const noexcept { return t_; }

  std::span<const ElementSet> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(const ElementSet& s) const;
  bool contains_mask(std::uint64_t mask) const;

  /// Raw member masks, same order as members().
  std::vector<std::uint64_t> masks() const;

  /// Copy with one member removed (no-op when absent).
  SetFamily without(const ElementSet& s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  int k_;
  int t_;
  std::vector<ElementSet> members_;
};

}  // namespace tfam
