#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tfam/element_set.hpp"

namespace tfam {

/// Exact non-negative integer used for every family size and bound.
using BigCount = boost::multiprecision::cpp_int;

/// C(n, k), exact. Zero whenever n < 0, k < 0 or k > n.
BigCount binomial(long long n, long long k);

/// All k-subsets of [n] in strictly increasing bitmask order.
std::vector<ElementSet> k_subsets(int n, int k);

/// Same order as k_subsets but without materializing; visits raw masks.
template <typename Visitor>
void for_each_k_mask(int n, int k, Visitor&& visit);

/// Next mask with the same popcount (Gosper). Caller checks for the last one.
constexpr std::uint64_t next_same_popcount(std::uint64_t x) noexcept {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

void check_enumerable(int n, int k);

template <typename Visitor>
void for_each_k_mask(int n, int k, Visitor&& visit) {
  check_enumerable(n, k);
  if (k == 0) {
    visit(std::uint64_t{0});
    return;
  }
  const std::uint64_t first = ambient_mask(k);
  const std::uint64_t last = first << (n - k);
  for (std::uint64_t x = first;; x = next_same_popcount(x)) {
    visit(x);
    if (x == last) break;
  }
}

}  // namespace tfam
