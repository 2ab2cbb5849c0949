#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tfam {

inline constexpr int kMaxAmbient = 64;

/// A subset of the ground set [n] = {1, ..., n}, stored as a single word.
/// Element i lives at bit position i-1; bits at or above n are always clear.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n);
  ElementSet(int n, std::uint64_t bits);

  static ElementSet of(int n, std::initializer_list<int> elements);
  static ElementSet from_elements(int n, std::span<const int> elements);
  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static ElementSet range(int n, int lo, int hi);
  static ElementSet full(int n) { return range(n, 1, n); }

  int ambient() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int cardinality() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int element) const noexcept;

  /// Ascending 1-based element list.
  std::vector<int> elements() const;
  /// The `count` smallest elements; requires count <= cardinality().
  ElementSet smallest(int count) const;

  bool is_subset_of(const ElementSet& other) const;

  ElementSet with(int element) const;
  ElementSet without(int element) const;

  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  /// Set difference.
  ElementSet operator-(const ElementSet& other) const;

  /// "{1,2,3}"
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

/// |a ∩ b|. Throws AmbientMismatch when the ground sets differ.
int intersection_size(const ElementSet& a, const ElementSet& b);

/// Mask with the low n bits set.
constexpr std::uint64_t ambient_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace tfam
