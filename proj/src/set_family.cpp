#include "tfam/set_family.hpp"

#include <algorithm>
#include <string>

#include "tfam/error.hpp"

namespace tfam {

SetFamily::SetFamily(int n, int k, int t, std::vector<ElementSet> members)
    : n_(n), k_(k), t_(t), members_(std::move(members)) {
  if (n < 0 || n > kMaxAmbient) {
    throw Error(n > kMaxAmbient ? ErrorKind::AmbientTooLarge : ErrorKind::InvalidParams,
                "family ambient size " + std::to_string(n));
  }
  if (k < 0 || k > n) throw Error(ErrorKind::InvalidK, "k = " + std::to_string(k));
  if (t < 1) throw Error(ErrorKind::InvalidParams, "t must be positive, got " + std::to_string(t));
  for (const auto& m : members_) {
    if (m.ambient() != n) throw Error(ErrorKind::AmbientMismatch, "member " + m.to_string());
    if (m.cardinality() != k) {
      throw Error(ErrorKind::InvalidParams,
                  "member " + m.to_string() + " does not have " + std::to_string(k) + " elements");
    }
  }
  std::sort(members_.begin(), members_.end());
  if (auto dup = std::adjacent_find(members_.begin(), members_.end()); dup != members_.end()) {
    throw Error(ErrorKind::InvalidParams, "duplicate member " + dup->to_string());
  }
}

bool SetFamily::contains(const ElementSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool SetFamily::contains_mask(std::uint64_t mask) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), mask,
                             [](const ElementSet& m, std::uint64_t v) { return m.bits() < v; });
  return it != members_.end() && it->bits() == mask;
}

std::vector<std::uint64_t> SetFamily::masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.bits());
  return out;
}

SetFamily SetFamily::without(const ElementSet& s) const {
  std::vector<ElementSet> rest;
  rest.reserve(members_.size());
  for (const auto& m : members_) {
    if (m != s) rest.push_back(m);
  }
  return SetFamily(n_, k_, t_, std::move(rest));
}

}  // namespace tfam
