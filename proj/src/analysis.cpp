#include "tfam/analysis.hpp"

#include <algorithm>
#include <bit>

#include "tfam/combinatorics.hpp"
#include "tfam/error.hpp"

namespace tfam {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

bool compatible(std::uint64_t candidate, std::span<const std::uint64_t> members, int t) {
  for (std::uint64_t f : members) {
    if (popcount(candidate & f) < t) return false;
  }
  return true;
}

bool masks_t_intersecting(std::span<const std::uint64_t> members, int t) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (popcount(members[i] & members[j]) < t) return false;
    }
  }
  return true;
}

void require_nonempty(const SetFamily& family) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "family has no members");
}

// Depth-first search for a t-cover inside `allowed` using at most `budget`
// more elements. Branches on the member with the largest deficit; after an
// element has been explored it is excluded from sibling branches.
class CoverSearch {
 public:
  CoverSearch(int t, std::span<const std::uint64_t> members) : t_(t), members_(members) {}

  bool run(std::uint64_t chosen, int budget, std::uint64_t allowed) {
    std::uint64_t branch_on = 0;
    int worst_deficit = 0;
    int worst_options = 65;
    for (std::uint64_t f : members_) {
      const int deficit = t_ - popcount(f & chosen);
      if (deficit <= 0) continue;
      if (deficit > budget) return false;
      const int options = popcount(f & allowed & ~chosen);
      if (options < deficit) return false;
      if (deficit > worst_deficit || (deficit == worst_deficit && options < worst_options)) {
        worst_deficit = deficit;
        worst_options = options;
        branch_on = f;
      }
    }
    if (worst_deficit == 0) {
      witness_ = chosen;
      return true;
    }
    std::uint64_t candidates = branch_on & allowed & ~chosen;
    while (candidates != 0) {
      const std::uint64_t e = candidates & (~candidates + 1);
      candidates &= candidates - 1;
      if (run(chosen | e, budget - 1, allowed)) return true;
      allowed &= ~e;
    }
    return false;
  }

  std::uint64_t witness() const { return witness_; }

 private:
  int t_;
  std::span<const std::uint64_t> members_;
  std::uint64_t witness_ = 0;
};

std::vector<std::uint64_t> covering_t_plus_1_sets(const SetFamily& family) {
  const auto masks = family.masks();
  const int t = family.t();
  std::vector<std::uint64_t> out;
  for_each_k_mask(family.n(), t + 1, [&](std::uint64_t s) {
    if (compatible(s, masks, t)) out.push_back(s);
  });
  return out;
}

// Shape of the covering (t+1)-sets; nullopt when neither admissible shape applies.
std::optional<TSet> match_shape(int n, int k, int t, const std::vector<std::uint64_t>& covers,
                                int tau_of_T, std::string& why) {
  TSet out;
  out.tau_of_T = tau_of_T;
  for (std::uint64_t s : covers) out.members.emplace_back(n, s);

  std::uint64_t all_and = ~std::uint64_t{0};
  std::uint64_t all_or = 0;
  for (std::uint64_t s : covers) {
    all_and &= s;
    all_or |= s;
  }

  if (tau_of_T == t) {
    if (popcount(all_and) < t) {
      why = "covering sets have no common t-subset despite tau = t";
      return std::nullopt;
    }
    out.shape = TSetShape::Star;
    out.core = ElementSet(n, all_and).smallest(t);
    out.span = ElementSet(n, all_or);
    const int l = popcount(all_or);
    if (l < t + 1 || l > k + 1) {
      why = "|M| = " + std::to_string(l) + " outside [t+1, k+1]";
      return std::nullopt;
    }
    // {T ∈ C(M,t+1) : X ⊆ T} has exactly l - t members.
    if (static_cast<int>(covers.size()) != l - t) {
      why = "covering sets are a proper part of {T in C(M,t+1) : X in T}";
      return std::nullopt;
    }
    return out;
  }

  if (tau_of_T == t + 1) {
    if (covers.size() < 2) {
      why = "tau = t+1 with fewer than two covering sets";
      return std::nullopt;
    }
    const std::uint64_t z = covers[0] | covers[1];
    if (popcount(z) != t + 2 || all_or != z || static_cast<int>(covers.size()) != t + 2) {
      why = "covering sets are not all (t+1)-subsets of a (t+2)-set";
      return std::nullopt;
    }
    out.shape = TSetShape::Complete;
    out.core = ElementSet(n);
    out.span = ElementSet(n, z);
    return out;
  }

  why = "tau of covering sets is " + std::to_string(tau_of_T) + ", outside {t, t+1}";
  return std::nullopt;
}

}  // namespace

bool is_t_intersecting(const SetFamily& family) {
  const auto masks = family.masks();
  return masks_t_intersecting(masks, family.t());
}

std::optional<ElementSet> trivial_kernel(const SetFamily& family) {
  require_nonempty(family);
  std::uint64_t common = ambient_mask(family.n());
  for (const auto& m : family.members()) common &= m.bits();
  if (popcount(common) < family.t()) return std::nullopt;
  return ElementSet(family.n(), common).smallest(family.t());
}

Cover t_cover(int n, int t, std::span<const std::uint64_t> members) {
  if (members.empty()) throw Error(ErrorKind::EmptyFamily, "family has no members");
  std::uint64_t all = 0;
  for (std::uint64_t f : members) {
    if (popcount(f) < t) {
      throw Error(ErrorKind::InvalidParams, "member with fewer than t elements has no t-cover");
    }
    all |= f;
  }
  CoverSearch search(t, members);
  for (int m = t; m <= popcount(all); ++m) {
    if (search.run(0, m, all)) return Cover{m, ElementSet(n, search.witness())};
  }
  // The union itself always covers, so the loop returns before here.
  return Cover{popcount(all), ElementSet(n, all)};
}

Cover t_covering_number(const SetFamily& family) {
  require_nonempty(family);
  const auto masks = family.masks();
  return t_cover(family.n(), family.t(), masks);
}

MaximalityReport is_maximal(const SetFamily& family) {
  const auto masks = family.masks();
  const int t = family.t();
  if (!masks_t_intersecting(masks, t)) {
    throw Error(ErrorKind::NotIntersecting, "family is not " + std::to_string(t) + "-intersecting");
  }
  MaximalityReport report;
  std::size_t next_member = 0;
  // Enumeration and members share increasing bitmask order.
  for_each_k_mask(family.n(), family.k(), [&](std::uint64_t g) {
    if (next_member < masks.size() && masks[next_member] == g) {
      ++next_member;
      return;
    }
    if (compatible(g, masks, t)) report.addable.emplace_back(family.n(), g);
  });
  report.maximal = report.addable.empty();
  return report;
}

SetFamily maximalize(const SetFamily& family, std::span<const ElementSet> order) {
  const int n = family.n();
  const int k = family.k();
  const int t = family.t();
  std::vector<std::uint64_t> current = family.masks();
  if (!masks_t_intersecting(current, t)) {
    throw Error(ErrorKind::NotIntersecting, "seed family is not " + std::to_string(t) + "-intersecting");
  }

  auto visit = [&](std::uint64_t g) {
    if (family.contains_mask(g)) return;
    if (compatible(g, current, t)) current.push_back(g);
  };

  if (order.empty()) {
    for_each_k_mask(n, k, visit);
  } else {
    if (BigCount(order.size()) != binomial(n, k)) {
      throw Error(ErrorKind::InvalidParams, "candidate order is not a permutation of C(n,k)");
    }
    std::vector<std::uint64_t> seen;
    seen.reserve(order.size());
    for (const auto& s : order) {
      if (s.ambient() != n || s.cardinality() != k) {
        throw Error(ErrorKind::InvalidParams, "candidate " + s.to_string() + " is not a k-subset of [n]");
      }
      seen.push_back(s.bits());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw Error(ErrorKind::InvalidParams, "candidate order repeats a set");
    }
    for (const auto& s : order) visit(s.bits());
  }

  std::vector<ElementSet> members;
  members.reserve(current.size());
  for (std::uint64_t m : current) members.emplace_back(n, m);
  return SetFamily(n, k, t, std::move(members));
}

TSet compute_T_set(const SetFamily& family) {
  const int n = family.n();
  const int k = family.k();
  const int t = family.t();
  auto fail = [](const std::string& why) { return Error(ErrorKind::PreconditionFailed, why); };
  if (t < 1 || t > k - 2) throw fail("need 1 <= t <= k-2");
  if (2 * k > n) throw fail("need 2k <= n");
  if (family.empty()) throw fail("family is empty");
  if (!is_t_intersecting(family)) throw fail("family is not t-intersecting");
  if (!is_maximal(family).maximal) throw fail("family is not maximal");
  const Cover cover = t_covering_number(family);
  if (cover.size != t + 1) {
    throw fail("tau_t = " + std::to_string(cover.size) + ", expected t+1 = " + std::to_string(t + 1));
  }

  const auto covers = covering_t_plus_1_sets(family);
  const int tau_of_T = t_cover(n, t, covers).size;
  std::string why;
  auto shape = match_shape(n, k, t, covers, tau_of_T, why);
  if (!shape) throw Error(ErrorKind::DichotomyViolated, why);
  return *shape;
}

std::string_view to_string(ClassificationTag tag) {
  switch (tag) {
    case ClassificationTag::Trivial: return "Trivial";
    case ClassificationTag::FamilyI: return "FamilyI";
    case ClassificationTag::FamilyII: return "FamilyII";
    case ClassificationTag::Other: return "Other";
  }
  return "Unknown";
}

Classification classify(const SetFamily& family) {
  require_nonempty(family);
  if (!is_t_intersecting(family)) {
    throw Error(ErrorKind::NotIntersecting, "family is not " + std::to_string(family.t()) + "-intersecting");
  }
  if (!is_maximal(family).maximal) throw Error(ErrorKind::NotMaximal, "family admits further members");

  const int n = family.n();
  const int k = family.k();
  const int t = family.t();
  Classification out;
  auto& diag = out.diagnostics;

  if (auto kernel = trivial_kernel(family)) {
    out.tag = ClassificationTag::Trivial;
    out.kernel = *kernel;
    diag.tau = t;
    diag.branch = "trivial";
    return out;
  }

  const Cover cover = t_covering_number(family);
  diag.tau = cover.size;
  if (t < 1 || t > k - 2) {
    diag.branch = "t_out_of_range";
    diag.note = "classification covers 1 <= t <= k-2 only";
    return out;
  }
  if (cover.size != t + 1) {
    diag.branch = "tau_at_least_t_plus_2";
    return out;
  }

  const auto covers = covering_t_plus_1_sets(family);
  const int tau_of_T = t_cover(n, t, covers).size;
  diag.t_set_size = static_cast<int>(covers.size());
  diag.tau_of_T = tau_of_T;

  std::string why;
  auto shape = match_shape(n, k, t, covers, tau_of_T, why);
  if (!shape) {
    if (2 * k <= n) throw Error(ErrorKind::DichotomyViolated, why);
    diag.branch = "t_set_shape";
    diag.note = why + " (n < 2k)";
    return out;
  }
  diag.span_size = shape->span.cardinality();

  auto accept_II = [&](const ElementSet& z, const std::string& branch) {
    FamilyIIParams p{z, n, k, t};
    diag.branch = branch;
    if (build_family_II(p) == family) {
      out.tag = ClassificationTag::FamilyII;
      out.family_II = p;
    } else {
      diag.note = "rebuilt H2(Z) differs from the input";
    }
  };
  auto accept_I = [&](const FamilyIParams& p, const std::string& branch) {
    diag.branch = branch;
    diag.c = p.c_size();
    if (build_family_I(p) == family) {
      out.tag = ClassificationTag::FamilyI;
      out.family_I = p;
    } else {
      diag.note = "rebuilt H1(X,M,C) differs from the input";
    }
  };

  if (shape->shape == TSetShape::Complete) {
    accept_II(shape->span, "complete_t_set");
    return out;
  }

  const ElementSet& x = shape->core;
  const ElementSet& m = shape->span;
  const int l = m.cardinality();

  if (l == k + 1) {
    // Any k-subset of M containing X gives the same family; take the least.
    const ElementSet y = x | (m - x).smallest(k - t);
    accept_I({x, y, m, n, k, t}, "span_k_plus_1");
    return out;
  }

  if (l == k) {
    ElementSet c = m;
    for (const auto& f : family.members()) {
      if (!x.is_subset_of(f)) c = c | f;
    }
    const int c_size = c.cardinality();
    diag.c = c_size;
    if (t == k - 2 && c_size == n) {
      accept_II(m, "span_k_full_c_as_H2");
      return out;
    }
    if ((c_size >= k + 2 && c_size <= 2 * k - t) || c_size == n) {
      accept_I({x, m, c, n, k, t}, "span_k");
    } else {
      diag.branch = "span_k";
      diag.note = "|C| = " + std::to_string(c_size) + " outside {k+2,...,2k-t} or n";
    }
    return out;
  }

  diag.branch = "span_size";
  diag.note = "|M| = " + std::to_string(l) + " is neither k nor k+1";
  return out;
}

}  // namespace tfam
