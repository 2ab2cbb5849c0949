#pragma once

#include <string>
#include <vector>

#include "tfam/combinatorics.hpp"
#include "tfam/element_set.hpp"
#include "tfam/set_family.hpp"

namespace tfam {

/// Nested sets X ⊆ M ⊆ C of sizes t, k, c defining H1(X, M, C).
struct FamilyIParams {
  ElementSet x;
  ElementSet m;
  ElementSet c;
  int n = 0;
  int k = 0;
  int t = 0;

  int c_size() const { return c.cardinality(); }
  /// Throws InvalidParams naming the first violated condition.
  void validate() const;

  friend bool operator==(const FamilyIParams&, const FamilyIParams&) = default;
};

/// A (t+2)-set Z defining H2(Z).
struct FamilyIIParams {
  ElementSet z;
  int n = 0;
  int k = 0;
  int t = 0;

  void validate() const;

  friend bool operator==(const FamilyIIParams&, const FamilyIIParams&) = default;
};

/// Which of the three Family I classes a k-set belongs to.
enum class FamilyIClass { None, A, B, C };

/// Membership of a single k-subset; the classes are disjoint so at most one applies.
FamilyIClass family_I_class(const FamilyIParams& p, std::uint64_t member);

SetFamily build_family_I(const FamilyIParams& p);
SetFamily build_family_II(const FamilyIIParams& p);

/// Admissible |C| values for Family I: k+1, ..., 2k-t, then n.
std::vector<int> family_I_c_values(int n, int k, int t);

/// Throws InvalidParams unless 1 <= t <= k-2.
void check_t_range(int k, int t);

/// |H1(X, M, C)| for |C| = c, any n > 2k.
BigCount h1_size(long long n, int k, int t, long long c);
/// |H2(Z)| for |Z| = t+2.
BigCount h2_size(long long n, int k, int t);
/// Same quantity written as (t+2)C(n-t-1,k-t-1) - (t+1)C(n-t-2,k-t-2).
BigCount h2_size_alt(long long n, int k, int t);
/// Size threshold f(n, k, t) above which maximal non-trivial families are classified.
BigCount f_threshold(long long n, int k, int t);

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct IdentityCheck {
  std::string id;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct RemarkReport {
  int n = 0;
  int k = 0;
  int t = 0;
  std::vector<IdentityCheck> checks;

  bool all_pass_or_skipped() const;
};

/// Set-level check of the two degenerate Family I identities:
/// (a) |C| = k+1 gives {F : X ⊆ F, |F∩C| >= t+1} ∪ C(C,k);
/// (b) t = k-2 gives H1(X, M, [n]) = H2(M) and h1(n) = h2.
RemarkReport remark_identities(int n, int k, int t);

}  // namespace tfam
