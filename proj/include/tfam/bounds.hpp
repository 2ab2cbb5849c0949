#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tfam/combinatorics.hpp"

namespace tfam {

enum class ClaimStatus {
  Holds,
  Fails,
  /// The lemma's hypothesis is unmet at these parameters; evaluated but not asserted.
  Informational,
  /// Evaluated and reported; the case is handled by classification rather than by this bound.
  Flagged,
};

std::string_view to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string relation;
  bool relation_holds = false;
  ClaimStatus status = ClaimStatus::Informational;
  std::string note;
};

struct OrderingReport {
  long long n = 0;
  int k = 0;
  int t = 0;
  std::vector<std::pair<std::string, BigCount>> entries;
  std::vector<Claim> claims;

  bool all_asserted_hold() const;
};

/// Evaluates every h1/h2/f ordering claim. Each claim is asserted only when
/// its own hypothesis holds at (n, k, t); otherwise it is Informational.
OrderingReport verify_orderings(long long n, int k, int t);

/// C(t+2,2)(k-t+1)^2 + t <= n, the hypothesis shared by several size lemmas.
bool lemma_hypothesis(long long n, int k, int t);
/// Smallest n satisfying lemma_hypothesis.
long long lemma_threshold(int k, int t);

/// max{C(t+2,2), (k-t+2)/2} (k-t+1)^2 + t <= n, compared over the integers.
bool theorem_hypothesis(long long n, int k, int t);
/// Smallest n satisfying theorem_hypothesis.
long long theorem_threshold(int k, int t);

struct BoundInputs {
  long long n = 0;
  int k = 0;
  int t = 0;
  /// Covering number for the τ_t >= t+2 bounds, t+2 <= m <= k.
  int m = 0;
  /// |M| for the general τ_t = t+1 bound, t+1 <= l <= k+1.
  int l = 0;
};

enum class CoverBoundCase {
  /// Exactly one (t+1)-set covers the family.
  SingletonT,
  /// Covering sets form a star inside an l-set M.
  GeneralL,
  /// Refinement of GeneralL for l = t+2.
  LEqualsTPlus2,
};

/// Upper bound on |F| for a maximal family with τ_t(F) = t+1.
BigCount lemma33_bound(const BoundInputs& in, CoverBoundCase which);

struct CoverNumberBounds {
  BigCount per_m;
  BigCount uniform;
};

/// Upper bounds on |F| for τ_t(F) = m >= t+2. Throws HypothesisUnmet
/// unless lemma_hypothesis holds.
CoverNumberBounds lemma34_bound(const BoundInputs& in);

struct GapClaim {
  std::string id;
  std::string bound_name;
  BigCount bound;
  int l = 0;  // only for the per-l claim
  bool below_f = false;
  ClaimStatus status = ClaimStatus::Holds;
  std::string note;
};

struct GapReport {
  long long n = 0;
  int k = 0;
  int t = 0;
  BigCount f;
  BigCount denominator;  // C(n-t-2, k-t-2) > 0
  std::vector<GapClaim> claims;

  bool all_asserted_hold() const;
};

/// Checks that each non-classified branch's size bound falls strictly below
/// f(n,k,t). Throws HypothesisUnmet unless theorem_hypothesis holds.
GapReport verify_gap_f3(long long n, int k, int t);

struct GridSpec {
  int t_max = 4;
  /// Largest k - t examined.
  int k_span = 7;
  /// Absolute k cap; 0 means no cap beyond k_span.
  int k_max = 0;
  /// Include threshold+1 and 2*threshold in addition to the thresholds.
  bool extended = true;
};

struct GridPoint {
  long long n;
  int k;
  int t;
};

/// Sweep points: for each t <= t_max and t+2 <= k <= t+k_span, n ranges over
/// 2k+1, the lemma threshold, the theorem threshold and (extended) +1 and 2x.
std::vector<GridPoint> sweep_grid(const GridSpec& spec);

}  // namespace tfam
