#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tfam/combinatorics.hpp"
#include "tfam/element_set.hpp"

namespace tfam::oracle {

inline constexpr int kMaxOracleAmbient = 22;

enum class Relation { Eq, Ge, Le };

/// |F ∩ set| ⋈ value
struct IntersectionAtom {
  ElementSet set;
  Relation relation = Relation::Ge;
  int value = 0;
};

/// set ⊆ F
struct ContainsAtom {
  ElementSet set;
};

/// F ⊆ set
struct WithinAtom {
  ElementSet set;
};

using Atom = std::variant<IntersectionAtom, ContainsAtom, WithinAtom>;

/// Conjunction of atoms over a k-subset F of [n]. No atoms means "true".
struct PredicateSpec {
  int n = 0;
  std::vector<Atom> atoms;

  bool matches(std::uint64_t member) const;

  /// Parses `|F&{1,2,3}|>=2 and |F&{4}|=0`; relations are =, >=, <=.
  /// The literal `true` is the empty conjunction. Throws ParseError.
  static PredicateSpec parse(int n, std::string_view text);
};

/// Number of k-subsets of [n] satisfying the predicate, by full scan of
/// every n-bit mask. n <= 22 (AmbientTooLarge otherwise).
BigCount count_by_predicate(int n, int k, const PredicateSpec& predicate);

/// Sum of counts over predicates required to be pairwise exclusive; throws
/// std::logic_error naming the first set matched by two predicates.
BigCount count_disjoint_union(int n, int k, std::span<const PredicateSpec> predicates);

/// Membership predicates of the A, B and C classes of H1(X, M, C).
std::vector<PredicateSpec> family_I_predicates(const ElementSet& x, const ElementSet& m, const ElementSet& c,
                                               int k, int t);
/// Membership predicate of H2(Z).
PredicateSpec family_II_predicate(const ElementSet& z, int t);

struct ExperimentOptions {
  long long n = 0;
  int k = 0;
  int t = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  /// Largest C(n,k) the harness will enumerate.
  long long max_candidates = 50000;
};

struct ExperimentViolation {
  int trial = 0;
  std::size_t family_size = 0;
  std::string tag;
  std::string reason;
};

struct ExperimentReport {
  ExperimentOptions options;
  BigCount f;
  int trivial_discarded = 0;
  int below_threshold = 0;
  std::map<std::string, int> below_threshold_tags;
  std::map<std::string, int> at_or_above_tags;
  std::size_t largest_family = 0;
  /// T-set analyses run on families with covering number t+1.
  int t_set_checks = 0;
  std::map<std::string, int> t_set_shapes;
  std::vector<ExperimentViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Random greedy maximal non-trivial families checked against the
/// classification: every one of size >= f(n,k,t) must be Family I or Family
/// II (the latter only when k <= 2t+2). Throws HypothesisUnmet when the theorem
/// hypothesis fails and AmbientTooLarge when C(n,k) exceeds the cap or n > 32.
ExperimentReport theorem_experiment(const ExperimentOptions& options);

}  // namespace tfam::oracle
