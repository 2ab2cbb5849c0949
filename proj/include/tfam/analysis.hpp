#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tfam/element_set.hpp"
#include "tfam/families.hpp"
#include "tfam/set_family.hpp"

namespace tfam {

bool is_t_intersecting(const SetFamily& family);

/// Lexicographically least t-subset of the common intersection, if that
/// intersection has at least t elements. Throws EmptyFamily.
std::optional<ElementSet> trivial_kernel(const SetFamily& family);

struct Cover {
  int size = 0;
  ElementSet witness;
};

/// Smallest T with |T∩F| >= t for every member, plus a witness.
Cover t_covering_number(const SetFamily& family);

/// Same search over raw masks in [n]; members may have any size >= t.
Cover t_cover(int n, int t, std::span<const std::uint64_t> members);

enum class TSetShape {
  /// Every T contains a common t-set X and lies in M: {T ∈ C(M,t+1) : X ⊆ T}.
  Star,
  /// All (t+1)-subsets of a (t+2)-set Z.
  Complete,
};

/// The (t+1)-sets that t-cover a maximal family with covering number t+1.
struct TSet {
  std::vector<ElementSet> members;
  int tau_of_T = 0;
  TSetShape shape = TSetShape::Star;
  /// X for Star (|X| = t); unused (empty) for Complete.
  ElementSet core;
  /// M = ∪T for Star, Z for Complete.
  ElementSet span;
};

/// Requires 1 <= t <= k-2, 2k <= n, F maximal with τ_t(F) = t+1
/// (PreconditionFailed otherwise). Throws DichotomyViolated if the set of
/// (t+1)-covers has neither admissible shape.
TSet compute_T_set(const SetFamily& family);

struct MaximalityReport {
  bool maximal = false;
  std::vector<ElementSet> addable;
};

/// Throws NotIntersecting unless the family is t-intersecting.
MaximalityReport is_maximal(const SetFamily& family);

/// Greedy single-pass closure. An empty `order` means increasing bitmask
/// order over C(n,k); otherwise it must be a permutation of C(n,k).
SetFamily maximalize(const SetFamily& family, std::span<const ElementSet> order = {});

enum class ClassificationTag { Trivial, FamilyI, FamilyII, Other };

std::string_view to_string(ClassificationTag tag);

struct ClassificationDiagnostics {
  std::optional<int> tau;
  std::optional<int> t_set_size;
  std::optional<int> tau_of_T;
  std::optional<int> span_size;
  std::optional<int> c;
  std::string branch;
  std::string note;
};

struct Classification {
  ClassificationTag tag = ClassificationTag::Other;
  std::optional<ElementSet> kernel;
  std::optional<FamilyIParams> family_I;
  std::optional<FamilyIIParams> family_II;
  ClassificationDiagnostics diagnostics;
};

/// Decides Trivial / Family I / Family II / Other for a maximal
/// t-intersecting family. FamilyI and FamilyII are only returned after the
/// rebuilt family matches the input exactly.
Classification classify(const SetFamily& family);

}  // namespace tfam
