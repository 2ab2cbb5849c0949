#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tfam/analysis.hpp"
#include "tfam/error.hpp"
#include "tfam/families.hpp"

using namespace tfam;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected tfam::Error");
  return ErrorKind::ParseError;
}

SetFamily family_of(int n, int k, int t, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<ElementSet> members;
  for (auto s : sets) members.push_back(ElementSet::of(n, s));
  return SetFamily(n, k, t, members);
}

SetFamily star(int n, int k, int t, const ElementSet& x) {
  std::vector<ElementSet> members;
  for (const auto& f : k_subsets(n, k)) {
    if (x.is_subset_of(f)) members.push_back(f);
  }
  return SetFamily(n, k, t, members);
}

SetFamily h1(int n, int k, int t, int c) {
  const ElementSet cset = c == n ? ElementSet::full(n) : ElementSet::range(n, 1, c);
  return build_family_I({ElementSet::range(n, 1, t), ElementSet::range(n, 1, k), cset, n, k, t});
}

SetFamily h2(int n, int k, int t) { return build_family_II({ElementSet::range(n, 1, t + 2), n, k, t}); }

bool covers(const ElementSet& w, const SetFamily& f) {
  return std::all_of(f.members().begin(), f.members().end(),
                     [&](const ElementSet& m) { return intersection_size(w, m) >= f.t(); });
}

// Exhaustive minimum over every subset of [n].
int brute_force_cover(const SetFamily& f) {
  int best = f.n() + 1;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << f.n()); ++w) {
    const int size = std::popcount(w);
    if (size < best && covers(ElementSet(f.n(), w), f)) best = size;
  }
  return best;
}

SetFamily random_maximal(std::mt19937_64& rng, int n, int k, int t) {
  auto order = k_subsets(n, k);
  std::shuffle(order.begin(), order.end(), rng);
  return maximalize(SetFamily(n, k, t, {order.front()}), order);
}

}  // namespace

TEST_CASE("is_t_intersecting") {
  CHECK(is_t_intersecting(h2(10, 3, 1)));
  CHECK_FALSE(is_t_intersecting(family_of(10, 3, 1, {{1, 2, 3}, {4, 5, 6}})));
  CHECK(is_t_intersecting(family_of(10, 3, 2, {{1, 2, 3}})));
  CHECK(is_t_intersecting(SetFamily(10, 3, 1, {})));
}

TEST_CASE("trivial_kernel") {
  const SetFamily s = family_of(8, 3, 1, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
  REQUIRE(trivial_kernel(s).has_value());
  CHECK(*trivial_kernel(s) == ElementSet::of(8, {1}));

  const SetFamily z = h2(10, 3, 1);
  std::uint64_t common = ambient_mask(10);
  for (const auto& m : z.members()) common &= m.bits();
  CHECK(common == 0);
  CHECK_FALSE(trivial_kernel(z).has_value());

  CHECK(*trivial_kernel(family_of(5, 3, 2, {{1, 2, 3}})) == ElementSet::of(5, {1, 2}));
  CHECK(kind_of([] { trivial_kernel(SetFamily(5, 3, 1, {})); }) == ErrorKind::EmptyFamily);
}

TEST_CASE("t_covering_number on the named examples") {
  const ElementSet x = ElementSet::of(9, {2, 5});
  const Cover c_star = t_covering_number(star(9, 4, 2, x));
  CHECK(c_star.size == 2);
  CHECK(c_star.witness == x);

  const SetFamily z = h2(10, 3, 1);
  const Cover c_z = t_covering_number(z);
  CHECK(c_z.size == 2);
  CHECK(c_z.witness.is_subset_of(ElementSet::of(10, {1, 2, 3})));
  CHECK(covers(c_z.witness, z));

  const SetFamily one = h1(10, 3, 1, 4);
  const Cover c_one = t_covering_number(one);
  CHECK(c_one.size == 2);
  CHECK(covers(c_one.witness, one));

  CHECK(kind_of([] { t_covering_number(SetFamily(5, 3, 1, {})); }) == ErrorKind::EmptyFamily);
}

TEST_CASE("property: t_covering_number matches exhaustive search") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
    auto all = k_subsets(n, k);
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t size = 1 + rng() % 12;
    all.resize(std::min(size, all.size()));
    const SetFamily f(n, k, t, all);
    const Cover c = t_covering_number(f);
    REQUIRE(c.size == brute_force_cover(f));
    REQUIRE(c.witness.cardinality() == c.size);
    REQUIRE(covers(c.witness, f));
    if (is_t_intersecting(f)) REQUIRE((c.size >= t && c.size <= k));
  }
}

TEST_CASE("compute_T_set for Family II is all (t+1)-subsets of Z") {
  const TSet ts = compute_T_set(h2(10, 3, 1));
  CHECK(ts.tau_of_T == 2);
  CHECK(ts.shape == TSetShape::Complete);
  CHECK(ts.span == ElementSet::of(10, {1, 2, 3}));
  std::vector<ElementSet> pairs;
  for (const auto& s : k_subsets(10, 2)) {
    if (s.is_subset_of(ElementSet::of(10, {1, 2, 3}))) pairs.push_back(s);
  }
  CHECK(ts.members == pairs);
}

TEST_CASE("compute_T_set for Family I at |C| = 4 is a star around X = {1}") {
  const SetFamily f = h1(10, 3, 1, 4);
  // Oracle: every 2-subset of [10] against every member.
  std::vector<ElementSet> expected;
  for (const auto& s : k_subsets(10, 2)) {
    if (covers(s, f)) expected.push_back(s);
  }
  const TSet ts = compute_T_set(f);
  CHECK(ts.members == expected);
  CHECK(ts.tau_of_T == 1);
  CHECK(ts.shape == TSetShape::Star);
  CHECK(ts.core == ElementSet::of(10, {1}));
  CHECK(ts.span == ElementSet::range(10, 1, 4));
}

TEST_CASE("compute_T_set preconditions") {
  CHECK(kind_of([] { compute_T_set(star(10, 3, 1, ElementSet::of(10, {1}))); }) ==
        ErrorKind::PreconditionFailed);
  CHECK(kind_of([] { compute_T_set(h2(10, 3, 1).without(ElementSet::of(10, {1, 2, 3}))); }) ==
        ErrorKind::PreconditionFailed);
  CHECK(kind_of([] { compute_T_set(family_of(10, 3, 1, {{1, 2, 3}, {4, 5, 6}})); }) ==
        ErrorKind::PreconditionFailed);
}

TEST_CASE("is_maximal") {
  const SetFamily one = h1(10, 3, 1, 4);
  CHECK(one.size() == 22);
  const auto r1 = is_maximal(one);
  CHECK(r1.maximal);
  CHECK(r1.addable.empty());

  const SetFamily two = h2(10, 3, 1);
  CHECK(is_maximal(two).maximal);

  const ElementSet removed = two.members()[5];
  const auto r3 = is_maximal(two.without(removed));
  CHECK_FALSE(r3.maximal);
  CHECK(std::find(r3.addable.begin(), r3.addable.end(), removed) != r3.addable.end());

  CHECK(kind_of([] { is_maximal(family_of(10, 3, 1, {{1, 2, 3}, {4, 5, 6}})); }) == ErrorKind::NotIntersecting);
}

TEST_CASE("maximalize") {
  const SetFamily two = h2(10, 3, 1);
  CHECK(maximalize(two) == two);

  const SetFamily seed = family_of(10, 3, 1, {{1, 2, 3}, {1, 2, 4}});
  const SetFamily grown = maximalize(seed);
  CHECK(is_maximal(grown).maximal);
  for (const auto& s : seed.members()) CHECK(grown.contains(s));
  CHECK(maximalize(grown) == grown);

  auto reversed = k_subsets(10, 3);
  std::reverse(reversed.begin(), reversed.end());
  const SetFamily other = maximalize(seed, reversed);
  CHECK(is_maximal(other).maximal);
  for (const auto& s : seed.members()) CHECK(other.contains(s));

  auto partial = k_subsets(10, 3);
  partial.pop_back();
  CHECK(kind_of([&] { maximalize(seed, partial); }) == ErrorKind::InvalidParams);
  auto repeated = k_subsets(10, 3);
  repeated.back() = repeated.front();
  CHECK(kind_of([&] { maximalize(seed, repeated); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { maximalize(family_of(10, 3, 1, {{1, 2, 3}, {4, 5, 6}})); }) == ErrorKind::NotIntersecting);
}

TEST_CASE("property: maximalize output is maximal, contains the seed, and is idempotent") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 4);
    const int k = 3 + static_cast<int>(rng() % 2);
    const int t = 1 + static_cast<int>(rng() % 2);
    auto order = k_subsets(n, k);
    std::shuffle(order.begin(), order.end(), rng);
    const SetFamily seed(n, k, t, {order[0]});
    const SetFamily m = maximalize(seed, order);
    REQUIRE(is_maximal(m).maximal);
    REQUIRE(m.contains(order[0]));
    REQUIRE(maximalize(m, order) == m);
    REQUIRE(maximalize(m) == m);
  }
}

TEST_CASE("classify examples") {
  const Classification c2 = classify(h2(10, 3, 1));
  CHECK(c2.tag == ClassificationTag::FamilyII);
  REQUIRE(c2.family_II);
  CHECK(c2.family_II->z == ElementSet::of(10, {1, 2, 3}));

  const FamilyIParams p{ElementSet::of(10, {1}), ElementSet::of(10, {1, 2, 3}), ElementSet::range(10, 1, 5), 10, 3, 1};
  const Classification c1 = classify(build_family_I(p));
  CHECK(c1.tag == ClassificationTag::FamilyI);
  REQUIRE(c1.family_I);
  CHECK(*c1.family_I == p);
  CHECK(c1.diagnostics.c == 5);

  const Classification ct = classify(maximalize(star(10, 3, 1, ElementSet::of(10, {1}))));
  CHECK(ct.tag == ClassificationTag::Trivial);
  CHECK(*ct.kernel == ElementSet::of(10, {1}));
}

TEST_CASE("classify canonicalizes |C| = k+1 and t = k-2 with C = [n]") {
  // X = {1}, M = {1,3,4}, C = {1,2,3,4}: canonical M-parameter is {1,2,3}.
  const FamilyIParams p{ElementSet::of(10, {1}), ElementSet::of(10, {1, 3, 4}), ElementSet::range(10, 1, 4), 10, 3, 1};
  const SetFamily f = build_family_I(p);
  const Classification c = classify(f);
  REQUIRE(c.tag == ClassificationTag::FamilyI);
  CHECK(c.family_I->m == ElementSet::of(10, {1, 2, 3}));
  CHECK(c.family_I->c == p.c);
  CHECK(build_family_I(*c.family_I) == f);

  const FamilyIParams q{ElementSet::of(12, {1, 2}), ElementSet::range(12, 1, 4), ElementSet::full(12), 12, 4, 2};
  const Classification d = classify(build_family_I(q));
  REQUIRE(d.tag == ClassificationTag::FamilyII);
  CHECK(d.family_II->z == q.m);
}

TEST_CASE("classify errors") {
  CHECK(kind_of([] { classify(SetFamily(10, 3, 1, {})); }) == ErrorKind::EmptyFamily);
  CHECK(kind_of([] { classify(family_of(10, 3, 1, {{1, 2, 3}, {4, 5, 6}})); }) == ErrorKind::NotIntersecting);
  CHECK(kind_of([] { classify(family_of(10, 3, 1, {{1, 2, 3}, {1, 4, 5}})); }) == ErrorKind::NotMaximal);
}

TEST_CASE("property: classification roundtrip and covering number t+1 up to n = 14") {
  std::mt19937_64 rng(2026);
  for (int k = 3; k <= 5; ++k) {
    for (int t = 1; t <= k - 2; ++t) {
      for (int n = 2 * k + 1; n <= 14; ++n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto prefix = [&](int len) { return ElementSet::from_elements(n, std::span<const int>(perm.data(), len)); };
        for (int c : family_I_c_values(n, k, t)) {
          const FamilyIParams p{prefix(t), prefix(k), prefix(c), n, k, t};
          const SetFamily f = build_family_I(p);
          REQUIRE(t_covering_number(f).size == t + 1);
          const Classification cls = classify(f);
          if (t == k - 2 && c == n) {
            REQUIRE(cls.tag == ClassificationTag::FamilyII);
            REQUIRE(build_family_II(*cls.family_II) == f);
          } else {
            REQUIRE(cls.tag == ClassificationTag::FamilyI);
            REQUIRE(build_family_I(*cls.family_I) == f);
            if (c != k + 1) REQUIRE(*cls.family_I == p);
          }
        }
        const FamilyIIParams q{prefix(t + 2), n, k, t};
        const SetFamily g = build_family_II(q);
        REQUIRE(t_covering_number(g).size == t + 1);
        const Classification cls = classify(g);
        REQUIRE(cls.tag == ClassificationTag::FamilyII);
        REQUIRE(*cls.family_II == q);
      }
    }
  }
}

TEST_CASE("property: T-set dichotomy on random maximal families") {
  std::mt19937_64 rng(11);
  int analysed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 2);
    const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(k - 2));
    const int n = 2 * k + static_cast<int>(rng() % 3);
    const SetFamily f = random_maximal(rng, n, k, t);
    if (trivial_kernel(f) || t_covering_number(f).size != t + 1) continue;
    const TSet ts = compute_T_set(f);
    ++analysed;
    const auto covering = ts.members;
    REQUIRE(is_t_intersecting(SetFamily(n, t + 1, t, covering)));
    REQUIRE((ts.tau_of_T == t || ts.tau_of_T == t + 1));
    if (ts.shape == TSetShape::Star) {
      const int l = ts.span.cardinality();
      REQUIRE((l >= t + 1 && l <= k + 1));
      for (const auto& s : covering) REQUIRE(ts.core.is_subset_of(s));
      REQUIRE(static_cast<int>(covering.size()) == l - t);
    } else {
      REQUIRE(ts.span.cardinality() == t + 2);
      REQUIRE(static_cast<int>(covering.size()) == t + 2);
    }
  }
  CHECK(analysed > 0);
}
