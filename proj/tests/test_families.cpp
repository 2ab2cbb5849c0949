#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tfam/error.hpp"
#include "tfam/families.hpp"
#include "tfam/oracle.hpp"

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

FamilyIParams canonical_I(int n, int k, int t, int c) {
  const ElementSet cset = c == n ? ElementSet::full(n) : ElementSet::range(n, 1, c);
  return {ElementSet::range(n, 1, t), ElementSet::range(n, 1, k), cset, n, k, t};
}

// Random nested X ⊆ M ⊆ C of the requested sizes.
FamilyIParams random_I(std::mt19937_64& rng, int n, int k, int t, int c) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto prefix = [&](int len) { return ElementSet::from_elements(n, std::span<const int>(perm.data(), len)); };
  return {prefix(t), prefix(k), prefix(c), n, k, t};
}

}  // namespace

TEST_CASE("Family I example at (10,3,1) with |C| = 4") {
  const auto p = canonical_I(10, 3, 1, 4);
  const SetFamily h1 = build_family_I(p);
  CHECK(h1.size() == 22);
  const auto preds = oracle::family_I_predicates(p.x, p.m, p.c, 3, 1);
  CHECK(oracle::count_disjoint_union(10, 3, preds) == 22);
}

TEST_CASE("Family I with C = [n] has an empty B class") {
  const auto p = canonical_I(10, 3, 1, 10);
  const SetFamily h1 = build_family_I(p);
  for (const auto& f : h1.members()) CHECK(family_I_class(p, f.bits()) != FamilyIClass::B);
  CHECK(h1.size() == 22);
}

TEST_CASE("Family I parameter validation") {
  auto p = canonical_I(10, 3, 1, 4);
  p.c = p.m;  // c = k
  CHECK(kind_of([&] { build_family_I(p); }) == ErrorKind::InvalidParams);

  p = canonical_I(10, 3, 1, 4);
  p.c = ElementSet::range(10, 1, 6);  // 2k - t + 1 = 6 < n
  CHECK(kind_of([&] { build_family_I(p); }) == ErrorKind::InvalidParams);

  p = canonical_I(10, 3, 1, 4);
  p.x = ElementSet::of(10, {9});
  CHECK(kind_of([&] { build_family_I(p); }) == ErrorKind::InvalidParams);

  p = canonical_I(10, 4, 3, 5);  // t = k-1
  CHECK(kind_of([&] { build_family_I(p); }) == ErrorKind::InvalidParams);
}

TEST_CASE("Family II examples") {
  const FamilyIIParams p{ElementSet::of(10, {1, 2, 3}), 10, 3, 1};
  const SetFamily h2 = build_family_II(p);
  CHECK(h2.size() == 22);
  CHECK(oracle::count_by_predicate(10, 3, oracle::family_II_predicate(p.z, 1)) == 22);
  CHECK(h2.contains(ElementSet::of(10, {1, 2, 5})));
  CHECK_FALSE(h2.contains(ElementSet::of(10, {1, 5, 6})));

  // Z = [n] with n = t+2 (which forces k = n): every k-subset meets Z in k >= t+1 elements.
  const SetFamily all = build_family_II({ElementSet::full(4), 4, 4, 2});
  CHECK(BigCount(all.size()) == binomial(4, 4));

  CHECK(kind_of([] { build_family_II({ElementSet::of(10, {1, 2}), 10, 3, 1}); }) == ErrorKind::InvalidParams);
}

TEST_CASE("closed-form sizes at (10,3,1) and (28,3,1)") {
  CHECK(h1_size(10, 3, 1, 4) == 22);
  CHECK(h1_size(10, 3, 1, 5) == 18);
  CHECK(h1_size(10, 3, 1, 10) == 22);
  CHECK(h2_size(10, 3, 1) == 22);
  CHECK(h2_size(28, 3, 1) == 76);
  CHECK(f_threshold(10, 3, 1) == 15);
  CHECK(f_threshold(28, 3, 1) == 51);

  CHECK(kind_of([] { h1_size(6, 3, 1, 4); }) == ErrorKind::InvalidParams);   // n <= 2k
  CHECK(kind_of([] { h1_size(10, 3, 1, 3); }) == ErrorKind::InvalidParams);  // c = k
  CHECK(kind_of([] { h1_size(10, 3, 1, 6); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { h2_size(10, 3, 2); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { f_threshold(10, 2, 1); }) == ErrorKind::InvalidParams);
}

TEST_CASE("two algebraic forms of h2 agree") {
  for (int t = 1; t <= 8; ++t) {
    for (int k = t + 2; k <= t + 10 && k - 2 <= 8; ++k) {
      for (int n = 0; n <= 100; ++n) REQUIRE(h2_size(n, k, t) == h2_size_alt(n, k, t));
    }
  }
}

TEST_CASE("f is below h1 at c = 2k-t and c = n on sampled parameters") {
  for (int t = 1; t <= 5; ++t) {
    for (int k = t + 2; k <= t + 6; ++k) {
      for (long long n : {2LL * k + 1, 3LL * k, 10LL * k, 250LL}) {
        if (n <= 2 * k) continue;
        const BigCount f = f_threshold(n, k, t);
        REQUIRE(f <= h1_size(n, k, t, 2 * k - t));
        REQUIRE(f <= h1_size(n, k, t, n));
      }
    }
  }
}

TEST_CASE("property: constructions match the closed forms and the brute-force oracle") {
  // All valid (n,k,t,c) with n <= 18, k <= 6.
  int checked = 0;
  for (int k = 3; k <= 6; ++k) {
    for (int t = 1; t <= k - 2; ++t) {
      for (int n = 2 * k + 1; n <= 18; ++n) {
        for (int c : family_I_c_values(n, k, t)) {
          const auto p = canonical_I(n, k, t, c);
          const BigCount built(build_family_I(p).size());
          REQUIRE(built == h1_size(n, k, t, c));
          const auto preds = oracle::family_I_predicates(p.x, p.m, p.c, k, t);
          REQUIRE(oracle::count_disjoint_union(n, k, preds) == built);
          ++checked;
        }
        const FamilyIIParams q{ElementSet::range(n, 1, t + 2), n, k, t};
        const BigCount built2(build_family_II(q).size());
        REQUIRE(built2 == h2_size(n, k, t));
        REQUIRE(oracle::count_by_predicate(n, k, oracle::family_II_predicate(q.z, t)) == built2);
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("property: family size depends only on |X|, |M|, |C|, |Z|") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(k - 2));
    const int n = 2 * k + 1 + static_cast<int>(rng() % 4);
    const auto cs = family_I_c_values(n, k, t);
    const int c = cs[rng() % cs.size()];
    const auto a = random_I(rng, n, k, t, c);
    const auto b = random_I(rng, n, k, t, c);
    REQUIRE(build_family_I(a).size() == build_family_I(b).size());

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const FamilyIIParams z{ElementSet::from_elements(n, std::span<const int>(perm.data(), t + 2)), n, k, t};
    REQUIRE(BigCount(build_family_II(z).size()) == h2_size(n, k, t));
  }
}

TEST_CASE("Family I classes are disjoint under the library's own membership test") {
  for (int k = 3; k <= 5; ++k) {
    for (int t = 1; t <= k - 2; ++t) {
      const int n = 2 * k + 2;
      for (int c : family_I_c_values(n, k, t)) {
        const auto p = canonical_I(n, k, t, c);
        std::size_t a = 0, b = 0, cc = 0;
        for_each_k_mask(n, k, [&](std::uint64_t f) {
          switch (family_I_class(p, f)) {
            case FamilyIClass::A: ++a; break;
            case FamilyIClass::B: ++b; break;
            case FamilyIClass::C: ++cc; break;
            case FamilyIClass::None: break;
          }
        });
        // Class sizes: C(n-t,k-t) - C(n-k,k-t), C(n-c,2k-c-t), t(c-k).
        REQUIRE(BigCount(a) == binomial(n - t, k - t) - binomial(n - k, k - t));
        REQUIRE(BigCount(b) == binomial(n - c, 2 * k - c - t));
        REQUIRE(BigCount(cc) == BigCount(t) * (c - k));
      }
    }
  }
}

TEST_CASE("degenerate Family I identities") {
  const auto a = remark_identities(10, 3, 1);
  REQUIRE(a.checks.size() == 3);
  CHECK(a.checks[0].status == CheckStatus::Pass);
  CHECK(a.checks[1].status == CheckStatus::Pass);  // t = k-2 at (10,3,1) as well
  CHECK(a.checks[2].status == CheckStatus::Pass);

  const auto b = remark_identities(12, 4, 2);
  CHECK(b.checks[0].status == CheckStatus::Pass);
  CHECK(b.checks[1].status == CheckStatus::Pass);
  CHECK(b.checks[2].status == CheckStatus::Pass);
  CHECK(b.all_pass_or_skipped());

  const auto c = remark_identities(12, 5, 2);
  CHECK(c.checks[0].status == CheckStatus::Pass);
  CHECK(c.checks[1].status == CheckStatus::Skipped);
  CHECK(c.checks[2].status == CheckStatus::Skipped);
  CHECK(c.checks[1].detail.find("not applicable") != std::string::npos);
}
