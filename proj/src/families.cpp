#include "tfam/families.hpp"

#include <bit>

#include "tfam/error.hpp"

namespace tfam {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, what);
}

bool c_admissible(int n, int k, int t, long long c) {
  return (c >= k + 1 && c <= 2LL * k - t) || c == n;
}

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

void check_t_range(int k, int t) {
  require(t >= 1 && t <= k - 2, "need 1 <= t <= k-2, got t=" + std::to_string(t) +
                                    " k=" + std::to_string(k));
}

void FamilyIParams::validate() const {
  check_t_range(k, t);
  require(n >= 0 && n <= kMaxAmbient, "ambient n=" + std::to_string(n) + " not enumerable");
  require(x.ambient() == n && m.ambient() == n && c.ambient() == n,
          "X, M, C must all live in [" + std::to_string(n) + "]");
  require(x.cardinality() == t, "|X| must equal t=" + std::to_string(t));
  require(m.cardinality() == k, "|M| must equal k=" + std::to_string(k));
  require(x.is_subset_of(m), "X must be a subset of M");
  require(m.is_subset_of(c), "M must be a subset of C");
  require(c_admissible(n, k, t, c_size()),
          "|C|=" + std::to_string(c_size()) + " not in {k+1,...,2k-t} or n");
}

void FamilyIIParams::validate() const {
  check_t_range(k, t);
  require(n >= 0 && n <= kMaxAmbient, "ambient n=" + std::to_string(n) + " not enumerable");
  require(z.ambient() == n, "Z must live in [" + std::to_string(n) + "]");
  require(z.cardinality() == t + 2, "|Z| must equal t+2=" + std::to_string(t + 2));
}

FamilyIClass family_I_class(const FamilyIParams& p, std::uint64_t f) {
  const std::uint64_t x = p.x.bits();
  const std::uint64_t m = p.m.bits();
  const std::uint64_t c = p.c.bits();
  const int in_m = popcount(f & m);
  if ((f & x) == x && in_m >= p.t + 1) return FamilyIClass::A;
  if ((f & m) == x && popcount(f & c) == p.c_size() - p.k + p.t) return FamilyIClass::B;
  if ((f & ~c) == 0 && popcount(f & x) == p.t - 1 && in_m == p.k - 1) return FamilyIClass::C;
  return FamilyIClass::None;
}

SetFamily build_family_I(const FamilyIParams& p) {
  p.validate();
  std::vector<ElementSet> members;
  for_each_k_mask(p.n, p.k, [&](std::uint64_t f) {
    if (family_I_class(p, f) != FamilyIClass::None) members.emplace_back(p.n, f);
  });
  return SetFamily(p.n, p.k, p.t, std::move(members));
}

SetFamily build_family_II(const FamilyIIParams& p) {
  p.validate();
  const std::uint64_t z = p.z.bits();
  std::vector<ElementSet> members;
  for_each_k_mask(p.n, p.k, [&](std::uint64_t f) {
    if (popcount(f & z) >= p.t + 1) members.emplace_back(p.n, f);
  });
  return SetFamily(p.n, p.k, p.t, std::move(members));
}

std::vector<int> family_I_c_values(int n, int k, int t) {
  std::vector<int> out;
  for (int c = k + 1; c <= 2 * k - t; ++c) out.push_back(c);
  if (n > 2 * k - t) out.push_back(n);
  return out;
}

BigCount h1_size(long long n, int k, int t, long long c) {
  check_t_range(k, t);
  require(n > 2LL * k, "h1 needs n > 2k, got n=" + std::to_string(n));
  require((c >= k + 1 && c <= 2LL * k - t) || c == n,
          "c=" + std::to_string(c) + " not in {k+1,...,2k-t} or n");
  return binomial(n - t, k - t) - binomial(n - k, k - t) + binomial(n - c, 2 * k - c - t) +
         BigCount(t) * (c - k);
}

BigCount h2_size(long long n, int k, int t) {
  check_t_range(k, t);
  return BigCount(t + 2) * binomial(n - t - 2, k - t - 1) + binomial(n - t - 2, k - t - 2);
}

BigCount h2_size_alt(long long n, int k, int t) {
  check_t_range(k, t);
  return BigCount(t + 2) * binomial(n - t - 1, k - t - 1) -
         BigCount(t + 1) * binomial(n - t - 2, k - t - 2);
}

BigCount f_threshold(long long n, int k, int t) {
  check_t_range(k, t);
  return BigCount(k - t) * binomial(n - t - 1, k - t - 1) -
         binomial(k - t, 2) * binomial(n - t - 2, k - t - 2);
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

bool RemarkReport::all_pass_or_skipped() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

RemarkReport remark_identities(int n, int k, int t) {
  check_t_range(k, t);
  RemarkReport report{n, k, t, {}};

  // (a) |C| = k+1 with X = {1..t}, M = {1..k}, C = {1..k+1}.
  IdentityCheck a{"c_eq_k_plus_1", CheckStatus::Skipped, ""};
  if (n < k + 1 || n > kMaxAmbient) {
    a.detail = "needs k+1 <= n <= 64";
  } else {
    const FamilyIParams p{ElementSet::range(n, 1, t), ElementSet::range(n, 1, k),
                          ElementSet::range(n, 1, k + 1), n, k, t};
    const SetFamily h1 = build_family_I(p);
    const std::uint64_t x = p.x.bits();
    const std::uint64_t c = p.c.bits();
    std::vector<ElementSet> expected;
    for_each_k_mask(n, k, [&](std::uint64_t f) {
      const bool star_part = (f & x) == x && popcount(f & c) >= t + 1;
      const bool inside_c = (f & ~c) == 0;
      if (star_part || inside_c) expected.emplace_back(n, f);
    });
    const SetFamily rhs(n, k, t, std::move(expected));
    a.status = h1 == rhs ? CheckStatus::Pass : CheckStatus::Fail;
    a.detail = "|H1|=" + std::to_string(h1.size()) + " |rhs|=" + std::to_string(rhs.size());
  }
  report.checks.push_back(a);

  IdentityCheck b_sets{"t_eq_k_minus_2_sets", CheckStatus::Skipped, ""};
  IdentityCheck b_sizes{"t_eq_k_minus_2_sizes", CheckStatus::Skipped, ""};
  if (t != k - 2) {
    b_sets.detail = b_sizes.detail = "not applicable: t != k-2";
  } else {
    if (n < k + 1 || n > kMaxAmbient) {
      b_sets.detail = "needs k+1 <= n <= 64";
    } else {
      const FamilyIParams p{ElementSet::range(n, 1, t), ElementSet::range(n, 1, k),
                            ElementSet::full(n), n, k, t};
      const SetFamily h1 = build_family_I(p);
      const SetFamily h2 = build_family_II({p.m, n, k, t});
      b_sets.status = h1 == h2 ? CheckStatus::Pass : CheckStatus::Fail;
      b_sets.detail = "|H1|=" + std::to_string(h1.size()) + " |H2|=" + std::to_string(h2.size());
    }
    if (n <= 2 * k) {
      b_sizes.detail = "h1 formula needs n > 2k";
    } else {
      const BigCount lhs = h1_size(n, k, t, n);
      const BigCount rhs = h2_size(n, k, t);
      b_sizes.status = lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail;
      b_sizes.detail = "h1(n)=" + lhs.str() + " h2=" + rhs.str();
    }
  }
  report.checks.push_back(b_sets);
  report.checks.push_back(b_sizes);
  return report;
}

}  // namespace tfam
