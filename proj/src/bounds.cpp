#include "tfam/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tfam/error.hpp"
#include "tfam/families.hpp"

namespace tfam {

namespace {

BigCount pow_int(long long base, int exp) {
  BigCount r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string h1_label(long long n, long long c) {
  return c == n ? std::string("h1(c=n)") : "h1(c=" + std::to_string(c) + ")";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, what);
}

}  // namespace

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Fails: return "fails";
    case ClaimStatus::Informational: return "informational";
    case ClaimStatus::Flagged: return "flagged";
  }
  return "unknown";
}

bool OrderingReport::all_asserted_hold() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const Claim& c) { return c.status == ClaimStatus::Fails; });
}

bool GapReport::all_asserted_hold() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const GapClaim& c) { return c.status == ClaimStatus::Fails; });
}

long long lemma_threshold(int k, int t) {
  const long long w = k - t + 1;
  return static_cast<long long>(t + 2) * (t + 1) / 2 * w * w + t;
}

bool lemma_hypothesis(long long n, int k, int t) { return lemma_threshold(k, t) <= n; }

long long theorem_threshold(int k, int t) {
  // Doubled: max{(t+2)(t+1), k-t+2} (k-t+1)^2 + 2t <= 2n.
  const long long w = k - t + 1;
  const long long doubled = std::max<long long>(static_cast<long long>(t + 2) * (t + 1), k - t + 2) * w * w + 2LL * t;
  return (doubled + 1) / 2;
}

bool theorem_hypothesis(long long n, int k, int t) {
  check_t_range(k, t);
  const long long w = k - t + 1;
  const long long doubled = std::max<long long>(static_cast<long long>(t + 2) * (t + 1), k - t + 2) * w * w + 2LL * t;
  return doubled <= 2 * n;
}

OrderingReport verify_orderings(long long n, int k, int t) {
  check_t_range(k, t);
  require(n > 2LL * k, "orderings need n > 2k, got n=" + std::to_string(n));

  OrderingReport r;
  r.n = n;
  r.k = k;
  r.t = t;

  auto h1 = [&](long long c) { return h1_size(n, k, t, c); };
  for (long long c = k + 1; c <= 2LL * k - t; ++c) r.entries.emplace_back(h1_label(n, c), h1(c));
  r.entries.emplace_back(h1_label(n, n), h1(n));
  const BigCount h2 = h2_size(n, k, t);
  const BigCount f = f_threshold(n, k, t);
  r.entries.emplace_back("h2", h2);
  r.entries.emplace_back("f", f);

  const bool lemma_hyp = lemma_hypothesis(n, k, t);
  auto add = [&](std::string id, std::string relation, bool holds, bool asserted, std::string note = {}) {
    Claim c{std::move(id), std::move(relation), holds, ClaimStatus::Informational, std::move(note)};
    if (asserted) c.status = holds ? ClaimStatus::Holds : ClaimStatus::Fails;
    r.claims.push_back(std::move(c));
  };
  const std::string unmet = "hypothesis unmet, informational only";

  // Strict decrease of h1 across k+1 .. 2k-t.
  for (long long c = k + 1; c < 2LL * k - t; ++c) {
    add("h1_decreasing", h1_label(n, c) + " > " + h1_label(n, c + 1), h1(c) > h1(c + 1), true);
  }
  add("h1_above_f", "min{" + h1_label(n, 2LL * k - t) + ", h1(c=n)} >= f",
      std::min(h1(2LL * k - t), h1(n)) >= f, true);

  // Sign of f - h2 splits at t = (k-3)/2.
  if (2 * t <= k - 3) {
    add("h2_vs_f", "h2 < f", h2 < f, lemma_hyp, lemma_hyp ? "" : unmet);
  } else {
    add("h2_vs_f", "h2 > f", h2 > f, lemma_hyp, lemma_hyp ? "" : unmet);
  }

  // h1 at c = n sits between c = 2k-t-2 and c = 2k-t-1; equality with the
  // latter exactly when t = 1 (difference (t-1)(n-2k+t+1)).
  if (t <= k - 3) {
    const long long lo = 2LL * k - t - 1;
    const long long hi = 2LL * k - t - 2;
    add("h1_n_below", h1_label(n, hi) + " > h1(c=n)", h1(hi) > h1(n), lemma_hyp, lemma_hyp ? "" : unmet);
    if (t == 1) {
      add("h1_n_above", "h1(c=n) = " + h1_label(n, lo), h1(n) == h1(lo), lemma_hyp, lemma_hyp ? "" : unmet);
    } else {
      add("h1_n_above", "h1(c=n) > " + h1_label(n, lo), h1(n) > h1(lo), lemma_hyp, lemma_hyp ? "" : unmet);
    }
  } else {  // t = k-2
    if (t == 1) {
      add("h1_n_vs_k_plus_1", "h1(c=n) = " + h1_label(n, k + 1), h1(n) == h1(k + 1), lemma_hyp,
          lemma_hyp ? "" : unmet);
    } else {
      add("h1_n_vs_k_plus_1", "h1(c=n) > " + h1_label(n, k + 1), h1(n) > h1(k + 1), lemma_hyp,
          lemma_hyp ? "" : unmet);
    }
  }

  // h2 against the two largest Family I sizes (needs only 2k < n).
  if (k == 2 * t + 2) {
    if (t == 1) {
      add("h2_vs_h1_k_plus_2", "h2 = " + h1_label(n, k + 2), h2 == h1(k + 2), true);
      add("h1_k_plus_1_vs_h2", h1_label(n, k + 1) + " > h2", h1(k + 1) > h2, true);
    } else {
      add("h2_vs_h1_k_plus_2", "h2 > " + h1_label(n, k + 2), h2 > h1(k + 2), true);
      const bool wins = h1(k + 1) > h2;
      add("h1_k_plus_1_vs_h2", h1_label(n, k + 1) + " > h2", wins, false,
          std::string("large-n comparator, no threshold; at this n ") +
              (wins ? "h1(c=k+1) is larger" : "h2 is at least as large"));
    }
  } else if (2 * t >= k - 1) {
    if (t == 1 && k == 3) {
      add("h2_vs_h1_k_plus_1", "h2 = " + h1_label(n, k + 1), h2 == h1(k + 1), true);
    } else {
      add("h2_vs_h1_k_plus_1", "h2 > " + h1_label(n, k + 1), h2 > h1(k + 1), true);
    }
  }
  return r;
}

BigCount lemma33_bound(const BoundInputs& in, CoverBoundCase which) {
  const long long n = in.n;
  const int k = in.k;
  const int t = in.t;
  check_t_range(k, t);
  require(2LL * k <= n, "bound needs 2k <= n");
  const BigCount top = binomial(n - t - 1, k - t - 1);
  const BigCount next = binomial(n - t - 2, k - t - 2);
  switch (which) {
    case CoverBoundCase::SingletonT:
      return top + BigCount(t + 1) * (k - t) * (k - t + 1) * next;
    case CoverBoundCase::GeneralL: {
      const int l = in.l;
      require(l >= t + 1 && l <= k + 1, "need t+1 <= l <= k+1, got l=" + std::to_string(l));
      return BigCount(l - t) * top + BigCount(k - l + 1) * (k - t + 1) * next +
             BigCount(t) * binomial(n - l, k - l + 1);
    }
    case CoverBoundCase::LEqualsTPlus2:
      return 2 * top + BigCount(k - 1) * (k - t + 1) * next;
  }
  throw Error(ErrorKind::InvalidParams, "unknown bound case");
}

CoverNumberBounds lemma34_bound(const BoundInputs& in) {
  const long long n = in.n;
  const int k = in.k;
  const int t = in.t;
  const int m = in.m;
  check_t_range(k, t);
  require(m >= t + 2 && m <= k, "need t+2 <= m <= k, got m=" + std::to_string(m));
  if (!lemma_hypothesis(n, k, t)) {
    throw Error(ErrorKind::HypothesisUnmet,
                "need C(t+2,2)(k-t+1)^2 + t <= n, threshold " + std::to_string(lemma_threshold(k, t)));
  }
  const long long w = k - t + 1;
  CoverNumberBounds b;
  b.per_m = pow_int(k, m - t - 2) * (w * w) * binomial(m, t) * binomial(n - m, k - m);
  b.uniform = BigCount(w * w) * binomial(t + 2, 2) * binomial(n - t - 2, k - t - 2);
  if (b.per_m > b.uniform) {
    throw std::logic_error("per-m bound " + b.per_m.str() + " exceeds uniform bound " + b.uniform.str() +
                           " at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " t=" + std::to_string(t) + " m=" + std::to_string(m));
  }
  return b;
}

GapReport verify_gap_f3(long long n, int k, int t) {
  check_t_range(k, t);
  if (!theorem_hypothesis(n, k, t)) {
    throw Error(ErrorKind::HypothesisUnmet,
                "theorem hypothesis needs n >= " + std::to_string(theorem_threshold(k, t)));
  }
  GapReport r;
  r.n = n;
  r.k = k;
  r.t = t;
  r.f = f_threshold(n, k, t);
  r.denominator = binomial(n - t - 2, k - t - 2);

  // f3 = (f - bound) / denominator with denominator > 0, so f3 > 0 iff bound < f.
  auto add = [&](std::string id, std::string name, BigCount bound, int l, bool asserted, std::string note) {
    GapClaim c{std::move(id), std::move(name), std::move(bound), l, false, ClaimStatus::Flagged,
               std::move(note)};
    c.below_f = c.bound < r.f;
    if (asserted) c.status = c.below_f ? ClaimStatus::Holds : ClaimStatus::Fails;
    r.claims.push_back(std::move(c));
  };

  const BoundInputs base{n, k, t, 0, 0};
  add("a_singleton_T", "single covering (t+1)-set", lemma33_bound(base, CoverBoundCase::SingletonT), 0,
      true, "");

  if (k == t + 2) {
    add("b_l_eq_t_plus_2", "star covering sets, l = t+2",
        lemma33_bound(base, CoverBoundCase::LEqualsTPlus2), t + 2, false,
        "covered by classification branch, not by gap: l = t+2 = k gives |M| = k (Family I or H2)");
  } else {
    add("b_l_eq_t_plus_2", "star covering sets, l = t+2",
        lemma33_bound(base, CoverBoundCase::LEqualsTPlus2), t + 2, true, "");
  }

  for (int l = t + 3; l < k; ++l) {
    BoundInputs in = base;
    in.l = l;
    add("c_general_l", "star covering sets, l = " + std::to_string(l),
        lemma33_bound(in, CoverBoundCase::GeneralL), l, true, "");
  }

  BoundInputs deep = base;
  deep.m = t + 2;
  add("d_tau_at_least_t_plus_2", "covering number >= t+2", lemma34_bound(deep).uniform, 0, true, "");

  if (2 * t <= k - 3) {
    add("e_complete_T", "complete covering sets (h2)", h2_size(n, k, t), 0, true, "");
  } else {
    add("e_complete_T", "complete covering sets (h2)", h2_size(n, k, t), 0, false,
        "covered by classification branch: H2 is an admissible outcome when t >= k/2 - 1");
  }
  return r;
}

std::vector<GridPoint> sweep_grid(const GridSpec& spec) {
  std::vector<GridPoint> out;
  for (int t = 1; t <= spec.t_max; ++t) {
    for (int k = t + 2; k <= t + spec.k_span; ++k) {
      if (spec.k_max > 0 && k > spec.k_max) break;
      std::set<long long> ns{2LL * k + 1, lemma_threshold(k, t), theorem_threshold(k, t)};
      if (spec.extended) {
        ns.insert(theorem_threshold(k, t) + 1);
        ns.insert(2 * theorem_threshold(k, t));
      }
      for (long long n : ns) {
        if (n > 2LL * k) out.push_back({n, k, t});
      }
    }
  }
  return out;
}

}  // namespace tfam
