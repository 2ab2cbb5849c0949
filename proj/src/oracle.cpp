#include "tfam/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "tfam/analysis.hpp"
#include "tfam/bounds.hpp"
#include "tfam/error.hpp"
#include "tfam/families.hpp"

namespace tfam::oracle {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

int parse_int(const std::string& digits, const std::string& clause) {
  int value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw Error(ErrorKind::ParseError, "bad integer '" + digits + "' in '" + clause + "'");
  }
  return value;
}

bool compare(int lhs, Relation rel, int rhs) {
  switch (rel) {
    case Relation::Eq: return lhs == rhs;
    case Relation::Ge: return lhs >= rhs;
    case Relation::Le: return lhs <= rhs;
  }
  return false;
}

void check_oracle_ambient(int n, int k) {
  if (n > kMaxOracleAmbient) {
    throw Error(ErrorKind::AmbientTooLarge,
                "oracle scans every mask and needs n <= " + std::to_string(kMaxOracleAmbient));
  }
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative ambient size");
  if (k < 0 || k > n) throw Error(ErrorKind::InvalidK, "k = " + std::to_string(k));
}

}  // namespace

bool PredicateSpec::matches(std::uint64_t f) const {
  for (const auto& atom : atoms) {
    const bool ok = std::visit(
        [f](const auto& a) -> bool {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, IntersectionAtom>) {
            return compare(popcount(f & a.set.bits()), a.relation, a.value);
          } else if constexpr (std::is_same_v<T, ContainsAtom>) {
            return (f & a.set.bits()) == a.set.bits();
          } else {
            return (f & ~a.set.bits()) == 0;
          }
        },
        atom);
    if (!ok) return false;
  }
  return true;
}

PredicateSpec PredicateSpec::parse(int n, std::string_view text) {
  static const std::regex clause_re(R"(^\|F&\{([0-9,]*)\}\|(>=|<=|=)([0-9]+)$)");
  PredicateSpec spec{n, {}};
  std::istringstream words{std::string(text)};
  std::vector<std::string> clauses(1);
  std::string word;
  bool any = false;
  while (words >> word) {
    any = true;
    if (word == "and") {
      clauses.emplace_back();
    } else {
      clauses.back() += word;
    }
  }
  if (!any) throw Error(ErrorKind::ParseError, "empty predicate");
  for (const auto& clause : clauses) {
    if (clause.empty()) throw Error(ErrorKind::ParseError, "dangling 'and' in predicate");
    if (clause == "true") continue;
    std::smatch match;
    if (!std::regex_match(clause, match, clause_re)) {
      throw Error(ErrorKind::ParseError, "cannot parse clause '" + clause + "'");
    }
    std::vector<int> elements;
    std::string list = match[1].str();
    std::istringstream items(list);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) throw Error(ErrorKind::ParseError, "empty element in '" + clause + "'");
      const int e = parse_int(item, clause);
      if (e < 1 || e > n) {
        throw Error(ErrorKind::ParseError,
                    "element " + item + " outside [1," + std::to_string(n) + "] in '" + clause + "'");
      }
      elements.push_back(e);
    }
    const std::string rel = match[2].str();
    const Relation relation = rel == "=" ? Relation::Eq : rel == ">=" ? Relation::Ge : Relation::Le;
    spec.atoms.emplace_back(IntersectionAtom{ElementSet::from_elements(n, elements), relation,
                                             parse_int(match[3].str(), clause)});
  }
  return spec;
}

BigCount count_by_predicate(int n, int k, const PredicateSpec& predicate) {
  check_oracle_ambient(n, k);
  const std::uint64_t end = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (popcount(mask) == k && predicate.matches(mask)) ++count;
  }
  return BigCount(count);
}

BigCount count_disjoint_union(int n, int k, std::span<const PredicateSpec> predicates) {
  check_oracle_ambient(n, k);
  const std::uint64_t end = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (popcount(mask) != k) continue;
    int hits = 0;
    for (const auto& p : predicates) hits += p.matches(mask) ? 1 : 0;
    if (hits > 1) {
      throw std::logic_error("predicates overlap on " + ElementSet(n, mask).to_string());
    }
    count += static_cast<std::uint64_t>(hits);
  }
  return BigCount(count);
}

std::vector<PredicateSpec> family_I_predicates(const ElementSet& x, const ElementSet& m, const ElementSet& c,
                                               int k, int t) {
  const int n = x.ambient();
  const int c_size = c.cardinality();
  PredicateSpec a{n, {ContainsAtom{x}, IntersectionAtom{m, Relation::Ge, t + 1}}};
  // F ∩ M = X  <=>  X ⊆ F and |F ∩ M| = t.
  PredicateSpec b{n,
                  {ContainsAtom{x}, IntersectionAtom{m, Relation::Eq, t},
                   IntersectionAtom{c, Relation::Eq, c_size - k + t}}};
  PredicateSpec cc{n,
                   {WithinAtom{c}, IntersectionAtom{x, Relation::Eq, t - 1},
                    IntersectionAtom{m, Relation::Eq, k - 1}}};
  return {a, b, cc};
}

PredicateSpec family_II_predicate(const ElementSet& z, int t) {
  return PredicateSpec{z.ambient(), {IntersectionAtom{z, Relation::Ge, t + 1}}};
}

ExperimentReport theorem_experiment(const ExperimentOptions& options) {
  const int k = options.k;
  const int t = options.t;
  if (!theorem_hypothesis(options.n, k, t)) {
    throw Error(ErrorKind::HypothesisUnmet,
                "theorem hypothesis needs n >= " + std::to_string(theorem_threshold(k, t)));
  }
  if (options.n > 32) throw Error(ErrorKind::AmbientTooLarge, "experiment needs n <= 32");
  if (binomial(options.n, k) > options.max_candidates) {
    throw Error(ErrorKind::AmbientTooLarge, "C(n,k) = " + binomial(options.n, k).str() +
                                                " exceeds the candidate cap " +
                                                std::to_string(options.max_candidates));
  }
  if (options.trials < 0) throw Error(ErrorKind::InvalidParams, "negative trial count");

  const int n = static_cast<int>(options.n);
  ExperimentReport report;
  report.options = options;
  report.f = f_threshold(n, k, t);

  const std::vector<ElementSet> candidates = k_subsets(n, k);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);

  for (int trial = 0; trial < options.trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);

    // Seed: random compatible sets, each shrinking the common core, until no
    // t-set is common to all. Restart from a fresh first set when stuck.
    std::vector<ElementSet> seed;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      seed.assign(1, candidates[pick(rng)]);
      std::uint64_t common = seed.front().bits();
      for (int draw = 0; draw < 2000 && popcount(common) >= t; ++draw) {
        const ElementSet& g = candidates[pick(rng)];
        if (popcount(common & g.bits()) == popcount(common)) continue;
        const bool ok = std::all_of(seed.begin(), seed.end(),
                                    [&](const ElementSet& s) { return popcount(s.bits() & g.bits()) >= t; });
        if (ok) {
          seed.push_back(g);
          common &= g.bits();
        }
      }
      if (popcount(common) < t) break;
    }

    std::vector<ElementSet> order = candidates;
    std::shuffle(order.begin(), order.end(), rng);
    const SetFamily family = maximalize(SetFamily(n, k, t, seed), order);
    report.largest_family = std::max(report.largest_family, family.size());

    if (trivial_kernel(family)) {
      ++report.trivial_discarded;
      continue;
    }

    Classification cls;
    try {
      cls = classify(family);
    } catch (const Error& e) {
      report.violations.push_back({trial, family.size(), "error", e.what()});
      continue;
    }
    const std::string tag(to_string(cls.tag));

    if (cls.diagnostics.tau == t + 1 && 2 * k <= n) {
      ++report.t_set_checks;
      try {
        const TSet ts = compute_T_set(family);
        const std::string shape = ts.shape == TSetShape::Complete
                                      ? "complete"
                                      : "star_l=" + std::to_string(ts.span.cardinality());
        ++report.t_set_shapes[shape];
      } catch (const Error& e) {
        report.violations.push_back({trial, family.size(), tag, e.what()});
      }
    }

    if (BigCount(family.size()) < report.f) {
      ++report.below_threshold;
      ++report.below_threshold_tags[tag];
      continue;
    }
    ++report.at_or_above_tags[tag];
    if (cls.tag == ClassificationTag::FamilyI) continue;
    if (cls.tag == ClassificationTag::FamilyII && k <= 2 * t + 2) continue;
    report.violations.push_back({trial, family.size(), tag,
                                 cls.tag == ClassificationTag::FamilyII
                                     ? "H2 above threshold with t < k/2 - 1"
                                     : "maximal non-trivial family above threshold is not Family I or II"});
  }
  return report;
}

}  // namespace tfam::oracle
