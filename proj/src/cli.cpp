#include "tfam/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfam/analysis.hpp"
#include "tfam/bounds.hpp"
#include "tfam/error.hpp"
#include "tfam/families.hpp"
#include "tfam/family_file.hpp"
#include "tfam/oracle.hpp"

namespace tfam::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

Json elements_json(const ElementSet& s) { return Json(s.elements()); }

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

SetFamily load_family(const std::string& path, std::optional<FamilyHeader> fallback) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return to_family(read_family_file(in), fallback);
}

Json classification_json(const SetFamily& family, const Classification& cls) {
  Json j;
  j["tag"] = std::string(to_string(cls.tag));
  j["n"] = family.n();
  j["k"] = family.k();
  j["t"] = family.t();
  j["size"] = family.size();
  switch (cls.tag) {
    case ClassificationTag::Trivial:
      j["kernel"] = elements_json(*cls.kernel);
      break;
    case ClassificationTag::FamilyI:
      j["X"] = elements_json(cls.family_I->x);
      j["M"] = elements_json(cls.family_I->m);
      j["C"] = elements_json(cls.family_I->c);
      j["c"] = cls.family_I->c_size();
      break;
    case ClassificationTag::FamilyII:
      j["Z"] = elements_json(cls.family_II->z);
      break;
    case ClassificationTag::Other:
      break;
  }
  const auto& d = cls.diagnostics;
  j["diagnostics"] = Json{{"tau", optional_json(d.tau)},
                          {"t_set_size", optional_json(d.t_set_size)},
                          {"tau_of_T", optional_json(d.tau_of_T)},
                          {"span_size", optional_json(d.span_size)},
                          {"c", optional_json(d.c)},
                          {"branch", d.branch},
                          {"note", d.note}};
  return j;
}

Json ordering_json(const OrderingReport& r) {
  Json entries = Json::array();
  for (const auto& [label, value] : r.entries) entries.push_back({{"label", label}, {"value", value.str()}});
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"id", c.id},
                      {"relation", c.relation},
                      {"relation_holds", c.relation_holds},
                      {"status", std::string(to_string(c.status))},
                      {"note", c.note}});
  }
  return Json{{"entries", entries}, {"claims", claims}, {"all_asserted_hold", r.all_asserted_hold()}};
}

Json gap_json(const GapReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"id", c.id},
                      {"bound_name", c.bound_name},
                      {"bound", c.bound.str()},
                      {"l", c.l == 0 ? Json(nullptr) : Json(c.l)},
                      {"below_f", c.below_f},
                      {"status", std::string(to_string(c.status))},
                      {"note", c.note}});
  }
  return Json{{"f", r.f.str()},
              {"denominator", r.denominator.str()},
              {"claims", claims},
              {"all_asserted_hold", r.all_asserted_hold()}};
}

// Ordering plus (when the theorem hypothesis holds) gap report for one point.
Json lemma_point_json(long long n, int k, int t, bool& all_hold) {
  const OrderingReport ord = verify_orderings(n, k, t);
  all_hold = all_hold && ord.all_asserted_hold();
  Json j{{"n", n}, {"k", k}, {"t", t}, {"orderings", ordering_json(ord)}};
  if (theorem_hypothesis(n, k, t)) {
    const GapReport gap = verify_gap_f3(n, k, t);
    all_hold = all_hold && gap.all_asserted_hold();
    j["gap"] = gap_json(gap);
    j["gap_note"] = "";
  } else {
    j["gap"] = nullptr;
    j["gap_note"] = "theorem hypothesis unmet, gap checks skipped";
  }
  return j;
}

void write_sizes(std::ostream& out, long long n, int k, int t, const std::string& format) {
  struct Row {
    std::string quantity;
    std::string c;
    BigCount value;
  };
  std::vector<Row> rows;
  for (long long c = k + 1; c <= 2LL * k - t; ++c) rows.push_back({"h1", std::to_string(c), h1_size(n, k, t, c)});
  rows.push_back({"h1", "n", h1_size(n, k, t, n)});
  rows.push_back({"h2", "", h2_size(n, k, t)});
  rows.push_back({"f", "", f_threshold(n, k, t)});

  if (format == "csv") {
    out << "quantity,c,value\n";
    for (const auto& r : rows) out << r.quantity << ',' << r.c << ',' << r.value.str() << '\n';
  } else if (format == "json") {
    Json h1 = Json::array();
    for (const auto& r : rows) {
      if (r.quantity != "h1") continue;
      const bool is_n = r.c == "n";
      h1.push_back({{"c", is_n ? n : std::stoll(r.c)}, {"c_is_n", is_n}, {"value", r.value.str()}});
    }
    Json j{{"n", n}, {"k", k}, {"t", t}, {"h1", h1}, {"h2", rows[rows.size() - 2].value.str()},
           {"f", rows.back().value.str()}};
    out << j.dump() << '\n';
  } else {
    out << std::left << std::setw(10) << "quantity" << std::setw(8) << "c" << "value\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(10) << r.quantity << std::setw(8) << (r.c.empty() ? "-" : r.c)
          << r.value.str() << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, count, analyse and classify t-intersecting families of k-subsets of [n]", "tfam"};
  app.require_subcommand(1);

  // sizes
  long long n = 0;
  int k = 0;
  int t = 0;
  std::string format = "table";
  auto* sizes = app.add_subcommand("sizes", "h1 for every admissible c, h2 and f");
  sizes->add_option("--n", n, "ground set size")->required();
  sizes->add_option("--k", k, "member size")->required();
  sizes->add_option("--t", t, "intersection parameter")->required();
  sizes->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // construct
  std::vector<int> x_elems, m_elems, c_elems, z_elems;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "write Family I or Family II as a family file");
  construct->require_subcommand(1);
  construct->add_option("--n", n)->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--t", t)->required();
  construct->add_option("--out", out_path, "output file (default: stdout)");
  auto* family1 = construct->add_subcommand("family1", "H1(X, M, C)");
  family1->fallthrough();
  family1->add_option("--x", x_elems)->delimiter(',')->required();
  family1->add_option("--m", m_elems)->delimiter(',')->required();
  family1->add_option("--c", c_elems)->delimiter(',')->required();
  auto* family2 = construct->add_subcommand("family2", "H2(Z)");
  family2->fallthrough();
  family2->add_option("--z", z_elems)->delimiter(',')->required();

  // classify / cover
  std::string in_path;
  std::optional<int> file_n, file_k, file_t;
  std::string expect_tag;
  auto* classify_cmd = app.add_subcommand("classify", "classify a maximal t-intersecting family");
  auto* cover_cmd = app.add_subcommand("cover", "t-covering number and a witness");
  for (auto* sub : {classify_cmd, cover_cmd}) {
    sub->add_option("--in", in_path, "family file")->required();
    sub->add_option("--n", file_n, "ground set size for a headerless file");
    sub->add_option("--k", file_k, "member size for a headerless file");
    sub->add_option("--t", file_t, "intersection parameter for a headerless file");
  }
  classify_cmd->add_option("--expect", expect_tag, "exit 1 unless the tag matches")
      ->check(CLI::IsMember({"Trivial", "FamilyI", "FamilyII", "Other"}));

  // verify-lemmas
  bool grid = false;
  GridSpec grid_spec;
  std::string n_mode = "extended";
  std::optional<long long> vn;
  std::optional<int> vk, vt;
  auto* verify = app.add_subcommand("verify-lemmas", "size orderings and gap checks");
  auto* grid_flag = verify->add_flag("--grid", grid, "sweep the default grid");
  verify->add_option("--n", vn)->excludes(grid_flag);
  verify->add_option("--k", vk)->excludes(grid_flag);
  verify->add_option("--t", vt)->excludes(grid_flag);
  verify->add_option("--t-max", grid_spec.t_max, "largest t in the grid")->needs(grid_flag);
  verify->add_option("--k-max", grid_spec.k_max, "largest k in the grid (0: t + k-span)")->needs(grid_flag);
  verify->add_option("--k-span", grid_spec.k_span, "largest k - t in the grid")->needs(grid_flag);
  verify->add_option("--n-mode", n_mode, "threshold or extended")
      ->check(CLI::IsMember({"threshold", "extended"}))
      ->needs(grid_flag);

  // theorem-check
  oracle::ExperimentOptions exp;
  exp.trials = 500;
  exp.seed = 7;
  auto* theorem = app.add_subcommand("theorem-check", "random maximal families against the classification");
  theorem->add_option("--n", exp.n)->required();
  theorem->add_option("--k", exp.k)->required();
  theorem->add_option("--t", exp.t)->required();
  theorem->add_option("--trials", exp.trials)->check(CLI::NonNegativeNumber);
  theorem->add_option("--seed", exp.seed);
  theorem->add_option("--cap", exp.max_candidates, "largest C(n,k) to enumerate");

  // oracle-count
  int on = 0;
  int ok_ = 0;
  std::string pred;
  auto* oracle_cmd = app.add_subcommand("oracle-count", "brute-force count of k-subsets satisfying a predicate");
  oracle_cmd->add_option("--n", on)->required();
  oracle_cmd->add_option("--k", ok_)->required();
  oracle_cmd->add_option("--pred", pred, "e.g. '|F&{1,2,3}|>=2 and |F&{4}|=0'")->required();

  std::vector<const char*> argv{"tfam"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "tfam: " << msg << '\n';
    return kExitUsage;
  }

  try {
    if (*sizes) {
      check_t_range(k, t);
      if (n <= 2LL * k) throw Error(ErrorKind::InvalidParams, "sizes needs n > 2k");
      write_sizes(out, n, k, t, format);
      return kExitOk;
    }

    if (*construct) {
      SetFamily family = [&] {
        if (*family1) {
          const FamilyIParams p{ElementSet::from_elements(static_cast<int>(n), x_elems),
                                ElementSet::from_elements(static_cast<int>(n), m_elems),
                                ElementSet::from_elements(static_cast<int>(n), c_elems), static_cast<int>(n), k, t};
          return build_family_I(p);
        }
        const FamilyIIParams p{ElementSet::from_elements(static_cast<int>(n), z_elems), static_cast<int>(n), k, t};
        return build_family_II(p);
      }();
      if (out_path.empty()) {
        write_family_file(out, family);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
        write_family_file(file, family);
      }
      return kExitOk;
    }

    if (*classify_cmd || *cover_cmd) {
      std::optional<FamilyHeader> fallback;
      if (file_n && file_k && file_t) fallback = FamilyHeader{*file_n, *file_k, *file_t};
      const SetFamily family = load_family(in_path, fallback);
      if (*classify_cmd) {
        const Classification cls = classify(family);
        out << classification_json(family, cls).dump() << '\n';
        if (!expect_tag.empty() && expect_tag != to_string(cls.tag)) {
          err << "tfam: expected " << expect_tag << ", got " << to_string(cls.tag) << '\n';
          return kExitClaimFailed;
        }
      } else {
        const Cover c = t_covering_number(family);
        out << Json{{"n", family.n()}, {"k", family.k()}, {"t", family.t()}, {"tau", c.size},
                    {"witness", elements_json(c.witness)}}
                   .dump()
            << '\n';
      }
      return kExitOk;
    }

    if (*verify) {
      bool all_hold = true;
      Json points = Json::array();
      if (grid) {
        grid_spec.extended = n_mode == "extended";
        for (const auto& p : sweep_grid(grid_spec)) points.push_back(lemma_point_json(p.n, p.k, p.t, all_hold));
      } else {
        if (!vn || !vk || !vt) throw Error(ErrorKind::InvalidParams, "verify-lemmas needs --n --k --t or --grid");
        points.push_back(lemma_point_json(*vn, *vk, *vt, all_hold));
      }
      out << Json{{"points", points}, {"all_asserted_hold", all_hold}}.dump() << '\n';
      return all_hold ? kExitOk : kExitClaimFailed;
    }

    if (*theorem) {
      const auto report = oracle::theorem_experiment(exp);
      Json violations = Json::array();
      for (const auto& v : report.violations) {
        violations.push_back({{"trial", v.trial}, {"size", v.family_size}, {"tag", v.tag}, {"reason", v.reason}});
      }
      out << Json{{"n", exp.n},
                  {"k", exp.k},
                  {"t", exp.t},
                  {"trials", exp.trials},
                  {"seed", exp.seed},
                  {"f", report.f.str()},
                  {"trivial_discarded", report.trivial_discarded},
                  {"below_threshold", report.below_threshold},
                  {"below_threshold_tags", report.below_threshold_tags},
                  {"at_or_above_tags", report.at_or_above_tags},
                  {"largest_family", report.largest_family},
                  {"t_set_checks", report.t_set_checks},
                  {"t_set_shapes", report.t_set_shapes},
                  {"violations", violations},
                  {"passed", report.passed()}}
                 .dump()
          << '\n';
      return report.passed() ? kExitOk : kExitClaimFailed;
    }

    if (*oracle_cmd) {
      const auto spec = oracle::PredicateSpec::parse(on, pred);
      out << oracle::count_by_predicate(on, ok_, spec).str() << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "tfam: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "tfam: internal invariant failed: " << e.what() << '\n';
    return kExitClaimFailed;
  }
  return kExitUsage;
}

}  // namespace tfam::cli
