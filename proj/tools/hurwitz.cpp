// Command-line front end: classes, subgroups, components, growth, spectrum, sym, verify.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {

struct RunConfig {
  std::string group;
  int max_degree = 8;
  std::string out;
  std::string format = "json";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1729;
  Caps caps = Caps::from_environment();
};

void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InvalidArgument("cannot write " + cfg.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit(const RunConfig &cfg, const Json &j) { emit(cfg, j.dump(2)); }

MonoidTable build_table(const RunConfig &cfg) {
  auto s = load_setting_file(cfg.group, cfg.caps);
  return MonoidTable::build(s, cfg.max_degree, cfg.caps);
}

int cmd_classes(const RunConfig &cfg) {
  emit(cfg, classes_json(*load_setting_file(cfg.group, cfg.caps)));
  return 0;
}

int cmd_subgroups(const RunConfig &cfg) {
  emit(cfg, subgroups_json(*load_setting_file(cfg.group, cfg.caps)));
  return 0;
}

int cmd_components(const RunConfig &cfg) {
  auto table = build_table(cfg);
  auto hf = hilbert_table(table);
  if (cfg.format == "csv") emit(cfg, hilbert_csv(table, hf));
  else emit(cfg, components_json(table, hf));
  return 0;
}

int cmd_growth(const RunConfig &cfg, const std::vector<SubgroupId> &requested, bool average) {
  auto table = build_table(cfg);
  auto hf = hilbert_table(table);
  const auto &s = table.setting();
  std::vector<SubgroupId> ids = requested;
  if (ids.empty())
    for (const auto *h : s.d_generated_subgroups())
      ids.push_back(h->id);
  Json j;
  j["schema_version"] = schema_version;
  j["max_degree"] = cfg.max_degree;
  Json reports = Json::array();
  for (SubgroupId h : ids) {
    if (h >= s.sub_count()) throw InvalidArgument("no D-generated subgroup with id " + std::to_string(h));
    Json r;
    try {
      r = growth_json(s, stabilization_report(table, hf, h));
    } catch (const InsufficientData &e) {
      r = Json{{"subgroup", h}, {"insufficient_data", e.what()}};
    } catch (const InvalidArgument &e) {
      r = Json{{"subgroup", h}, {"not_applicable", e.what()}};
    }
    if (average && !s.subgroup(h).is_trivial()) {
      auto cls = classify_subgroup(table, h);
      try {
        r["average"] = average_json(average_leading_coefficient(table, hf, h, cls.factors));
      } catch (const Error &e) {
        r["average"] = Json{{"unavailable", e.what()}};
      }
    }
    reports.push_back(r);
  }
  j["reports"] = reports;
  emit(cfg, j);
  return 0;
}

int cmd_spectrum(const RunConfig &cfg, int symmetric, bool dot) {
  if (symmetric > 0) {
    auto sp = spec_sd(symmetric, cfg.caps);
    emit(cfg, dot ? proj_dot(sp) : symmetric_spectrum_json(sp).dump(2));
    return 0;
  }
  if (cfg.group.empty()) throw InvalidArgument("spectrum needs --group or --symmetric");
  auto table = build_table(cfg);
  auto desc = spec_description(table);
  emit(cfg, dot ? proj_dot(desc, table) : spectrum_json(table, desc).dump(2));
  return 0;
}

int cmd_sym(const RunConfig &cfg, int d, bool presentation, bool formula, bool dot) {
  Json j;
  j["schema_version"] = schema_version;
  j["d"] = d;
  j["max_degree"] = cfg.max_degree;
  Json census = Json::array();
  Json hf = Json::array();
  std::string dots;
  for (int n = 0; n <= cfg.max_degree; ++n) {
    auto c = component_census_sd(d, n, cfg.caps);
    hf.push_back(c.size());
    if (n % 2 == 0 && n > 0) {
      census.push_back(census_json(d, n, c));
      if (dot) dots += census_dot(d, c);
    }
  }
  if (dot) {
    emit(cfg, dots);
    return 0;
  }
  j["hilbert"] = hf;
  auto lc = hf_leading_coefficient(d);
  j["leading_coefficient"] = lc.first.convert_to<std::string>() + "/" + lc.second.convert_to<std::string>();
  j["census"] = census;
  bool ok = true;
  if (formula) {
    auto r = check_closed_formula(d, cfg.max_degree / 2);
    j["formula"] = Json{{"checked", r.cases}, {"mismatches", r.failures}, {"first_mismatch", r.detail}};
    ok = ok && r.passed();
  }
  if (presentation) {
    auto table = MonoidTable::build(symmetric_setting(d, cfg.caps), std::max(cfg.max_degree, 6), cfg.caps);
    auto r = verify_presentation(d, table);
    j["presentation"] = presentation_json(r);
    ok = ok && r.ok();
  }
  emit(cfg, j);
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig &cfg, const SuiteOptions &base) {
  auto table = build_table(cfg);
  SuiteOptions o = base;
  o.seed = cfg.seed;
  o.workers = cfg.workers;
  auto results = run_property_suite(table, o);
  Json j;
  j["schema_version"] = schema_version;
  j["seed"] = cfg.seed;
  Json checks = Json::array();
  bool ok = true;
  for (const auto &r : results) {
    checks.push_back(Json{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"status", r.status()},
                          {"first_failure", r.detail}});
    ok = ok && (r.passed() || r.skipped());
    std::cerr << (r.passed() ? "PASS " : r.skipped() ? "SKIP " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.detail.empty()) std::cerr << ": " << r.detail;
    std::cerr << "\n";
  }
  j["checks"] = checks;
  j["passed"] = ok;
  emit(cfg, j);
  return ok ? 0 : 1;
}

void add_common(CLI::App *sub, RunConfig &cfg, bool needs_group) {
  auto *g = sub->add_option("--group", cfg.group, "group file (JSON)");
  if (needs_group) g->required()->check(CLI::ExistingFile);
  sub->add_option("--out", cfg.out, "write the result here instead of stdout");
  sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--max-orbit", cfg.caps.max_orbit_size, "largest braid orbit explored")->check(CLI::PositiveNumber);
  sub->add_option("--max-group-order", cfg.caps.max_group_order, "largest group enumerated")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-bruteforce", cfg.caps.max_bruteforce_tuples, "tuple prefixes scanned per degree")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-perm-degree", cfg.caps.max_degree, "largest permutation degree accepted")
      ->check(CLI::PositiveNumber);
}

void add_degree(CLI::App *sub, RunConfig &cfg) {
  sub->add_option("--max-degree,-n", cfg.max_degree, "largest degree tabulated")->check(CLI::Range(0, 64));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Components of Hurwitz spaces: braid orbits, component monoid, Hilbert functions, spectrum"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto *classes = app.add_subcommand("classes", "conjugacy classes of the group");
  add_common(classes, cfg, true);

  auto *subgroups = app.add_subcommand("subgroups", "D-generated subgroups with splitting data");
  add_common(subgroups, cfg, true);

  auto *components = app.add_subcommand("components", "components of the monoid up to a degree");
  add_common(components, cfg, true);
  add_degree(components, cfg);
  components->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::vector<SubgroupId> growth_ids;
  bool average = false;
  auto *growth = app.add_subcommand("growth", "Hilbert function growth per subgroup");
  add_common(growth, cfg, true);
  add_degree(growth, cfg);
  growth->add_option("--subgroup", growth_ids, "subgroup ids (default: all)");
  growth->add_flag("--average", average, "also estimate the average leading coefficient");

  int symmetric = 0;
  bool dot = false;
  auto *spectrum = app.add_subcommand("spectrum", "strata of the spectrum of the ring of components");
  add_common(spectrum, cfg, false);
  add_degree(spectrum, cfg);
  auto *sym_opt = spectrum->add_option("--symmetric", symmetric, "closed form for S_d with transpositions")
                      ->check(CLI::PositiveNumber);
  spectrum->get_option("--group")->excludes(sym_opt);
  spectrum->add_flag("--dot", dot, "emit the Proj incidence schematic in DOT");

  int d = 0;
  bool presentation = false, formula = false;
  auto *sym = app.add_subcommand("sym", "signature census for S_d with transpositions");
  add_common(sym, cfg, false);
  add_degree(sym, cfg);
  sym->add_option("--d", d, "degree of the symmetric group")->required()->check(CLI::Range(2, 32));
  sym->add_flag("--check-presentation", presentation, "verify the presentation on a table to degree 6");
  sym->add_flag("--check-formula", formula, "compare the closed Hilbert formula with the census");
  sym->add_flag("--dot", dot, "one representative multigraph per signature, in DOT");

  SuiteOptions suite;
  auto *verify = app.add_subcommand("verify", "property suite: braid invariants, lemmas, oracles, formulas");
  add_common(verify, cfg, true);
  add_degree(verify, cfg);
  verify->add_option("--seed", cfg.seed, "seed for the random samples");
  verify->add_option("--braid-samples", suite.braid_samples, "random (tuple, word) pairs");
  verify->add_option("--lemma-samples", suite.lemma_samples, "random tuples per lemma");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.caps.validate();
    if (*classes) return cmd_classes(cfg);
    if (*subgroups) return cmd_subgroups(cfg);
    if (*components) return cmd_components(cfg);
    if (*growth) return cmd_growth(cfg, growth_ids, average);
    if (*spectrum) return cmd_spectrum(cfg, symmetric, dot);
    if (*sym) return cmd_sym(cfg, d, presentation, formula, dot);
    if (*verify) return cmd_verify(cfg, suite);
  } catch (const CapExceeded &e) {
    std::cerr << Json{{"error", "cap_exceeded"}, {"cap", e.cap()}, {"limit", e.limit()}, {"message", e.what()}}.dump()
              << "\n";
    return 3;
  } catch (const InvalidArgument &e) {
    std::cerr << Json{{"error", "invalid_argument"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const InsufficientData &e) {
    std::cerr << Json{{"error", "insufficient_data"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
