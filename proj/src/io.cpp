#include "hurwitz/io.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::string big(const BigInt &x) { return x.convert_to<std::string>(); }

Json cycles_json(const Permutation &p) {
  Json out = Json::array();
  for (const auto &c : p.cycles()) {
    Json cyc = Json::array();
    for (int x : c)
      cyc.push_back(x + 1);
    out.push_back(cyc);
  }
  return out;
}

Json span_json(const WeightedSpan &s) {
  return Json{{"basis", s.basis}, {"degrees", s.degrees}, {"strict", s.strict}, {"dimension", s.dimension()}};
}

Json block_json(std::uint32_t b) {
  Json out = Json::array();
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1u) out.push_back(i + 1);
  return out;
}

} // namespace

Permutation parse_permutation(const Json &j, std::size_t degree) {
  if (j.is_string()) return Permutation::parse(j.get<std::string>(), degree);
  if (!j.is_array()) throw InvalidArgument("a permutation is a cycle string or a list of cycles");
  std::vector<std::vector<int>> cycles;
  for (const auto &c : j) {
    if (!c.is_array()) throw InvalidArgument("a cycle is a list of 1-based points");
    std::vector<int> cyc;
    for (const auto &x : c) {
      if (!x.is_number_integer()) throw InvalidArgument("cycle entries must be integers");
      int v = x.get<int>();
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw InvalidArgument("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cyc.push_back(v - 1);
    }
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::shared_ptr<const Setting> load_setting(const Json &j, const Caps &caps) {
  if (!j.is_object()) throw InvalidArgument("group file must hold a JSON object");
  for (const char *key : {"degree", "generators", "classes"})
    if (!j.contains(key)) throw InvalidArgument(std::string("group file lacks \"") + key + "\"");
  if (!j["degree"].is_number_integer()) throw InvalidArgument("\"degree\" must be an integer");
  int d = j["degree"].get<int>();
  if (d < 1) throw InvalidArgument("\"degree\" must be positive");
  if (d > caps.max_degree)
    throw CapExceeded("max_degree", static_cast<std::uint64_t>(caps.max_degree), "permutation degree too large");
  std::vector<Permutation> gens;
  for (const auto &g : j["generators"])
    gens.push_back(parse_permutation(g, d));
  if (gens.empty()) throw InvalidArgument("no generators");
  GroupContext group(std::move(gens), caps);
  std::vector<std::size_t> classes;
  for (const auto &c : j["classes"]) {
    auto id = group.find(parse_permutation(c, d));
    if (!id) throw InvalidArgument("class representative " + c.dump() + " is not in the group");
    classes.push_back(group.class_of(*id));
  }
  std::vector<int> xi(classes.size(), 1);
  if (j.contains("xi")) {
    for (const auto &[k, v] : j["xi"].items()) {
      std::size_t idx;
      try {
        idx = std::stoul(k);
      } catch (const std::exception &) {
        throw InvalidArgument("xi key \"" + k + "\" is not a class index");
      }
      if (idx >= xi.size()) throw InvalidArgument("xi key " + k + " has no matching class");
      if (!v.is_number_integer()) throw InvalidArgument("xi values must be integers");
      xi[idx] = v.get<int>();
    }
  }
  auto cd = ClassData::make(group, std::move(classes), std::move(xi));
  return Setting::make(std::move(group), std::move(cd));
}

std::shared_ptr<const Setting> load_setting_file(const std::string &path, const Caps &caps) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw InvalidArgument(path + ": " + e.what());
  }
  return load_setting(j, caps);
}

Json setting_to_json(const Setting &s) {
  const auto &g = s.group();
  Json j;
  j["degree"] = g.degree();
  j["generators"] = Json::array();
  for (const auto &p : g.generators())
    j["generators"].push_back(cycles_json(p));
  j["classes"] = Json::array();
  Json xi = Json::object();
  for (std::size_t k = 0; k < s.classes().size(); ++k) {
    j["classes"].push_back(cycles_json(g.element(g.classes()[s.classes().classes[k]].front())));
    xi[std::to_string(k)] = s.classes().xi[k];
  }
  j["xi"] = xi;
  return j;
}

Json tuple_to_json(const GroupContext &group, const Tuple &t) {
  Json out = Json::array();
  for (ElemId x : t)
    out.push_back(group.element(x).to_string());
  return out;
}

Tuple tuple_from_json(const GroupContext &group, const Json &j) {
  Tuple t;
  for (const auto &x : j)
    t.push_back(group.id_of(parse_permutation(x, group.degree())));
  return t;
}

Json classes_json(const Setting &s) {
  const auto &g = s.group();
  Json j;
  j["schema_version"] = schema_version;
  j["order"] = g.order();
  j["exponent"] = g.exponent();
  j["derived_order"] = g.derived_subgroup().size();
  j["classes"] = Json::array();
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const auto &cls = g.classes()[c];
    Json e{{"index", c},
           {"size", cls.size()},
           {"representative", g.element(cls.front()).to_string()},
           {"element_order", g.element_order(cls.front())}};
    auto it = std::find(s.classes().classes.begin(), s.classes().classes.end(), c);
    if (it != s.classes().classes.end()) e["xi"] = s.classes().xi[it - s.classes().classes.begin()];
    j["classes"].push_back(e);
  }
  return j;
}

Json subgroup_json(const Setting &s, SubgroupId id) {
  const auto &h = s.subgroup(id);
  const auto &g = s.group();
  Json j{{"id", id}, {"order", h.order()}};
  Json gens = Json::array();
  for (ElemId x : h.generators)
    gens.push_back(g.element(x).to_string());
  j["generators"] = gens;
  Json dh = Json::array();
  for (std::size_t k = 0; k < h.dh_classes.size(); ++k)
    dh.push_back(Json{{"representative", g.element(h.dh_classes[k].front()).to_string()},
                      {"size", h.dh_classes[k].size()},
                      {"tau", h.tau[k]}});
  j["d_h"] = dh;
  j["omega"] = h.omega ? Json(*h.omega) : Json(nullptr);
  j["non_splitter"] = h.is_non_splitter();
  j["abelianization_order"] = h.abelianization_order();
  return j;
}

Json subgroups_json(const Setting &s) {
  Json j;
  j["schema_version"] = schema_version;
  j["count"] = s.sub_count();
  j["subgroups"] = Json::array();
  for (const auto *h : s.d_generated_subgroups())
    j["subgroups"].push_back(subgroup_json(s, h->id));
  return j;
}

Json components_json(const MonoidTable &table, const HilbertTable &hf) {
  const auto &s = table.setting();
  Json j;
  j["schema_version"] = schema_version;
  j["max_degree"] = table.max_degree();
  j["bruteforce_degree"] = table.bruteforce_degree();
  Json methods = Json::array();
  for (int n = 0; n <= table.max_degree(); ++n)
    methods.push_back(table.method(n) == DegreeMethod::BruteForce ? "bruteforce" : "closure");
  j["methods"] = methods;
  j["totals"] = hf.totals;
  Json counts = Json::object();
  for (const auto &[h, row] : hf.counts)
    counts[std::to_string(h)] = row;
  j["hilbert"] = counts;
  auto nf = non_factorizable(table);
  j["non_factorizable"] = Json{{"components", nf.components},
                               {"observed_max_degree", nf.observed_max_degree},
                               {"bound", big(nf.bounds.exponent_bound)},
                               {"refined_bound", nf.bounds.refined_bound ? Json(*nf.bounds.refined_bound) : Json(nullptr)},
                               {"complete", nf.complete}};
  Json comps = Json::array();
  for (ComponentId c = 0; c < table.size(); ++c) {
    const auto &comp = table.component(c);
    Json e{{"id", c},
           {"degree", comp.degree},
           {"subgroup", comp.subgroup},
           {"subgroup_order", s.subgroup(comp.subgroup).order()},
           {"canonical", tuple_to_json(s.group(), comp.canonical)},
           {"mu", comp.mu},
           {"non_factorizable", comp.non_factorizable}};
    if (comp.orbit_size) e["orbit_size"] = *comp.orbit_size;
    if (comp.split) e["split"] = {comp.split->first, comp.split->second};
    comps.push_back(e);
  }
  j["components"] = comps;
  return j;
}

std::string hilbert_csv(const MonoidTable &table, const HilbertTable &hf) {
  std::ostringstream os;
  os << "degree,subgroup,subgroup_order,count\n";
  for (int n = 0; n <= hf.max_degree; ++n) {
    for (const auto &[h, row] : hf.counts)
      if (row[n]) os << n << "," << h << "," << table.setting().subgroup(h).order() << "," << row[n] << "\n";
    os << n << ",total,," << hf.totals[n] << "\n";
  }
  return os.str();
}

Json growth_json(const Setting &s, const GrowthReport &r) {
  Json j{{"subgroup", r.subgroup},
         {"order", s.subgroup(r.subgroup).order()},
         {"omega", r.omega ? Json(*r.omega) : Json(nullptr)},
         {"window", r.window},
         {"non_splitter", r.non_splitter},
         {"observed_period", r.observed_period},
         {"per_map_max", r.per_map_max},
         {"upper_sandwich", r.upper_sandwich},
         {"census_consistent", r.census_consistent}};
  if (r.non_splitter) {
    j["period"] = r.period;
    j["threshold"] = r.threshold;
    j["value"] = r.value;
    j["class_thresholds"] = r.class_thresholds;
    j["off_progression"] = r.off_progression;
  } else {
    j["ratio_min"] = r.ratio_min;
    j["ratio_max"] = r.ratio_max;
    j["ratio_degrees"] = r.ratio_degrees;
  }
  return j;
}

Json average_json(const AverageCoefficient &a) {
  return Json{{"n", a.n},
              {"s", a.s},
              {"cumulative", big(a.cumulative)},
              {"abelianization_order", a.abelianization_order},
              {"estimate", a.estimate},
              {"reference", a.reference},
              {"relative_error", a.relative_error},
              {"consistent", a.consistent}};
}

Json spectrum_json(const MonoidTable &table, const SpectrumDescription &d) {
  const auto &s = table.setting();
  Json j;
  j["schema_version"] = schema_version;
  j["max_degree"] = d.max_degree;
  j["generators"] = d.generators;
  j["generator_degrees"] = d.generator_degrees;
  j["generators_complete"] = d.generators_complete;
  j["krull_dimension"] = d.krull_dimension;
  j["complete"] = d.complete;
  j["origin"] = Json{{"subgroup", d.origin.subgroup}, {"status", to_string(d.origin.status)}};
  Json strata = Json::array();
  for (const auto &st : d.strata) {
    Json e{{"subgroup", st.subgroup},
           {"order", s.subgroup(st.subgroup).order()},
           {"kind", to_string(st.classification.kind)},
           {"factors", st.classification.factors},
           {"status", to_string(st.status)},
           {"omega", st.omega ? Json(*st.omega) : Json(nullptr)},
           {"span", span_json(st.span)}};
    if (st.classification.criterion) e["criterion"] = *st.classification.criterion;
    if (st.classification.kind == SubgroupKind::NonSplitter)
      e["uniqueness_verified_to"] = st.uniqueness_verified_to;
    strata.push_back(e);
  }
  j["strata"] = strata;
  j["dimension_profile"] = dimension_profile(d);
  return j;
}

Json symmetric_spectrum_json(const SymmetricSpectrum &s) {
  Json j;
  j["schema_version"] = schema_version;
  j["d"] = s.d;
  Json gens = Json::array();
  for (auto [a, b] : s.generators())
    gens.push_back({a + 1, b + 1});
  j["generators"] = gens;
  j["krull_dimension"] = s.krull_dimension;
  j["origin"] = Json{{"blocks", Json::array()}, {"dimension", 0}};
  j["stratum_count"] = s.strata.size();
  Json strata = Json::array();
  for (const auto &st : s.strata) {
    Json blocks = Json::array();
    for (auto b : st)
      blocks.push_back(block_json(b));
    strata.push_back(Json{{"blocks", blocks}, {"dimension", st.size()}});
  }
  j["strata"] = strata;
  auto profile = s.dimension_profile();
  j["dimension_profile"] = profile;
  j["proj"] = Json{{"points", profile.size() > 1 ? profile[1] : 0}, {"lines", profile.size() > 2 ? profile[2] : 0}};
  return j;
}

Json census_json(int d, int n, const std::vector<CensusEntry> &census) {
  Json j;
  j["schema_version"] = schema_version;
  j["d"] = d;
  j["degree"] = n;
  j["count"] = census.size();
  Json entries = Json::array();
  for (const auto &e : census) {
    Json blocks = Json::array();
    for (std::size_t k = 0; k < e.signature.blocks.size(); ++k)
      blocks.push_back(Json{{"vertices", block_json(e.signature.blocks[k])}, {"edges", e.signature.edges[k]}});
    Json sub = Json::array();
    for (auto b : e.subgroup_blocks)
      sub.push_back(block_json(b));
    entries.push_back(Json{{"signature", blocks}, {"subgroup_blocks", sub}});
  }
  j["components"] = entries;
  return j;
}

Json presentation_json(const PresentationReport &r) {
  return Json{{"d", r.d},
              {"max_degree", r.max_degree},
              {"generators_ok", r.generators_ok},
              {"relations_checked", r.relations_checked},
              {"relations_failed", r.relations_failed},
              {"monomials", r.monomials},
              {"signature_classes", r.signature_classes},
              {"disconnected_classes", r.disconnected_classes},
              {"key_mismatches", r.key_mismatches},
              {"ok", r.ok()}};
}

} // namespace hurwitz
