// Python module _core. Reports cross the boundary as JSON text; the package
// turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/verify.hpp"

namespace py = pybind11;
using namespace hurwitz;

namespace {

struct PyGroup {
  std::shared_ptr<const Setting> setting;
};

struct PyTable {
  std::shared_ptr<const MonoidTable> table;
  std::shared_ptr<const HilbertTable> hf;
};

Caps make_caps(const py::dict &overrides) {
  Caps c = Caps::from_environment();
  for (auto [k, v] : overrides) {
    auto key = py::cast<std::string>(k);
    if (key == "max_degree") c.max_degree = py::cast<int>(v);
    else if (key == "max_group_order") c.max_group_order = py::cast<std::uint64_t>(v);
    else if (key == "max_orbit_size") c.max_orbit_size = py::cast<std::uint64_t>(v);
    else if (key == "max_bruteforce_tuples") c.max_bruteforce_tuples = py::cast<std::uint64_t>(v);
    else if (key == "max_symmetric_degree") c.max_symmetric_degree = py::cast<int>(v);
    else throw InvalidArgument("unknown cap '" + key + "'");
  }
  c.validate();
  return c;
}

Tuple to_tuple(const Setting &s, const std::vector<std::string> &entries) {
  Tuple t;
  for (const auto &e : entries)
    t.push_back(s.group().id_of(Permutation::parse(e, s.group().degree())));
  return t;
}

std::vector<std::string> from_tuple(const Setting &s, const Tuple &t) {
  std::vector<std::string> out;
  for (ElemId x : t)
    out.push_back(s.group().element(x).to_string());
  return out;
}

std::string big(const BigInt &x) { return x.convert_to<std::string>(); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Components of Hurwitz spaces: braid orbits, component monoid, Hilbert functions, spectrum";

  auto base = py::register_exception<Error>(m, "HurwitzError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<InsufficientData>(m, "InsufficientData", base.ptr());

  py::class_<PyGroup>(m, "Group")
      .def_static(
          "load",
          [](const std::string &path, const py::dict &caps) { return PyGroup{load_setting_file(path, make_caps(caps))}; },
          py::arg("path"), py::arg("caps") = py::dict())
      .def_static(
          "loads",
          [](const std::string &text, const py::dict &caps) {
            Json j;
            try {
              j = Json::parse(text);
            } catch (const Json::exception &e) {
              throw InvalidArgument(std::string("malformed group JSON: ") + e.what());
            }
            return PyGroup{load_setting(j, make_caps(caps))};
          },
          py::arg("text"), py::arg("caps") = py::dict())
      .def_static(
          "symmetric", [](int d, const py::dict &caps) { return PyGroup{symmetric_setting(d, make_caps(caps))}; },
          py::arg("d"), py::arg("caps") = py::dict())
      .def_property_readonly("order", [](const PyGroup &g) { return g.setting->group().order(); })
      .def_property_readonly("degree", [](const PyGroup &g) { return g.setting->group().degree(); })
      .def_property_readonly("whole_group_id", [](const PyGroup &g) { return g.setting->whole_group_id(); })
      .def("to_json", [](const PyGroup &g) { return setting_to_json(*g.setting).dump(); })
      .def("classes_json", [](const PyGroup &g) { return classes_json(*g.setting).dump(); })
      .def("subgroups_json", [](const PyGroup &g) { return subgroups_json(*g.setting).dump(); })
      .def(
          "generated",
          [](const PyGroup &g, const std::vector<std::string> &gens) {
            return g.setting->generated(to_tuple(*g.setting, gens));
          },
          py::arg("generators"))
      .def(
          "product",
          [](const PyGroup &g, const std::vector<std::string> &t) {
            return g.setting->group().element(product(g.setting->group(), to_tuple(*g.setting, t))).to_string();
          },
          py::arg("entries"))
      .def(
          "braid",
          [](const PyGroup &g, const std::vector<std::string> &t, const std::vector<int> &word) {
            return from_tuple(*g.setting, apply_word(g.setting->group(), word, to_tuple(*g.setting, t)));
          },
          py::arg("entries"), py::arg("word"))
      .def(
          "orbit",
          [](const PyGroup &g, const std::vector<std::string> &t, const py::dict &caps) {
            auto tuple = to_tuple(*g.setting, t);
            auto c = make_caps(caps);
            OrbitRecord r;
            {
              py::gil_scoped_release release;
              r = orbit(g.setting->group(), tuple, c);
            }
            py::dict out;
            out["size"] = r.size;
            out["canonical"] = from_tuple(*g.setting, r.canonical);
            out["product"] = g.setting->group().element(r.product).to_string();
            out["subgroup_order"] = r.subgroup_order;
            out["class_counts"] = r.class_counts;
            return out;
          },
          py::arg("entries"), py::arg("caps") = py::dict())
      .def(
          "equivalent",
          [](const PyGroup &g, const std::vector<std::string> &a, const std::vector<std::string> &b,
             const py::dict &caps) {
            auto ta = to_tuple(*g.setting, a), tb = to_tuple(*g.setting, b);
            auto c = make_caps(caps);
            py::gil_scoped_release release;
            return equivalent(g.setting->group(), ta, tb, c);
          },
          py::arg("a"), py::arg("b"), py::arg("caps") = py::dict());

  py::class_<PyTable>(m, "Table")
      .def(py::init([](const PyGroup &g, int max_degree, const py::dict &caps) {
             auto c = make_caps(caps);
             py::gil_scoped_release release;
             auto t = std::make_shared<const MonoidTable>(MonoidTable::build(g.setting, max_degree, c));
             auto hf = std::make_shared<const HilbertTable>(hilbert_table(*t));
             return PyTable{t, hf};
           }),
           py::arg("group"), py::arg("max_degree"), py::arg("caps") = py::dict())
      .def_property_readonly("max_degree", [](const PyTable &t) { return t.table->max_degree(); })
      .def_property_readonly("size", [](const PyTable &t) { return t.table->size(); })
      .def_property_readonly("group", [](const PyTable &t) { return PyGroup{t.table->setting_ptr()}; })
      .def(
          "hilbert",
          [](const PyTable &t, SubgroupId h, int n) {
            if (h >= t.table->setting().sub_count()) throw InvalidArgument("no D-generated subgroup with id " + std::to_string(h));
            if (n < 0 || n > t.table->max_degree()) throw InvalidArgument("degree outside the table");
            return t.hf->count(h, n);
          },
          py::arg("subgroup"), py::arg("n"))
      .def(
          "component_of",
          [](const PyTable &t, const std::vector<std::string> &entries) -> std::optional<ComponentId> {
            return t.table->find(to_tuple(t.table->setting(), entries));
          },
          py::arg("entries"))
      .def("multiply", [](const PyTable &t, ComponentId a, ComponentId b) { return t.table->multiply(a, b); })
      .def("factorization", [](const PyTable &t, ComponentId c) { return t.table->factorization(c); })
      .def("non_factorizable", [](const PyTable &t) { return t.table->non_factorizable(); })
      .def("components_json", [](const PyTable &t) { return components_json(*t.table, *t.hf).dump(); })
      .def("hilbert_csv", [](const PyTable &t) { return hilbert_csv(*t.table, *t.hf); })
      .def(
          "growth_json",
          [](const PyTable &t, SubgroupId h) {
            if (h >= t.table->setting().sub_count()) throw InvalidArgument("no D-generated subgroup with id " + std::to_string(h));
            return growth_json(t.table->setting(), stabilization_report(*t.table, *t.hf, h)).dump();
          },
          py::arg("subgroup"))
      .def(
          "average_json",
          [](const PyTable &t, SubgroupId h, double tolerance) {
            if (h >= t.table->setting().sub_count()) throw InvalidArgument("no D-generated subgroup with id " + std::to_string(h));
            auto cls = classify_subgroup(*t.table, h);
            return average_json(average_leading_coefficient(*t.table, *t.hf, h, cls.factors, tolerance)).dump();
          },
          py::arg("subgroup"), py::arg("tolerance") = 0.25)
      .def("spectrum_json", [](const PyTable &t) { return spectrum_json(*t.table, spec_description(*t.table)).dump(); })
      .def(
          "verify_json",
          [](const PyTable &t, std::uint64_t seed, std::size_t braid_samples, std::size_t lemma_samples, unsigned workers) {
            SuiteOptions o;
            o.seed = seed;
            o.braid_samples = braid_samples;
            o.lemma_samples = lemma_samples;
            o.workers = std::max(1u, workers);
            std::vector<CheckResult> results;
            {
              py::gil_scoped_release release;
              results = run_property_suite(*t.table, o);
            }
            Json checks = Json::array();
            for (const auto &r : results)
              checks.push_back(Json{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures},
                                    {"status", r.status()}, {"first_failure", r.detail}});
            return checks.dump();
          },
          py::arg("seed") = 1729, py::arg("braid_samples") = 1000, py::arg("lemma_samples") = 200,
          py::arg("workers") = 1)
      .def(
          "presentation_json",
          [](const PyTable &t) {
            auto d = symmetric_degree(t.table->setting());
            if (!d) throw InvalidArgument("the presentation check needs S_d with transpositions and xi = 1");
            return presentation_json(verify_presentation(*d, *t.table)).dump();
          });

  m.def(
      "census_json",
      [](int d, int n, const py::dict &caps) { return census_json(d, n, component_census_sd(d, n, make_caps(caps))).dump(); },
      py::arg("d"), py::arg("n"), py::arg("caps") = py::dict());
  m.def(
      "census_full_group", [](int d, int n, const py::dict &caps) { return census_full_group(d, n, make_caps(caps)); },
      py::arg("d"), py::arg("n"), py::arg("caps") = py::dict());
  m.def(
      "hf_closed_form", [](int d, long long m) { return big(hf_closed_form(d, m)); }, py::arg("d"), py::arg("m"));
  m.def(
      "hf_leading_coefficient",
      [](int d) {
        auto lc = hf_leading_coefficient(d);
        return std::make_pair(big(lc.first), big(lc.second));
      },
      py::arg("d"));
  m.def(
      "symmetric_spectrum_json",
      [](int d, const py::dict &caps) { return symmetric_spectrum_json(spec_sd(d, make_caps(caps))).dump(); },
      py::arg("d"), py::arg("caps") = py::dict());
  m.attr("schema_version") = schema_version;
}
