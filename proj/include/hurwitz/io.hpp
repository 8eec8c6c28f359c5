#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitz/asymptotics.hpp"
#include "hurwitz/spectrum.hpp"
#include "hurwitz/symmetric.hpp"

namespace hurwitz {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Group file:
///   {"degree": d,
///    "generators": [[[1,2],[3,4]], ...],   cycles, 1-based (a string "(1 2)(3 4)" also works)
///    "classes": [[[1,2]], ...],            one representative per class of D
///    "xi": {"0": 2}}                       keys index "classes"; missing entries are 1
std::shared_ptr<const Setting> load_setting(const Json &j, const Caps &caps = {});
std::shared_ptr<const Setting> load_setting_file(const std::string &path, const Caps &caps = {});
Json setting_to_json(const Setting &s);

Permutation parse_permutation(const Json &j, std::size_t degree);
Json tuple_to_json(const GroupContext &group, const Tuple &t);
Tuple tuple_from_json(const GroupContext &group, const Json &j);

Json classes_json(const Setting &s);
Json subgroup_json(const Setting &s, SubgroupId id);
Json subgroups_json(const Setting &s);
Json components_json(const MonoidTable &table, const HilbertTable &hf);
/// degree,subgroup,count rows plus a total row per degree.
std::string hilbert_csv(const MonoidTable &table, const HilbertTable &hf);
Json growth_json(const Setting &s, const GrowthReport &r);
Json average_json(const AverageCoefficient &a);
Json spectrum_json(const MonoidTable &table, const SpectrumDescription &d);
Json symmetric_spectrum_json(const SymmetricSpectrum &s);
Json census_json(int d, int n, const std::vector<CensusEntry> &census);
Json presentation_json(const PresentationReport &r);

} // namespace hurwitz
