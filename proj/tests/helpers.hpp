#pragma once

#include <string>

#include "hurwitz/io.hpp"

namespace hurwitz::test {

inline std::shared_ptr<const Setting> fixture(const std::string &name) {
  return load_setting_file(std::string(HURWITZ_DATA_DIR) + "/" + name + ".json");
}

inline ElemId el(const GroupContext &g, const std::string &cycles) {
  return g.id_of(Permutation::parse(cycles, g.degree()));
}

inline Tuple tup(const GroupContext &g, std::initializer_list<const char *> xs) {
  Tuple t;
  for (const char *x : xs)
    t.push_back(el(g, x));
  return t;
}

inline SubgroupId sub(const Setting &s, std::initializer_list<const char *> gens) {
  return s.generated(tup(s.group(), gens));
}

} // namespace hurwitz::test
