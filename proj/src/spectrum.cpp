#include "hurwitz/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

bool commute(const GroupContext &g, const SubgroupRecord &a, const SubgroupRecord &b) {
  for (ElemId x : a.generators)
    for (ElemId y : b.generators)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool meet_trivially(const SubgroupRecord &a, const SubgroupRecord &b) {
  std::vector<ElemId> common;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(common));
  return common.size() == 1;
}

// Set partitions of {0..r-1} as restricted growth strings, most parts first.
std::vector<std::vector<int>> set_partitions(int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(r, 0);
  auto rec = [&](auto &self, int i, int used) -> void {
    if (i == r) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= used && v < r; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(used, v + 1));
    }
  };
  if (r > 0) rec(rec, 0, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
    return *std::max_element(x.begin(), x.end()) > *std::max_element(y.begin(), y.end());
  });
  return out;
}

SubgroupId join_all(const Setting &s, const std::vector<SubgroupId> &ids) {
  SubgroupId acc = s.trivial_id();
  for (SubgroupId k : ids)
    acc = s.join(acc, k);
  return acc;
}

bool is_free(const Setting &s, const std::vector<SubgroupId> &family) {
  const auto &g = s.group();
  const std::size_t k = family.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!commute(g, s.subgroup(family[i]), s.subgroup(family[j]))) return false;
  // Every pair of disjoint nonempty index sets: label each index 0 (unused), 1 (A) or 2 (B).
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i)
    total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<SubgroupId> A, B;
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= 3) {
      if (c % 3 == 1) A.push_back(family[i]);
      if (c % 3 == 2) B.push_back(family[i]);
    }
    if (A.empty() || B.empty()) continue;
    if (!meet_trivially(s.subgroup(join_all(s, A)), s.subgroup(join_all(s, B)))) return false;
  }
  return true;
}

std::vector<int> support_vector(const MonoidTable &table, const std::vector<ComponentId> &gens,
                                SubgroupId h) {
  std::vector<int> v(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    v[i] = table.setting().contains(h, table.component(gens[i]).subgroup) ? 1 : 0;
  return v;
}

bool unique_per_degree(const HilbertTable &hf, SubgroupId h) {
  for (int n = 0; n <= hf.max_degree; ++n)
    if (hf.count(h, n) > 1) return false;
  return true;
}

} // namespace

const char *to_string(SubgroupKind k) {
  switch (k) {
  case SubgroupKind::Trivial: return "trivial";
  case SubgroupKind::NonSplitter: return "non-splitter";
  case SubgroupKind::FactoredSplitter: return "factored-splitter";
  case SubgroupKind::Unresolved: return "unresolved";
  }
  return "?";
}

const char *to_string(GammaStatus s) {
  switch (s) {
  case GammaStatus::Origin: return "origin";
  case GammaStatus::Described: return "described";
  case GammaStatus::LineOnly: return "containment only";
  }
  return "?";
}

Classification classify_subgroup(const MonoidTable &table, SubgroupId hid) {
  const auto &s = table.setting();
  const auto &g = s.group();
  const auto &h = s.subgroup(hid);
  Classification out;
  out.subgroup = hid;
  if (h.is_trivial()) {
    out.kind = SubgroupKind::Trivial;
    return out;
  }
  if (h.is_non_splitter()) {
    out.kind = SubgroupKind::NonSplitter;
    return out;
  }
  out.kind = SubgroupKind::Unresolved;
  if (!h.omega) return out;

  // Groups of the non-factorizable components inside H, linked when they
  // fail to commute or meet nontrivially.
  std::vector<SubgroupId> groups;
  for (ComponentId p : table.non_factorizable()) {
    SubgroupId k = table.component(p).subgroup;
    if (s.contains(hid, k) && std::find(groups.begin(), groups.end(), k) == groups.end())
      groups.push_back(k);
  }
  const std::size_t m = groups.size();
  std::vector<std::size_t> block(m);
  std::iota(block.begin(), block.end(), 0);
  auto root = [&](std::size_t x) {
    while (block[x] != x)
      x = block[x];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto &a = s.subgroup(groups[i]);
      const auto &b = s.subgroup(groups[j]);
      if (!commute(g, a, b) || !meet_trivially(a, b)) block[root(j)] = root(i);
    }
  std::map<std::size_t, std::vector<SubgroupId>> pieces;
  for (std::size_t i = 0; i < m; ++i)
    pieces[root(i)].push_back(groups[i]);
  std::vector<SubgroupId> atoms;
  for (const auto &[r, members] : pieces)
    atoms.push_back(join_all(s, members));
  const int r = static_cast<int>(atoms.size());
  if (r < 2 || r > 10) return out;

  for (const auto &part : set_partitions(r)) {
    int k = *std::max_element(part.begin(), part.end()) + 1;
    if (k < 2) continue;
    std::vector<std::vector<SubgroupId>> grouped(k);
    for (int i = 0; i < r; ++i)
      grouped[part[i]].push_back(atoms[i]);
    std::vector<SubgroupId> family;
    bool ok = true;
    for (const auto &grp : grouped) {
      SubgroupId f = join_all(s, grp);
      const auto &rec = s.subgroup(f);
      if (!rec.d_generated || rec.is_trivial()) {
        ok = false;
        break;
      }
      family.push_back(f);
    }
    if (!ok || join_all(s, family) != hid || !is_free(s, family)) continue;
    std::sort(family.begin(), family.end());
    out.kind = SubgroupKind::FactoredSplitter;
    out.factors = family;
    break;
  }

  const auto &cd = s.classes();
  if (out.kind == SubgroupKind::FactoredSplitter && cd.size() == 1 && cd.xi[0] == 1) {
    bool crit = true;
    for (std::size_t i = 0; i < out.factors.size() && crit; ++i) {
      std::vector<SubgroupId> others;
      for (std::size_t j = 0; j < out.factors.size(); ++j)
        if (j != i) others.push_back(out.factors[j]);
      crit = meet_trivially(s.subgroup(out.factors[i]), s.subgroup(join_all(s, others)));
    }
    std::vector<ElemId> in_h, in_parts;
    for (ElemId x : g.classes()[cd.classes[0]]) {
      if (h.contains(x)) in_h.push_back(x);
      int hits = 0;
      for (SubgroupId f : out.factors)
        hits += s.subgroup(f).contains(x) ? 1 : 0;
      if (hits > 1) crit = false;
      if (hits == 1) in_parts.push_back(x);
    }
    out.criterion = crit && in_h == in_parts;
  }
  return out;
}

Stratum gamma_description(const MonoidTable &table, const HilbertTable &hf, SubgroupId hid) {
  const auto &s = table.setting();
  const auto gens = table.non_factorizable();
  Stratum st;
  st.subgroup = hid;
  st.classification = classify_subgroup(table, hid);
  st.omega = s.subgroup(hid).omega;
  st.uniqueness_verified_to = hf.max_degree;
  for (ComponentId p : gens)
    st.span.degrees.push_back(table.component(p).degree);
  st.span.strict = true;

  switch (st.classification.kind) {
  case SubgroupKind::Trivial:
    st.status = GammaStatus::Origin;
    return st;
  case SubgroupKind::NonSplitter:
    st.span.basis.push_back(support_vector(table, gens, hid));
    st.status = unique_per_degree(hf, hid) ? GammaStatus::Described : GammaStatus::LineOnly;
    return st;
  case SubgroupKind::FactoredSplitter: {
    bool all_good = true;
    for (SubgroupId f : st.classification.factors)
      all_good = all_good && s.subgroup(f).is_non_splitter() && unique_per_degree(hf, f);
    if (all_good) {
      for (SubgroupId f : st.classification.factors)
        st.span.basis.push_back(support_vector(table, gens, f));
      st.status = GammaStatus::Described;
    } else {
      st.span.basis.push_back(support_vector(table, gens, hid));
      st.status = GammaStatus::LineOnly;
    }
    return st;
  }
  case SubgroupKind::Unresolved:
    st.span.basis.push_back(support_vector(table, gens, hid));
    st.status = GammaStatus::LineOnly;
    return st;
  }
  return st;
}

SpectrumDescription spec_description(const MonoidTable &table) {
  const auto &s = table.setting();
  const auto hf = hilbert_table(table);
  SpectrumDescription out;
  out.generators = table.non_factorizable();
  for (ComponentId p : out.generators)
    out.generator_degrees.push_back(table.component(p).degree);
  out.max_degree = table.max_degree();
  out.generators_complete = non_factorizable(table).complete;
  out.origin = gamma_description(table, hf, s.trivial_id());
  int max_omega = 0;
  bool complete = out.generators_complete;
  for (SubgroupId h = 0; h < s.sub_count(); ++h) {
    if (h == s.trivial_id()) continue;
    out.strata.push_back(gamma_description(table, hf, h));
    const auto &st = out.strata.back();
    if (st.omega) max_omega = std::max(max_omega, *st.omega);
    if (st.status != GammaStatus::Described) complete = false;
  }
  out.krull_dimension = max_omega + 1;
  out.complete = complete;
  return out;
}

std::vector<std::size_t> dimension_profile(const SpectrumDescription &s) {
  std::vector<std::size_t> prof(1, 1);
  for (const auto &st : s.strata) {
    std::size_t d = st.span.dimension();
    if (prof.size() <= d) prof.resize(d + 1, 0);
    ++prof[d];
  }
  return prof;
}

std::size_t check_relations(const MonoidTable &table, const SpectrumDescription &s, int max_degree) {
  const auto &gens = s.generators;
  const std::size_t N = gens.size();
  max_degree = std::min(max_degree, table.max_degree());
  // Monomials as multiplicity vectors, grouped by the component they multiply to.
  std::map<ComponentId, std::vector<std::vector<int>>> classes;
  std::vector<int> mult(N, 0);
  auto rec = [&](auto &self, std::size_t i, int deg, ComponentId acc) -> void {
    if (i == N) {
      if (deg > 0) classes[acc].push_back(mult);
      return;
    }
    self(self, i + 1, deg, acc);
    int d = s.generator_degrees[i];
    int added = 0;
    ComponentId cur = acc;
    while (deg + (added + 1) * d <= max_degree) {
      ++added;
      cur = table.multiply(cur, gens[i]);
      mult[i] = added;
      self(self, i + 1, deg + added * d, cur);
    }
    mult[i] = 0;
  };
  rec(rec, 0, 0, MonoidTable::identity());

  std::size_t violations = 0;
  auto check = [&](const Stratum &st) {
    const auto &basis = st.span.basis;
    auto value = [&](const std::vector<int> &mono) -> std::optional<std::vector<long long>> {
      std::vector<long long> e(basis.size(), 0);
      for (std::size_t i = 0; i < N; ++i) {
        if (!mono[i]) continue;
        int owner = -1;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (basis[j][i]) owner = static_cast<int>(j);
        if (owner < 0) return std::nullopt;
        e[owner] += static_cast<long long>(mono[i]) * st.span.degrees[i];
      }
      return e;
    };
    for (const auto &[prod, monos] : classes) {
      auto v0 = value(monos.front());
      for (std::size_t k = 1; k < monos.size(); ++k)
        if (value(monos[k]) != v0) {
          ++violations;
          break;
        }
    }
  };
  for (const auto &st : s.strata)
    check(st);
  return violations;
}

std::vector<std::pair<int, int>> SymmetricSpectrum::generators() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out.emplace_back(i, j);
  return out;
}

std::vector<int> SymmetricSpectrum::basis_vector(std::uint32_t block) const {
  std::vector<int> v;
  for (auto [i, j] : generators())
    v.push_back((block >> i & 1u) && (block >> j & 1u) ? 1 : 0);
  return v;
}

std::vector<std::size_t> SymmetricSpectrum::dimension_profile() const {
  std::vector<std::size_t> prof(1, 1);
  for (const auto &st : strata) {
    if (prof.size() <= st.size()) prof.resize(st.size() + 1, 0);
    ++prof[st.size()];
  }
  return prof;
}

SymmetricSpectrum spec_sd(int d, const Caps &caps) {
  if (d < 2) throw InvalidArgument("spec_sd needs d >= 2");
  if (d > caps.max_symmetric_degree)
    throw CapExceeded("max_symmetric_degree", caps.max_symmetric_degree,
                      "symmetric degree " + std::to_string(d) + " too large");
  SymmetricSpectrum out;
  out.d = d;
  out.krull_dimension = d / 2;
  // Set partitions of {0..d-1}; the blocks of size >= 2 form a family.
  std::vector<std::uint32_t> blocks;
  auto rec = [&](auto &self, int i) -> void {
    if (i == d) {
      std::vector<std::uint32_t> fam;
      for (auto b : blocks)
        if (std::popcount(b) >= 2) fam.push_back(b);
      if (!fam.empty()) {
        std::sort(fam.begin(), fam.end());
        out.strata.push_back(std::move(fam));
      }
      return;
    }
    for (std::size_t b = 0, nb = blocks.size(); b < nb; ++b) {
      blocks[b] |= 1u << i;
      self(self, i + 1);
      blocks[b] &= ~(1u << i);
    }
    blocks.push_back(1u << i);
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  std::sort(out.strata.begin(), out.strata.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

std::string block_label(std::uint32_t b) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1u) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

} // namespace

std::string proj_dot(const SymmetricSpectrum &s) {
  std::ostringstream os;
  os << "graph proj_S" << s.d << " {\n";
  for (const auto &st : s.strata)
    if (st.size() == 1) os << "  \"" << block_label(st[0]) << "\";\n";
  std::size_t hyper = 0;
  for (const auto &st : s.strata) {
    if (st.size() == 2) {
      os << "  \"" << block_label(st[0]) << "\" -- \"" << block_label(st[1]) << "\";\n";
    } else if (st.size() > 2) {
      os << "  h" << hyper << " [shape=box,label=\"\"];\n";
      for (auto b : st)
        os << "  h" << hyper << " -- \"" << block_label(b) << "\";\n";
      ++hyper;
    }
  }
  os << "}\n";
  return os.str();
}

std::string proj_dot(const SpectrumDescription &s, const MonoidTable &table) {
  const auto &set = table.setting();
  auto label = [&](SubgroupId h) {
    return "H" + std::to_string(h) + " (order " + std::to_string(set.subgroup(h).order()) + ")";
  };
  std::ostringstream os;
  os << "graph proj {\n";
  for (const auto &st : s.strata)
    if (st.span.dimension() == 1) os << "  \"" << label(st.subgroup) << "\";\n";
  std::size_t hyper = 0;
  for (const auto &st : s.strata) {
    const auto &f = st.classification.factors;
    if (st.status != GammaStatus::Described || f.size() < 2) continue;
    if (f.size() == 2) {
      os << "  \"" << label(f[0]) << "\" -- \"" << label(f[1]) << "\" [label=\"H" << st.subgroup
         << "\"];\n";
    } else {
      os << "  h" << hyper << " [shape=box,label=\"H" << st.subgroup << "\"];\n";
      for (SubgroupId x : f)
        os << "  h" << hyper << " -- \"" << label(x) << "\";\n";
      ++hyper;
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace hurwitz
