#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/asymptotics.hpp"

namespace hurwitz {

enum class SubgroupKind { Trivial, NonSplitter, FactoredSplitter, Unresolved };

const char *to_string(SubgroupKind k);

struct Classification {
  SubgroupId subgroup = 0;
  SubgroupKind kind = SubgroupKind::Unresolved;
  /// Free factor family (factored splitters only), finest first found.
  std::vector<SubgroupId> factors;
  /// For |D| = 1 and xi = 1: the disjoint-union criterion holds for `factors`.
  std::optional<bool> criterion;
};

/// Needs the table to hold every non-factorizable component contained in H.
Classification classify_subgroup(const MonoidTable &table, SubgroupId h);

/// Points sum_j lambda_j^{d(i)} xi_{ij} e_i over the non-factorizable
/// components p_1..p_N; strict when every lambda_j is nonzero.
struct WeightedSpan {
  /// 0/1 vectors e_{H_j} of length N.
  std::vector<std::vector<int>> basis;
  /// d(i).
  std::vector<int> degrees;
  bool strict = true;

  std::size_t dimension() const { return basis.size(); }
};

enum class GammaStatus { Origin, Described, LineOnly };

const char *to_string(GammaStatus s);

struct Stratum {
  SubgroupId subgroup = 0;
  Classification classification;
  GammaStatus status = GammaStatus::LineOnly;
  /// For Described: gamma itself. For LineOnly: the line p_H(k^x) it contains.
  WeightedSpan span;
  std::optional<int> omega;
  /// Degrees up to which "at most one component per degree" was checked.
  int uniqueness_verified_to = 0;
};

struct SpectrumDescription {
  /// Non-factorizable components p_1..p_N (component ids) and their degrees.
  std::vector<ComponentId> generators;
  std::vector<int> generator_degrees;
  /// gamma(1), the origin.
  Stratum origin;
  /// One stratum per nontrivial H in Sub_{G,D}, in id order.
  std::vector<Stratum> strata;
  int krull_dimension = 0;
  /// Every nontrivial H is a non-splitter or a factored splitter and
  /// non-splitters have at most one component per tabulated degree.
  bool complete = false;
  /// The non-factorizable list is certified complete.
  bool generators_complete = false;
  int max_degree = 0;
};

/// gamma(H) from a classification.
Stratum gamma_description(const MonoidTable &table, const HilbertTable &hf, SubgroupId h);

SpectrumDescription spec_description(const MonoidTable &table);

/// Counts of strata by dimension: index k holds the number of k-dimensional strata.
std::vector<std::size_t> dimension_profile(const SpectrumDescription &s);

/// Checks that every point of every stratum satisfies the relations
/// p_{i1}...p_{ir} = p_{i'1}...p_{i'r'} among monomials in the generators up
/// to `max_degree`. Returns the number of violated (stratum, relation) pairs.
std::size_t check_relations(const MonoidTable &table, const SpectrumDescription &s, int max_degree);

/// Symmetric groups, transpositions, xi = 1: strata are families of pairwise
/// disjoint subsets A_1..A_k of {0..d-1}, |A_i| >= 2, stored as bitmasks.
struct SymmetricSpectrum {
  int d = 0;
  std::vector<std::vector<std::uint32_t>> strata;
  int krull_dimension = 0;

  /// Generators X_ij in order (0,1), (0,2), ..., (d-2,d-1).
  std::vector<std::pair<int, int>> generators() const;
  /// e_A as a 0/1 vector over generators().
  std::vector<int> basis_vector(std::uint32_t block) const;
  std::vector<std::size_t> dimension_profile() const;
};

/// Throws CapExceeded beyond caps.max_symmetric_degree.
SymmetricSpectrum spec_sd(int d, const Caps &caps = {});

/// Schematic of Proj: one vertex per one-dimensional stratum, one edge (or
/// hyperedge node) per higher stratum joining its factors.
std::string proj_dot(const SpectrumDescription &s, const MonoidTable &table);
std::string proj_dot(const SymmetricSpectrum &s);

} // namespace hurwitz
