#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/monoid.hpp"

namespace hurwitz {

/// psi: D_H -> N with sum over tau^{-1}(c) equal to n xi(c) for every c in D.
struct LikelyMap {
  std::vector<int> psi;
  int degree = 0;
  bool really_likely = false;

  auto operator<=>(const LikelyMap &) const = default;
};

/// prod_c binom(n xi(c) + |tau^{-1}(c)| - 1, |tau^{-1}(c)| - 1).
/// Throws InvalidArgument when Omega is undefined for H.
BigInt count_likely_maps(const Setting &setting, const SubgroupRecord &h, int n);

/// C_H = prod_c xi(c)^{k_c - 1} / (k_c - 1)!, k_c = |tau^{-1}(c)|, as a reduced fraction.
std::pair<BigInt, BigInt> likely_leading_coefficient(const Setting &setting, const SubgroupRecord &h);

/// pi~(psi): product over D_H of coset(c)^{psi(c)} in H^ab.
std::uint32_t pi_tilde(const SubgroupRecord &h, std::span<const int> psi);

/// All likely maps of degree n in lexicographic order, flagged.
std::vector<LikelyMap> enumerate_likely_maps(const Setting &setting, const SubgroupRecord &h, int n);
/// The really-likely ones (pi~(psi) = 1).
std::vector<LikelyMap> enumerate_really_likely(const Setting &setting, const SubgroupRecord &h,
                                               int n);

/// Order of pi~(xi o tau^{-1}) in H^ab for a non-splitter; 1 for the trivial group.
std::uint64_t non_splitter_period(const Setting &setting, const SubgroupRecord &h);

struct CensusCounts {
  /// Components whose group is contained in H.
  std::uint64_t within = 0;
  /// Components whose group is exactly H.
  std::uint64_t exact = 0;
  bool likely = false;
  bool really_likely = false;
};

/// mu_H of every degree-n component whose group lies in H.
std::map<std::vector<int>, CensusCounts> multidiscriminant_census(const MonoidTable &table,
                                                                  SubgroupId h, int n);

struct GrowthReport {
  SubgroupId subgroup = 0;
  std::optional<int> omega;
  bool non_splitter = false;
  int window = 0;

  // Non-splitters.
  std::uint64_t period = 0;
  std::uint64_t observed_period = 0;
  int threshold = -1;
  std::uint64_t value = 0;
  /// Degrees off the progression with a nonzero count (should be empty).
  std::vector<int> off_progression;
  /// Threshold on each class of D_H: threshold degree times xi(tau(c)).
  std::vector<int> class_thresholds;

  // Splitters: HF(k m) / m^Omega over the top half of the window, k the observed period.
  double ratio_min = 0;
  double ratio_max = 0;
  std::vector<int> ratio_degrees;
  /// Largest number of group-H components sharing one really-likely psi.
  std::uint64_t per_map_max = 0;
  /// HF_H(n) <= per_map_max |L_n| on the whole window.
  bool upper_sandwich = true;
  /// Every observed mu_H lands on a likely map, exact-group ones on really-likely maps.
  bool census_consistent = true;
};

/// Throws InsufficientData when the window cannot support the statement.
GrowthReport stabilization_report(const MonoidTable &table, const HilbertTable &hf, SubgroupId h);

struct AverageCoefficient {
  int n = 0;
  int s = 0;
  BigInt cumulative = 0;
  std::uint64_t abelianization_order = 0;
  double estimate = 0;
  double reference = 0;
  double relative_error = 0;
  bool consistent = false;
};

/// Sum_{k<=n} HF_H(k) s! |H^ab| / n^s at the largest tabulated n, compared with
/// the product of the stabilization values of `factors` (H itself when empty).
/// Requires |D| = 1 and xi = 1 (InvalidArgument otherwise).
AverageCoefficient average_leading_coefficient(const MonoidTable &table, const HilbertTable &hf,
                                               SubgroupId h, std::span<const SubgroupId> factors,
                                               double tolerance = 0.25);

} // namespace hurwitz
