#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/monoid.hpp"

namespace hurwitz {

/// Undirected multigraph on {0..d-1} without loops.
struct Multigraph {
  int d = 0;
  /// {i, j} with i < j -> multiplicity >= 1.
  std::map<std::pair<int, int>, int> edges;

  void add_edge(int i, int j, int count = 1);
  int edge_count() const;
};

/// One edge per appearance of each transposition. Throws InvalidArgument on
/// any other entry.
Multigraph tuple_to_multigraph(const GroupContext &group, const Tuple &t);
Multigraph tuple_to_multigraph(int d, const std::vector<Permutation> &t);

/// Connected components (bitmasks, singletons included, ordered by smallest
/// vertex) and the number of edges in each.
struct Signature {
  std::vector<std::uint32_t> blocks;
  std::vector<int> edges;

  auto operator<=>(const Signature &) const = default;
  bool operator==(const Signature &) const = default;
  std::string to_string() const;
};

Signature signature(const Multigraph &m);
/// Edge counts halved: the signature of the multigraph of (h_1, .., h_r) when
/// the tuple is equivalent to (h_1, h_1, .., h_r, h_r).
Signature halved(const Signature &s);

struct CensusEntry {
  /// Edge counts in halved units (total n/2).
  Signature signature;
  /// Blocks of size >= 2: the group is the product of their symmetric groups.
  std::vector<std::uint32_t> subgroup_blocks;
};

/// Components of degree n for S_d with transpositions, one per admissible
/// signature: a block of size v >= 2 carries at least v - 1 of the n/2 edges.
std::vector<CensusEntry> component_census_sd(int d, int n, const Caps &caps = {});

/// Number of entries of component_census_sd(d, n) whose group is the whole S_d.
std::uint64_t census_full_group(int d, int n, const Caps &caps = {});

/// The triple sum for HF(2n) exactly as printed (binomials with a negative
/// upper index are 0). It gives 0 at n = 0.
BigInt hf_closed_form_raw(int d, long long n);
/// HF(2n): the printed sum for n >= 1, and 1 (the empty component) for n = 0.
BigInt hf_closed_form(int d, long long n);

BigInt stirling2(int n, int k);
BigInt multinomial3(int d, int a, int b, int c);

/// Leading coefficient of HF(2n) as a polynomial in n, as a fraction.
std::pair<BigInt, BigInt> hf_leading_coefficient(int d);

struct PresentationReport {
  int d = 0;
  int max_degree = 0;
  /// (a) The degree-2 components are exactly the d(d-1)/2 squares X_ij.
  bool generators_ok = false;
  /// (b) X_ij X_jk = X_ik X_jk = X_ij X_ik and X_ij X_kl = X_kl X_ij as keys.
  std::size_t relations_checked = 0;
  std::size_t relations_failed = 0;
  /// (c) Monomials with equal signatures are linked by the relations, and
  /// monomials map to equal keys iff their signatures agree.
  std::size_t monomials = 0;
  std::size_t signature_classes = 0;
  std::size_t disconnected_classes = 0;
  std::size_t key_mismatches = 0;

  bool ok() const {
    return generators_ok && relations_failed == 0 && disconnected_classes == 0 && key_mismatches == 0;
  }
};

/// Needs a table of S_d with transpositions, xi = 1, built to degree >= 6.
PresentationReport verify_presentation(int d, const MonoidTable &table);

/// S_d generated by (1 2), (1 2 .. d); D = transpositions; xi = 1.
std::shared_ptr<const Setting> symmetric_setting(int d, const Caps &caps = {});

/// One representative multigraph per census entry, in DOT.
std::string census_dot(int d, const std::vector<CensusEntry> &census);

} // namespace hurwitz
