#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/monoid.hpp"

namespace hurwitz {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;

  bool passed() const { return failures == 0 && cases > 0; }
  /// Nothing to check: no sampled or enumerated case met the hypothesis.
  bool skipped() const { return cases == 0; }
  const char *status() const { return passed() ? "passed" : skipped() ? "skipped" : "failed"; }
};

struct SuiteOptions {
  std::uint64_t seed = 1729;
  std::size_t braid_samples = 1000;
  std::size_t lemma_samples = 200;
  std::size_t max_word_length = 50;
  std::size_t max_tuple_length = 8;
  unsigned workers = 1;
};

/// Runs body(chunk, rng) for chunk = 0..chunks-1 on up to `workers` threads.
/// Every chunk gets its own generator seeded from (seed, chunk), so results do
/// not depend on the worker count.
void parallel_chunks(std::size_t chunks, unsigned workers, std::uint64_t seed,
                     const std::function<void(std::size_t, std::mt19937_64 &)> &body);

/// Random tuples of D-letters (lengths 1..max_tuple_length) under random braid
/// words: product, generated group and multidiscriminants are unchanged.
CheckResult check_braid_invariance(const Setting &s, const SuiteOptions &o);

/// Random product-1 tuple of length n: n-1 random D-letters and the inverse of
/// their product.
Tuple random_product_one(const Setting &s, std::size_t n, std::mt19937_64 &rng);

/// g g' ~ g' g for product-1 tuples g, g'.
CheckResult check_commutation_lemma(const Setting &s, const SuiteOptions &o);
/// (g_1, .., g_n) ~ (g_2, .., g_n, g_1) when the product is 1.
CheckResult check_rotation_lemma(const Setting &s, const SuiteOptions &o);
/// g ~ g^h for h in <g> when the product is 1.
CheckResult check_conjugation_lemma(const Setting &s, const SuiteOptions &o);
/// g g' g'' ~ g (g')^c g'' for pi g' = 1 and c in <g, g''> or in <g'>.
CheckResult check_block_conjugation(const Setting &s, const SuiteOptions &o);

/// Omega >= 0, Omega(G) = 0, Omega = 0 iff tau bijective, abelianization is a
/// homomorphism, and D_H refines D_H' along inclusions.
CheckResult check_subgroup_data(const Setting &s);

/// Sampled commutativity and associativity, factorization round trip,
/// mu_G = n xi, and Hilbert rows summing to the totals.
CheckResult check_monoid_laws(const MonoidTable &table, const SuiteOptions &o);

/// Closed binomial product against enumeration for every H in Sub_{G,D}.
CheckResult check_likely_maps(const Setting &s, int max_n);

/// factor(y, x) succeeds with <z> = <y> whenever the multidiscriminant
/// hypothesis holds.
CheckResult check_factorization(const MonoidTable &table);

/// Symmetric groups with transpositions and xi = 1 only.
/// Components and admissible signatures are in bijection at every degree.
CheckResult check_signature_bijection(int d, const MonoidTable &table);
/// Random product-1 transposition tuples reach a tuple (h_1,h_1,..,h_r,h_r).
CheckResult check_squares_normal_form(int d, const MonoidTable &table, const SuiteOptions &o);
/// ((ij),(ij),(jk),(jk)) ~ ((ik),(ik),(jk),(jk)) ~ ((ij),(ij),(ik),(ik)).
CheckResult check_triangle_moves(int d, const MonoidTable &table);
/// HF_{S_d}(n) = 1 for even n >= 2d - 2 and 0 below or for odd n.
CheckResult check_full_group_uniqueness(int d, const MonoidTable &table);
/// hf_closed_form(d, m) equals the census size at degree 2m for m <= max_half.
CheckResult check_closed_formula(int d, int max_half);

/// If the setting is S_d with transpositions and xi = 1, returns d.
std::optional<int> symmetric_degree(const Setting &s);

/// Everything above that applies to the table's setting. A check whose
/// hypothesis never holds on the table comes back skipped.
std::vector<CheckResult> run_property_suite(const MonoidTable &table, const SuiteOptions &o);

} // namespace hurwitz
