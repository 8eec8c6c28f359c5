#pragma once

#include <cstddef>
#include <cstdint>

namespace hurwitz {

/// Resource caps shared by all modules. Defaults are desk-scale; every value
/// can be overridden from the CLI or through HURWITZ_* environment variables.
struct Caps {
  /// Largest permutation degree accepted on input.
  int max_degree = 10;
  /// Largest group order that will be enumerated.
  std::uint64_t max_group_order = 1'000'000;
  /// Largest braid orbit explored by a single BFS.
  std::uint64_t max_orbit_size = 10'000'000;
  /// Largest number of tuple prefixes scanned when a degree of the component
  /// monoid is enumerated by brute force. Above it, the product closure is used.
  std::uint64_t max_bruteforce_tuples = 20'000'000;
  /// Groups up to this order get a full multiplication table.
  std::uint64_t max_cayley_table_order = 2048;
  /// Largest symmetric-group degree handled by the closed-form spectrum.
  int max_symmetric_degree = 12;

  /// Reads HURWITZ_MAX_DEGREE, HURWITZ_MAX_GROUP_ORDER, HURWITZ_MAX_ORBIT,
  /// HURWITZ_MAX_BRUTEFORCE and HURWITZ_MAX_SYMMETRIC_DEGREE on top of the
  /// defaults.
  static Caps from_environment();

  /// Throws InvalidArgument unless every cap is positive.
  void validate() const;
};

} // namespace hurwitz
