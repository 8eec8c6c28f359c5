#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hurwitz/config.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// Index of an element in GroupContext::elements(). Ids follow the
/// lexicographic order of the image arrays, so the identity is always 0.
using ElemId = std::uint32_t;

/// Closure of `generators` under multiplication, sorted lexicographically.
/// Throws CapExceeded when the order passes caps.max_group_order.
std::vector<Permutation> enumerate_elements(std::span<const Permutation> generators,
                                            const Caps &caps = {});

/// A finite permutation group with every element enumerated.
///
/// Immutable after construction and safe to share between threads.
class GroupContext {
public:
  static constexpr ElemId identity_id = 0;

  explicit GroupContext(std::vector<Permutation> generators, const Caps &caps = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const std::vector<ElemId> &generator_ids() const noexcept { return generator_ids_; }
  const std::vector<Permutation> &elements() const noexcept { return elements_; }
  const Permutation &element(ElemId id) const { return elements_[id]; }

  std::optional<ElemId> find(const Permutation &p) const;
  /// Throws InvalidArgument when `p` is not in the group.
  ElemId id_of(const Permutation &p) const;

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// g^h = h g h^{-1}
  ElemId conj(ElemId g, ElemId h) const { return mul(mul(h, g), inverse_[h]); }
  ElemId commutator(ElemId a, ElemId b) const;
  ElemId power(ElemId a, std::uint64_t e) const;

  std::uint64_t element_order(ElemId a) const { return orders_[a]; }
  std::uint64_t exponent() const noexcept { return exponent_; }

  /// Conjugacy classes ordered by (size, smallest element id). The identity
  /// class is class 0.
  const std::vector<std::vector<ElemId>> &classes() const noexcept { return classes_; }
  std::size_t class_of(ElemId a) const { return class_of_[a]; }
  const std::vector<ElemId> &derived_subgroup() const noexcept { return derived_; }

  /// Smallest subgroup containing `seeds`, as a sorted id list.
  std::vector<ElemId> closure(std::span<const ElemId> seeds) const;
  /// Smallest subgroup containing `seeds` and normalized by `conjugators`.
  std::vector<ElemId> normal_closure(std::span<const ElemId> seeds,
                                     std::span<const ElemId> conjugators) const;

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElemId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElemId, PermutationHash> index_;
  std::vector<ElemId> inverse_;
  std::vector<ElemId> table_; // row-major Cayley table, empty for large groups
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  std::vector<std::vector<ElemId>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<ElemId> derived_;
};

/// Orbits of the conjugation action, ordered by (size, smallest element id).
std::vector<std::vector<ElemId>> conjugacy_classes(const GroupContext &group);

/// The pair (D, xi): a set of nontrivial conjugacy classes generating G and a
/// positive multiplicity for each of them.
struct ClassData {
  /// Class indices into GroupContext::classes(), strictly increasing.
  std::vector<std::size_t> classes;
  /// xi(c) for each entry of `classes`.
  std::vector<int> xi;

  std::size_t size() const noexcept { return classes.size(); }
  int xi_total() const;

  /// Validates and normalizes (sorts by class index). Throws InvalidArgument
  /// on trivial, repeated or non-generating classes, or when some xi(c) < 1.
  static ClassData make(const GroupContext &group, std::vector<std::size_t> classes,
                        std::vector<int> xi);
};

} // namespace hurwitz
