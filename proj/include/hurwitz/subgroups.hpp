#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hurwitz/group.hpp"

namespace hurwitz {

using SubgroupId = std::uint32_t;

/// A subgroup H of G together with its class-splitting data relative to D.
struct SubgroupRecord {
  SubgroupId id = 0;
  /// Sorted element ids.
  std::vector<ElemId> elements;
  /// A generating set (not necessarily minimal).
  std::vector<ElemId> generators;
  /// D_H: the H-conjugacy classes contained in some class of D, ordered by
  /// (tau, smallest element id).
  std::vector<std::vector<ElemId>> dh_classes;
  /// tau_H: index into ClassData::classes for each entry of dh_classes.
  std::vector<std::size_t> tau;
  /// |D_H| - |D| when tau_H is surjective.
  std::optional<int> omega;
  /// Member of Sub_{G,D}.
  bool d_generated = false;

  /// [H, H], sorted.
  std::vector<ElemId> derived;
  /// Abelianization coset of each entry of `elements`.
  std::vector<std::uint32_t> coset_of;
  /// Multiplication table of H^ab, row-major, |H^ab| x |H^ab|. Coset 0 is the
  /// identity coset.
  std::vector<std::uint32_t> abelian_table;

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t abelianization_order() const noexcept { return elements.size() / derived.size(); }
  bool contains(ElemId x) const;
  bool contains(const SubgroupRecord &other) const;
  bool is_trivial() const noexcept { return elements.size() == 1; }
  bool is_non_splitter() const noexcept { return omega && *omega == 0; }
  /// Index into dh_classes of `x`, if x lies in one of them.
  std::optional<std::size_t> dh_class_of(ElemId x) const;
  /// Inverse image tau^{-1}(c) for an index c into ClassData::classes.
  std::vector<std::size_t> tau_preimage(std::size_t c) const;

  /// Element -> index into dh_classes.
  std::unordered_map<ElemId, std::uint32_t> dh_lookup;
};

/// Builds the record of the subgroup with the given elements: intersects H
/// with each class of D, splits the intersections into H-conjugacy orbits and
/// computes the abelianization. The id and d_generated fields are left for the
/// caller.
SubgroupRecord class_splitting(const GroupContext &group, const ClassData &classes,
                               std::vector<ElemId> elements,
                               std::vector<ElemId> generators);

/// Coset of x in H / [H, H]. Throws InvalidArgument when x is not in H.
std::uint32_t abelianization_coset(const SubgroupRecord &h, ElemId x);

/// Product of two cosets in H^ab.
std::uint32_t abelian_mul(const SubgroupRecord &h, std::uint32_t a, std::uint32_t b);

/// Order of a coset in H^ab.
std::uint64_t abelian_order(const SubgroupRecord &h, std::uint32_t a);

/// The group G with its classes D, multiplicities xi, the alphabet of letters
/// (elements of the union of D) and a registry of subgroups.
///
/// Subgroup ids 0 .. sub_count()-1 are Sub_{G,D}, ordered by (order, element
/// list); id 0 is the trivial group. Other subgroups (for example the group
/// of an arbitrary tuple) are registered on demand and receive later ids.
/// Registration is guarded by a mutex; records never move once created.
class Setting {
public:
  Setting(GroupContext group, ClassData classes);

  static std::shared_ptr<const Setting> make(GroupContext group, ClassData classes) {
    return std::make_shared<const Setting>(std::move(group), std::move(classes));
  }

  const GroupContext &group() const noexcept { return group_; }
  const ClassData &classes() const noexcept { return classes_; }

  /// Elements of the classes in D, sorted by id.
  const std::vector<ElemId> &letters() const noexcept { return letters_; }
  /// Position of x in letters(), if present.
  std::optional<std::uint32_t> letter_index(ElemId x) const;
  /// Index into classes().classes of the class containing letter x.
  std::size_t d_class_of_letter(std::uint32_t letter) const { return letter_class_[letter]; }
  /// Conjugate of letter a by letter b (b a b^{-1}) as a letter index.
  std::uint32_t letter_conj(std::uint32_t a, std::uint32_t b) const {
    return letter_conj_[static_cast<std::size_t>(b) * letters_.size() + a];
  }

  /// |Sub_{G,D}|.
  std::size_t sub_count() const noexcept { return sub_count_; }
  /// Sub_{G,D} in id order.
  std::vector<const SubgroupRecord *> d_generated_subgroups() const;
  const SubgroupRecord &subgroup(SubgroupId id) const;
  SubgroupId trivial_id() const noexcept { return 0; }
  /// Id of G itself (always in Sub_{G,D}).
  SubgroupId whole_group_id() const noexcept { return whole_id_; }

  /// Id of the subgroup generated by `seeds`, registering it if needed.
  SubgroupId generated(std::span<const ElemId> seeds) const;
  /// Id of the subgroup with exactly these (sorted) elements.
  SubgroupId intern(std::vector<ElemId> elements, std::vector<ElemId> generators) const;
  /// <H1, H2>.
  SubgroupId join(SubgroupId a, SubgroupId b) const;
  /// H1 ∩ H2.
  SubgroupId intersect(SubgroupId a, SubgroupId b) const;
  bool contains(SubgroupId outer, SubgroupId inner) const;

private:
  GroupContext group_;
  ClassData classes_;
  std::vector<ElemId> letters_;
  std::vector<std::size_t> letter_class_;
  std::vector<std::uint32_t> letter_conj_;
  std::unordered_map<ElemId, std::uint32_t> letter_index_;

  mutable std::mutex mutex_;
  mutable std::deque<SubgroupRecord> records_;
  mutable std::map<std::vector<ElemId>, SubgroupId> by_elements_;
  mutable std::map<std::pair<SubgroupId, SubgroupId>, SubgroupId> joins_;
  std::size_t sub_count_ = 0;
  SubgroupId whole_id_ = 0;

  SubgroupId intern_locked(std::vector<ElemId> elements, std::vector<ElemId> generators) const;
};

/// Sub_{G,D}: the trivial group and every subgroup meeting all classes of D
/// and generated by its intersections with them.
///
/// Enumeration grows subgroups one letter at a time from the trivial group,
/// which reaches every subgroup generated by a subset of the letters; the
/// result is then filtered on meeting every class of D.
std::vector<std::vector<ElemId>> enumerate_d_generated(const GroupContext &group,
                                                       const ClassData &classes);

} // namespace hurwitz
