#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hurwitz/config.hpp"
#include "hurwitz/subgroups.hpp"

namespace hurwitz {

/// A tuple of group elements, stored as element ids.
using Tuple = std::vector<ElemId>;

/// A braid word: +i stands for sigma_i, -i for its inverse (i is 1-based).
using BraidWord = std::vector<int>;

/// sigma_i: (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^{-1}, g_i, ..). 1-based i.
/// Throws InvalidArgument unless 1 <= i <= |t| - 1.
Tuple braid_act(const GroupContext &group, std::size_t i, Tuple t);
/// sigma_i^{-1}: (.., g_i, g_{i+1}, ..) -> (.., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ..).
Tuple braid_act_inv(const GroupContext &group, std::size_t i, Tuple t);
/// Applies the letters of `word` left to right.
Tuple apply_word(const GroupContext &group, const BraidWord &word, Tuple t);

BraidWord random_word(std::size_t tuple_length, std::size_t max_length, std::mt19937_64 &rng);

/// g_1 g_2 ... g_n
ElemId product(const GroupContext &group, const Tuple &t);
/// Sorted element list of <t>.
std::vector<ElemId> generated_elements(const GroupContext &group, const Tuple &t);
/// Number of entries in each conjugacy class of G (indexed like GroupContext::classes()).
std::vector<int> class_counts(const GroupContext &group, const Tuple &t);
/// mu_H(t): entries per class of D_H. Entries of H outside D_H are not counted.
/// Throws InvalidArgument when an entry is not in H.
std::vector<int> multidiscriminant(const SubgroupRecord &h, const Tuple &t);

/// Braid orbit of a tuple with its lexicographically minimal member.
struct OrbitRecord {
  Tuple canonical;
  std::uint64_t size = 0;
  ElemId product = GroupContext::identity_id;
  std::size_t subgroup_order = 0;
  std::vector<int> class_counts;
};

/// Full BFS closure under every sigma_i and sigma_i^{-1}.
/// Throws CapExceeded when the orbit passes caps.max_orbit_size.
OrbitRecord orbit(const GroupContext &group, const Tuple &t, const Caps &caps = {});

/// True iff t1 and t2 lie in the same braid orbit. Invariants are compared
/// first; the BFS from t1 stops as soon as t2 is reached.
/// Throws InvalidArgument on a length mismatch, CapExceeded as orbit().
bool equivalent(const GroupContext &group, const Tuple &t1, const Tuple &t2,
                const Caps &caps = {});

/// True iff some member of the orbit of t satisfies `pred`. Stops at the first hit.
bool orbit_any(const GroupContext &group, const Tuple &t, const std::function<bool(const Tuple &)> &pred,
               const Caps &caps = {});

/// t^h: every entry conjugated by h.
Tuple conjugate_tuple(const GroupContext &group, const Tuple &t, ElemId h);

Tuple concat(const Tuple &a, const Tuple &b);

} // namespace hurwitz
