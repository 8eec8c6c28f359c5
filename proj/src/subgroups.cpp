#include "hurwitz/subgroups.hpp"

#include <algorithm>
#include <set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::size_t position(const std::vector<ElemId> &sorted, ElemId x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

} // namespace

bool SubgroupRecord::contains(ElemId x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool SubgroupRecord::contains(const SubgroupRecord &other) const {
  return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                       other.elements.end());
}

std::optional<std::size_t> SubgroupRecord::dh_class_of(ElemId x) const {
  auto it = dh_lookup.find(x);
  if (it == dh_lookup.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SubgroupRecord::tau_preimage(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < tau.size(); ++k)
    if (tau[k] == c) out.push_back(k);
  return out;
}

SubgroupRecord class_splitting(const GroupContext &group, const ClassData &classes,
                               std::vector<ElemId> elements, std::vector<ElemId> generators) {
  SubgroupRecord r;
  std::sort(elements.begin(), elements.end());
  r.elements = std::move(elements);
  std::erase(generators, GroupContext::identity_id);
  r.generators = std::move(generators);

  bool surjective = true;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    std::vector<ElemId> inter;
    for (ElemId x : group.classes()[classes.classes[ci]])
      if (r.contains(x)) inter.push_back(x);
    if (inter.empty()) surjective = false;
    std::set<ElemId> left(inter.begin(), inter.end());
    while (!left.empty()) {
      std::vector<ElemId> orbit{*left.begin()};
      left.erase(left.begin());
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (ElemId h : r.generators) {
          ElemId y = group.conj(orbit[head], h);
          if (left.erase(y)) orbit.push_back(y);
        }
      std::sort(orbit.begin(), orbit.end());
      r.dh_classes.push_back(std::move(orbit));
      r.tau.push_back(ci);
    }
  }
  for (std::uint32_t k = 0; k < r.dh_classes.size(); ++k)
    for (ElemId x : r.dh_classes[k])
      r.dh_lookup.emplace(x, k);
  if (surjective)
    r.omega = static_cast<int>(r.dh_classes.size()) - static_cast<int>(classes.size());

  std::vector<ElemId> comms;
  for (ElemId a : r.generators)
    for (ElemId b : r.generators)
      comms.push_back(group.commutator(a, b));
  r.derived = group.normal_closure(comms, r.generators);

  const std::size_t n = r.elements.size();
  constexpr std::uint32_t unset = ~0u;
  r.coset_of.assign(n, unset);
  std::vector<ElemId> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (r.coset_of[i] != unset) continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(r.elements[i]);
    for (ElemId d : r.derived)
      r.coset_of[position(r.elements, group.mul(r.elements[i], d))] = id;
  }
  const std::size_t q = reps.size();
  r.abelian_table.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      r.abelian_table[a * q + b] = r.coset_of[position(r.elements, group.mul(reps[a], reps[b]))];
  return r;
}

std::uint32_t abelianization_coset(const SubgroupRecord &h, ElemId x) {
  std::size_t i = position(h.elements, x);
  if (i == h.elements.size()) throw InvalidArgument("element is not a member of the subgroup");
  return h.coset_of[i];
}

std::uint32_t abelian_mul(const SubgroupRecord &h, std::uint32_t a, std::uint32_t b) {
  return h.abelian_table[static_cast<std::size_t>(a) * h.abelianization_order() + b];
}

std::uint64_t abelian_order(const SubgroupRecord &h, std::uint32_t a) {
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != 0; x = abelian_mul(h, x, a))
    ++k;
  return k;
}

std::vector<std::vector<ElemId>> enumerate_d_generated(const GroupContext &group,
                                                       const ClassData &classes) {
  std::vector<ElemId> letters;
  for (auto c : classes.classes)
    letters.insert(letters.end(), group.classes()[c].begin(), group.classes()[c].end());
  std::sort(letters.begin(), letters.end());

  // Every subgroup generated by letters, found by adding one letter at a time.
  std::map<std::vector<ElemId>, std::vector<ElemId>> found; // elements -> generators
  std::vector<std::vector<ElemId>> queue{{GroupContext::identity_id}};
  found.emplace(queue.front(), std::vector<ElemId>{});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto elems = queue[head];
    const auto gens = found.at(elems);
    for (ElemId x : letters) {
      if (std::binary_search(elems.begin(), elems.end(), x)) continue;
      auto seeds = gens;
      seeds.push_back(x);
      auto sub = group.closure(seeds);
      if (found.emplace(sub, seeds).second) queue.push_back(std::move(sub));
    }
  }

  std::vector<std::vector<ElemId>> out;
  for (const auto &[elems, gens] : found) {
    bool meets_all = true;
    for (auto c : classes.classes) {
      const auto &cls = group.classes()[c];
      bool meets = std::any_of(cls.begin(), cls.end(), [&](ElemId x) {
        return std::binary_search(elems.begin(), elems.end(), x);
      });
      if (!meets) {
        meets_all = false;
        break;
      }
    }
    if (meets_all || elems.size() == 1) out.push_back(elems);
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Setting::Setting(GroupContext group, ClassData classes)
    : group_(std::move(group)), classes_(std::move(classes)) {
  for (std::size_t ci = 0; ci < classes_.size(); ++ci)
    for (ElemId x : group_.classes()[classes_.classes[ci]])
      letters_.push_back(x);
  std::sort(letters_.begin(), letters_.end());
  letter_class_.resize(letters_.size());
  for (std::uint32_t i = 0; i < letters_.size(); ++i) {
    letter_index_.emplace(letters_[i], i);
    std::size_t gc = group_.class_of(letters_[i]);
    letter_class_[i] = static_cast<std::size_t>(
        std::find(classes_.classes.begin(), classes_.classes.end(), gc) - classes_.classes.begin());
  }
  const std::size_t L = letters_.size();
  letter_conj_.resize(L * L);
  for (std::size_t b = 0; b < L; ++b)
    for (std::size_t a = 0; a < L; ++a)
      letter_conj_[b * L + a] = letter_index_.at(group_.conj(letters_[a], letters_[b]));

  auto subs = enumerate_d_generated(group_, classes_);
  for (auto &elems : subs) {
    std::vector<ElemId> gens;
    for (ElemId x : elems)
      if (letter_index_.count(x)) gens.push_back(x);
    intern_locked(std::move(elems), std::move(gens));
  }
  sub_count_ = records_.size();
  whole_id_ = static_cast<SubgroupId>(sub_count_ - 1);
}

std::optional<std::uint32_t> Setting::letter_index(ElemId x) const {
  auto it = letter_index_.find(x);
  if (it == letter_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<const SubgroupRecord *> Setting::d_generated_subgroups() const {
  std::lock_guard lock(mutex_);
  std::vector<const SubgroupRecord *> out;
  for (std::size_t i = 0; i < sub_count_; ++i)
    out.push_back(&records_[i]);
  return out;
}

const SubgroupRecord &Setting::subgroup(SubgroupId id) const {
  std::lock_guard lock(mutex_);
  if (id >= records_.size()) throw InvalidArgument("unknown subgroup id " + std::to_string(id));
  return records_[id];
}

SubgroupId Setting::generated(std::span<const ElemId> seeds) const {
  auto elems = group_.closure(seeds);
  std::lock_guard lock(mutex_);
  auto it = by_elements_.find(elems);
  if (it != by_elements_.end()) return it->second;
  return intern_locked(std::move(elems), std::vector<ElemId>(seeds.begin(), seeds.end()));
}

SubgroupId Setting::intern(std::vector<ElemId> elements, std::vector<ElemId> generators) const {
  std::sort(elements.begin(), elements.end());
  std::lock_guard lock(mutex_);
  return intern_locked(std::move(elements), std::move(generators));
}

SubgroupId Setting::intern_locked(std::vector<ElemId> elements,
                                  std::vector<ElemId> generators) const {
  auto it = by_elements_.find(elements);
  if (it != by_elements_.end()) return it->second;
  auto id = static_cast<SubgroupId>(records_.size());
  SubgroupRecord r = class_splitting(group_, classes_, elements, std::move(generators));
  r.id = id;
  if (r.omega || r.is_trivial()) {
    std::vector<ElemId> inside;
    for (ElemId x : r.elements)
      if (letter_index_.count(x)) inside.push_back(x);
    r.d_generated = group_.closure(inside).size() == r.elements.size();
  }
  records_.push_back(std::move(r));
  by_elements_.emplace(std::move(elements), id);
  return id;
}

SubgroupId Setting::join(SubgroupId a, SubgroupId b) const {
  if (a > b) std::swap(a, b);
  {
    std::lock_guard lock(mutex_);
    auto it = joins_.find({a, b});
    if (it != joins_.end()) return it->second;
  }
  std::vector<ElemId> seeds = subgroup(a).generators;
  const auto &gb = subgroup(b).generators;
  seeds.insert(seeds.end(), gb.begin(), gb.end());
  SubgroupId out = generated(seeds);
  std::lock_guard lock(mutex_);
  joins_.emplace(std::make_pair(a, b), out);
  return out;
}

SubgroupId Setting::intersect(SubgroupId a, SubgroupId b) const {
  const auto &ea = subgroup(a).elements;
  const auto &eb = subgroup(b).elements;
  std::vector<ElemId> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
  auto gens = common;
  return intern(std::move(common), std::move(gens));
}

bool Setting::contains(SubgroupId outer, SubgroupId inner) const {
  return subgroup(outer).contains(subgroup(inner));
}

} // namespace hurwitz
