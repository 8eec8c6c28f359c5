#include "hurwitz/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::vector<Permutation> enumerate_elements(std::span<const Permutation> generators,
                                            const Caps &caps) {
  if (generators.empty()) throw InvalidArgument("at least one generator is required");
  const std::size_t d = generators.front().degree();
  if (d == 0) throw InvalidArgument("degree must be positive");
  if (d > static_cast<std::size_t>(caps.max_degree))
    throw CapExceeded("max_degree", caps.max_degree,
                      "permutation degree " + std::to_string(d) + " too large");
  for (const auto &g : generators)
    if (g.degree() != d) throw InvalidArgument("generators have different degrees");

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> order{Permutation::identity(d)};
  seen.insert(order.front());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto &g : generators) {
      Permutation next = order[head] * g;
      if (seen.insert(next).second) {
        if (seen.size() > caps.max_group_order)
          throw CapExceeded("max_group_order", caps.max_group_order, "group order too large");
        order.push_back(std::move(next));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

GroupContext::GroupContext(std::vector<Permutation> generators, const Caps &caps)
    : generators_(std::move(generators)) {
  elements_ = enumerate_elements(generators_, caps);
  degree_ = elements_.front().degree();
  const std::size_t n = elements_.size();
  index_.reserve(n * 2);
  for (ElemId i = 0; i < n; ++i)
    index_.emplace(elements_[i], i);
  for (const auto &g : generators_)
    generator_ids_.push_back(index_.at(g));

  if (n <= caps.max_cayley_table_order) {
    table_.resize(n * n);
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b)
        table_[static_cast<std::size_t>(a) * n + b] = index_.at(elements_[a] * elements_[b]);
  }
  inverse_.resize(n);
  orders_.resize(n);
  for (ElemId a = 0; a < n; ++a) {
    inverse_[a] = index_.at(elements_[a].inverse());
    orders_[a] = elements_[a].order();
    exponent_ = std::lcm(exponent_, orders_[a]);
  }

  classes_ = conjugacy_classes(*this);
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (ElemId x : classes_[c])
      class_of_[x] = c;

  std::vector<ElemId> comms;
  for (ElemId a : generator_ids_)
    for (ElemId b : generator_ids_)
      comms.push_back(commutator(a, b));
  derived_ = normal_closure(comms, generator_ids_);
}

std::optional<ElemId> GroupContext::find(const Permutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemId GroupContext::id_of(const Permutation &p) const {
  auto id = find(p);
  if (!id) throw InvalidArgument(p.to_string() + " is not an element of the group");
  return *id;
}

ElemId GroupContext::mul(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElemId GroupContext::commutator(ElemId a, ElemId b) const {
  return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
}

ElemId GroupContext::power(ElemId a, std::uint64_t e) const {
  ElemId result = identity_id;
  ElemId base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<ElemId> GroupContext::closure(std::span<const ElemId> seeds) const {
  std::vector<char> in(elements_.size(), 0);
  std::vector<ElemId> out{identity_id};
  in[identity_id] = 1;
  std::vector<ElemId> gens;
  for (ElemId s : seeds)
    if (s != identity_id) gens.push_back(s);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (ElemId g : gens) {
      ElemId next = mul(out[head], g);
      if (!in[next]) {
        in[next] = 1;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemId> GroupContext::normal_closure(std::span<const ElemId> seeds,
                                                 std::span<const ElemId> conjugators) const {
  std::vector<ElemId> gens(seeds.begin(), seeds.end());
  for (;;) {
    auto sub = closure(gens);
    std::vector<char> in(elements_.size(), 0);
    for (ElemId x : sub)
      in[x] = 1;
    bool grew = false;
    for (ElemId g : std::vector<ElemId>(gens))
      for (ElemId h : conjugators) {
        ElemId c = conj(g, h);
        if (!in[c]) {
          in[c] = 1;
          gens.push_back(c);
          grew = true;
        }
      }
    if (!grew) return sub;
  }
}

std::vector<std::vector<ElemId>> conjugacy_classes(const GroupContext &group) {
  const std::size_t n = group.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<ElemId>> out;
  for (ElemId x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<ElemId> cls{x};
    done[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (ElemId h : group.generator_ids()) {
        ElemId y = group.conj(cls[head], h);
        if (!done[y]) {
          done[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return out;
}

int ClassData::xi_total() const { return std::accumulate(xi.begin(), xi.end(), 0); }

ClassData ClassData::make(const GroupContext &group, std::vector<std::size_t> classes,
                          std::vector<int> xi) {
  if (classes.empty()) throw InvalidArgument("D must contain at least one class");
  if (xi.size() != classes.size()) throw InvalidArgument("xi must have one entry per class");
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return classes[a] < classes[b]; });
  ClassData out;
  for (auto k : perm) {
    std::size_t c = classes[k];
    if (c >= group.classes().size()) throw InvalidArgument("class index out of range");
    if (c == 0) throw InvalidArgument("the identity class cannot belong to D");
    if (!out.classes.empty() && out.classes.back() == c)
      throw InvalidArgument("class listed twice in D");
    if (xi[k] < 1) throw InvalidArgument("xi(c) must be at least 1 for every class in D");
    out.classes.push_back(c);
    out.xi.push_back(xi[k]);
  }
  std::vector<ElemId> letters;
  for (auto c : out.classes)
    letters.insert(letters.end(), group.classes()[c].begin(), group.classes()[c].end());
  if (group.closure(letters).size() != group.order())
    throw InvalidArgument("the classes in D do not generate the group");
  return out;
}

} // namespace hurwitz
