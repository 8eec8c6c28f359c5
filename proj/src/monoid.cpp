#include "hurwitz/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

constexpr std::uint32_t npos32 = ~0u;

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 31;
  x *= 0x9E3779B97F4A7C15ULL;
  x ^= x >> 29;
  return x;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // The smaller index stays the root.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
};

} // namespace

struct MonoidTable::DegreeData {
  DegreeMethod method = DegreeMethod::BruteForce;
  std::vector<ComponentId> comps;

  std::vector<std::uint64_t> codes; // sorted
  std::vector<std::uint32_t> local; // tuple -> index into comps
  std::vector<std::uint32_t> slots; // tuple index + 1, 0 = empty
  std::uint64_t mask = 0;

  std::vector<std::uint32_t> gen_offset; // per generator, npos32 when absent
  std::vector<std::uint32_t> vertex_local;

  void build_index() {
    std::size_t cap = 16;
    while (cap < codes.size() * 2)
      cap <<= 1;
    slots.assign(cap, 0);
    mask = cap - 1;
    for (std::uint32_t i = 0; i < codes.size(); ++i) {
      std::uint64_t s = mix(codes[i]) & mask;
      while (slots[s])
        s = (s + 1) & mask;
      slots[s] = i + 1;
    }
  }
  std::optional<std::uint32_t> find_code(std::uint64_t code) const {
    if (slots.empty()) return std::nullopt;
    std::uint64_t s = mix(code) & mask;
    while (slots[s]) {
      if (codes[slots[s] - 1] == code) return slots[s] - 1;
      s = (s + 1) & mask;
    }
    return std::nullopt;
  }
};

struct MonoidTable::Memo {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, ComponentId> products;
};

MonoidTable::MonoidTable(MonoidTable &&) noexcept = default;
MonoidTable &MonoidTable::operator=(MonoidTable &&) noexcept = default;
MonoidTable::~MonoidTable() = default;

FactorizationBounds factorization_bounds(const Setting &setting) {
  const auto &group = setting.group();
  const auto &cd = setting.classes();
  FactorizationBounds b;
  BigInt a = 1;
  for (std::size_t i = 0; i < cd.size(); ++i)
    for (int k = 0; k < cd.xi[i]; ++k)
      a *= group.classes()[cd.classes[i]].size();
  BigInt e = group.exponent();
  BigInt pig = (e - 1) * a;
  b.exponent_bound = e > pig ? e : pig;

  if (a > 1'000'000) return b;
  // Every block h in prod c^xi(c); h^{ord(pi h)} is a component of degree ord(pi h).
  std::vector<ElemId> slots;
  for (std::size_t i = 0; i < cd.size(); ++i)
    for (int k = 0; k < cd.xi[i]; ++k)
      slots.push_back(static_cast<ElemId>(cd.classes[i]));
  std::uint64_t max_ord = 0, sum = 0;
  std::vector<std::size_t> pos(slots.size(), 0);
  for (;;) {
    ElemId p = GroupContext::identity_id;
    for (std::size_t s = 0; s < slots.size(); ++s)
      p = group.mul(p, group.classes()[slots[s]][pos[s]]);
    std::uint64_t o = group.element_order(p);
    max_ord = std::max(max_ord, o);
    sum += o - 1;
    std::size_t s = 0;
    while (s < slots.size() && ++pos[s] == group.classes()[slots[s]].size())
      pos[s++] = 0;
    if (s == slots.size()) break;
  }
  b.refined_bound = std::max(max_ord, sum);
  return b;
}

MonoidTable MonoidTable::build(std::shared_ptr<const Setting> setting, int max_degree,
                               const Caps &caps) {
  if (max_degree < 0) throw InvalidArgument("max degree must be nonnegative");
  MonoidTable t;
  t.setting_ = std::move(setting);
  t.max_degree_ = max_degree;
  t.caps_ = caps;
  t.bounds_ = factorization_bounds(*t.setting_);
  t.memo_ = std::make_unique<Memo>();

  Component id;
  id.subgroup = t.setting_->trivial_id();
  id.orbit_size = 1;
  t.components_.push_back(id);
  auto d0 = std::make_unique<DegreeData>();
  d0->comps = {0};
  d0->codes = {0};
  d0->local = {0};
  d0->build_index();
  t.degrees_.push_back(std::move(d0));
  t.generator_index_.push_back(-1);

  const std::size_t L = std::max<std::size_t>(t.setting_->letters().size(), 2);
  const int width = t.setting_->classes().xi_total();
  bool brute = true;
  for (int n = 1; n <= max_degree; ++n) {
    const double m = static_cast<double>(n) * width;
    const double log_space = m * std::log2(static_cast<double>(L));
    const double log_prefixes = (m - 1) * std::log2(static_cast<double>(L));
    brute = brute && log_space < 63.0 &&
            log_prefixes <= std::log2(static_cast<double>(caps.max_bruteforce_tuples));
    if (brute) {
      t.enumerate_bruteforce(n);
      t.bruteforce_degree_ = n;
      t.mark_factorizations(n);
    } else {
      if (BigInt(t.bruteforce_degree_) < t.bounds_.certified())
        throw CapExceeded("max_bruteforce_tuples", caps.max_bruteforce_tuples,
                          "degree " + std::to_string(n) +
                              " is beyond exhaustive enumeration and the non-factorizable bound " +
                              t.bounds_.certified().str() + " has not been reached");
      t.enumerate_closure(n);
    }
  }
  return t;
}

const std::vector<ComponentId> &MonoidTable::degree(int n) const {
  if (n < 0 || n > max_degree_) throw InvalidArgument("degree out of table range");
  return degrees_[n]->comps;
}

DegreeMethod MonoidTable::method(int n) const {
  if (n < 0 || n > max_degree_) throw InvalidArgument("degree out of table range");
  return degrees_[n]->method;
}

std::uint64_t MonoidTable::encode(const Tuple &letters_tuple) const {
  const std::uint64_t L = std::max<std::size_t>(setting_->letters().size(), 2);
  std::uint64_t c = 0;
  for (ElemId x : letters_tuple)
    c = c * L + x;
  return c;
}

void MonoidTable::enumerate_bruteforce(int n) {
  const auto &s = *setting_;
  const auto &group = s.group();
  const auto &cd = s.classes();
  const auto &letters = s.letters();
  const std::size_t nl = letters.size();
  const std::uint64_t L = std::max<std::size_t>(nl, 2);
  const std::size_t m = static_cast<std::size_t>(n) * cd.xi_total();

  std::vector<std::int32_t> elem_letter(group.order(), -1);
  for (std::uint32_t i = 0; i < nl; ++i)
    elem_letter[letters[i]] = static_cast<std::int32_t>(i);
  std::vector<std::uint64_t> weight(m);
  for (std::size_t k = m; k-- > 0;)
    weight[k] = k + 1 == m ? 1 : weight[k + 1] * L;

  auto dd = std::make_unique<DegreeData>();
  dd->method = DegreeMethod::BruteForce;
  std::vector<int> remaining(cd.size());
  for (std::size_t c = 0; c < cd.size(); ++c)
    remaining[c] = n * cd.xi[c];

  // Prefixes in lexicographic order; the last entry is forced, so codes come out sorted.
  std::vector<ElemId> prod(m + 1, GroupContext::identity_id);
  std::vector<std::uint64_t> code(m + 1, 0);
  std::vector<std::uint32_t> choice(m, 0);
  std::size_t pos = 0;
  choice[0] = 0;
  auto emit_last = [&](std::size_t p) {
    ElemId x = group.inv(prod[p]);
    std::int32_t li = elem_letter[x];
    if (li < 0) return;
    if (remaining[s.d_class_of_letter(li)] != 1) return;
    dd->codes.push_back(code[p] + static_cast<std::uint64_t>(li));
  };
  if (m == 1) {
    emit_last(0);
  } else {
    for (;;) {
      if (choice[pos] == nl) {
        if (pos == 0) break;
        --pos;
        ++remaining[s.d_class_of_letter(choice[pos])];
        ++choice[pos];
        continue;
      }
      std::uint32_t li = choice[pos];
      std::size_t c = s.d_class_of_letter(li);
      if (remaining[c] == 0) {
        ++choice[pos];
        continue;
      }
      --remaining[c];
      prod[pos + 1] = group.mul(prod[pos], letters[li]);
      code[pos + 1] = code[pos] + li * weight[pos];
      if (pos + 2 == m) {
        emit_last(pos + 1);
        ++remaining[c];
        ++choice[pos];
      } else {
        ++pos;
        choice[pos] = 0;
      }
    }
  }
  if (dd->codes.size() >= npos32) throw CapExceeded("max_bruteforce_tuples", caps_.max_bruteforce_tuples, "too many tuples");
  dd->build_index();

  const std::size_t count = dd->codes.size();
  UnionFind uf(count);
  std::vector<std::uint32_t> digits(m);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint64_t c = dd->codes[i];
    for (std::size_t k = m; k-- > 0;) {
      digits[k] = static_cast<std::uint32_t>(c % L);
      c /= L;
    }
    for (std::size_t p = 0; p + 1 < m; ++p) {
      std::uint32_t a = digits[p], b = digits[p + 1];
      if (a == b) continue;
      std::uint32_t na = s.letter_conj(b, a);
      std::uint64_t nc = dd->codes[i] - a * weight[p] - b * weight[p + 1] + na * weight[p] +
                         a * weight[p + 1];
      auto j = dd->find_code(nc);
      if (!j) throw Error("internal: braid move left the tuple set");
      uf.unite(i, *j);
    }
  }

  dd->local.assign(count, npos32);
  std::vector<std::uint64_t> sizes;
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t r = uf.find(i);
    if (r == i) {
      dd->local[i] = static_cast<std::uint32_t>(sizes.size());
      sizes.push_back(0);
    } else {
      dd->local[i] = dd->local[r];
    }
    ++sizes[dd->local[i]];
  }
  for (std::uint32_t i = 0; i < count; ++i) {
    if (uf.find(i) != i) continue;
    Component comp;
    comp.id = static_cast<ComponentId>(components_.size());
    comp.degree = n;
    comp.canonical.resize(m);
    std::uint64_t c = dd->codes[i];
    for (std::size_t k = m; k-- > 0;) {
      comp.canonical[k] = letters[c % L];
      c /= L;
    }
    comp.subgroup = s.generated(comp.canonical);
    comp.mu = multidiscriminant(s.subgroup(comp.subgroup), comp.canonical);
    comp.orbit_size = sizes[dd->local[i]];
    comp.index_in_degree = static_cast<std::uint32_t>(dd->comps.size());
    dd->comps.push_back(comp.id);
    components_.push_back(std::move(comp));
    generator_index_.push_back(-1);
  }
  degrees_.push_back(std::move(dd));
}

void MonoidTable::mark_factorizations(int n) {
  const auto &here = degrees_[n]->comps;
  std::vector<char> hit(here.size(), 0);
  for (ComponentId g : generators_) {
    int k = n - components_[g].degree;
    if (k < 1) continue;
    for (ComponentId b : degrees_[k]->comps) {
      ComponentId p = multiply(g, b);
      auto &comp = components_[p];
      if (!hit[comp.index_in_degree]) {
        hit[comp.index_in_degree] = 1;
        comp.split = std::make_pair(g, b);
      }
    }
  }
  for (std::size_t i = 0; i < here.size(); ++i) {
    if (hit[i]) continue;
    components_[here[i]].non_factorizable = true;
    generator_index_[here[i]] = static_cast<std::int32_t>(generators_.size());
    generators_.push_back(here[i]);
  }
}

void MonoidTable::enumerate_closure(int n) {
  const auto &s = *setting_;
  auto dd = std::make_unique<DegreeData>();
  dd->method = DegreeMethod::Closure;
  const std::size_t ng = generators_.size();
  dd->gen_offset.assign(ng, npos32);
  std::uint32_t nv = 0;
  for (std::size_t gi = 0; gi < ng; ++gi) {
    int k = n - components_[generators_[gi]].degree;
    if (k < 0 || degrees_[k]->comps.empty()) continue;
    dd->gen_offset[gi] = nv;
    nv += static_cast<std::uint32_t>(degrees_[k]->comps.size());
  }
  // Publish the vertex layout so lookup_vertex works for this degree while
  // the relations below call multiply at lower degrees.
  auto vertex_of = [&](std::size_t gi, ComponentId rest) {
    return dd->gen_offset[gi] + components_[rest].index_in_degree;
  };

  UnionFind uf(nv);
  for (std::size_t gi = 0; gi < ng; ++gi)
    for (std::size_t gj = gi + 1; gj < ng; ++gj) {
      ComponentId g = generators_[gi], h = generators_[gj];
      int k = n - components_[g].degree - components_[h].degree;
      if (k < 0) continue;
      for (ComponentId c : degrees_[k]->comps)
        uf.unite(vertex_of(gi, multiply(h, c)), vertex_of(gj, multiply(g, c)));
    }

  struct ClassInfo {
    Tuple rep;
    std::pair<ComponentId, ComponentId> split;
    SubgroupId subgroup = 0;
    std::vector<int> mu;
  };
  std::vector<std::uint32_t> class_of_root(nv, npos32);
  std::vector<ClassInfo> classes;
  for (std::size_t gi = 0; gi < ng; ++gi) {
    if (dd->gen_offset[gi] == npos32) continue;
    ComponentId g = generators_[gi];
    for (ComponentId b : degrees_[n - components_[g].degree]->comps) {
      std::uint32_t v = vertex_of(gi, b);
      std::uint32_t r = uf.find(v);
      Tuple t = concat(components_[g].canonical, components_[b].canonical);
      if (class_of_root[r] == npos32) {
        class_of_root[r] = static_cast<std::uint32_t>(classes.size());
        classes.push_back({std::move(t), {g, b}, 0, {}});
      } else if (t < classes[class_of_root[r]].rep) {
        classes[class_of_root[r]].rep = std::move(t);
        classes[class_of_root[r]].split = {g, b};
      }
    }
  }
  for (auto &ci : classes) {
    ci.subgroup = s.join(components_[ci.split.first].subgroup, components_[ci.split.second].subgroup);
    ci.mu = multidiscriminant(s.subgroup(ci.subgroup), ci.rep);
  }

  // Classes with equal invariants need a braid search to tell them apart.
  UnionFind merge(classes.size());
  std::map<std::pair<SubgroupId, std::vector<int>>, std::vector<std::uint32_t>> buckets;
  for (std::uint32_t i = 0; i < classes.size(); ++i)
    buckets[{classes[i].subgroup, classes[i].mu}].push_back(i);
  for (const auto &[key, members] : buckets)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (merge.find(members[a]) == merge.find(members[b])) continue;
        if (equivalent(s.group(), classes[members[a]].rep, classes[members[b]].rep, caps_))
          merge.unite(members[a], members[b]);
      }

  std::vector<std::uint32_t> final_of(classes.size());
  std::vector<std::uint32_t> roots;
  for (std::uint32_t i = 0; i < classes.size(); ++i) {
    std::uint32_t r = merge.find(i);
    if (r == i) roots.push_back(i);
    else if (classes[i].rep < classes[r].rep) {
      classes[r].rep = classes[i].rep;
      classes[r].split = classes[i].split;
    }
  }
  std::sort(roots.begin(), roots.end(),
            [&](std::uint32_t a, std::uint32_t b) { return classes[a].rep < classes[b].rep; });
  std::vector<std::uint32_t> local_of_root(classes.size(), npos32);
  for (std::uint32_t k = 0; k < roots.size(); ++k) {
    auto &ci = classes[roots[k]];
    local_of_root[roots[k]] = k;
    Component comp;
    comp.id = static_cast<ComponentId>(components_.size());
    comp.degree = n;
    comp.canonical = ci.rep;
    comp.subgroup = ci.subgroup;
    comp.mu = ci.mu;
    comp.split = ci.split;
    comp.index_in_degree = k;
    dd->comps.push_back(comp.id);
    components_.push_back(std::move(comp));
    generator_index_.push_back(-1);
  }
  for (std::uint32_t i = 0; i < classes.size(); ++i)
    final_of[i] = local_of_root[merge.find(i)];
  dd->vertex_local.assign(nv, npos32);
  for (std::uint32_t v = 0; v < nv; ++v)
    dd->vertex_local[v] = final_of[class_of_root[uf.find(v)]];
  degrees_.push_back(std::move(dd));
}

ComponentId MonoidTable::lookup_vertex(int n, ComponentId gen, ComponentId rest) const {
  const auto &dd = *degrees_[n];
  std::int32_t gi = generator_index_[gen];
  std::uint32_t off = dd.gen_offset.at(gi);
  if (off == npos32) throw Error("internal: missing closure vertex");
  return dd.comps[dd.vertex_local[off + components_[rest].index_in_degree]];
}

std::optional<ComponentId> MonoidTable::find(const Tuple &t) const {
  const int width = setting_->classes().xi_total();
  if (t.size() % width) return std::nullopt;
  int n = static_cast<int>(t.size() / width);
  if (n > bruteforce_degree_) return std::nullopt;
  Tuple lt(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto li = setting_->letter_index(t[k]);
    if (!li) return std::nullopt;
    lt[k] = *li;
  }
  const auto &dd = *degrees_[n];
  auto i = dd.find_code(encode(lt));
  if (!i) return std::nullopt;
  return dd.comps[dd.local[*i]];
}

ComponentId MonoidTable::multiply(ComponentId a, ComponentId b) const {
  if (a == identity()) return b;
  if (b == identity()) return a;
  const Component &ca = components_.at(a);
  const Component &cb = components_.at(b);
  const int n = ca.degree + cb.degree;
  if (n > max_degree_)
    throw InvalidArgument("product degree " + std::to_string(n) + " exceeds the table cap " +
                          std::to_string(max_degree_));
  const std::uint64_t key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->products.find(key);
    if (it != memo_->products.end()) return it->second;
  }
  ComponentId out;
  if (n < static_cast<int>(degrees_.size()) && degrees_[n]->method == DegreeMethod::BruteForce) {
    auto r = find(concat(ca.canonical, cb.canonical));
    if (!r) throw Error("internal: product not found among enumerated tuples");
    out = *r;
  } else {
    if (n >= static_cast<int>(degrees_.size())) throw Error("internal: degree not built yet");
    ComponentId g = a, rest = b;
    if (!ca.non_factorizable) {
      g = ca.split->first;
      rest = multiply(ca.split->second, b);
    }
    out = lookup_vertex(n, g, rest);
  }
  std::lock_guard lock(memo_->mutex);
  memo_->products.emplace(key, out);
  return out;
}

ComponentId MonoidTable::multiply_all(const std::vector<ComponentId> &factors) const {
  ComponentId acc = identity();
  for (ComponentId f : factors)
    acc = multiply(acc, f);
  return acc;
}

std::vector<ComponentId> MonoidTable::factorization(ComponentId id) const {
  std::vector<ComponentId> out;
  while (id != identity()) {
    const auto &c = components_.at(id);
    if (c.non_factorizable) {
      out.push_back(id);
      break;
    }
    out.push_back(c.split->first);
    id = c.split->second;
  }
  return out;
}

std::vector<ComponentId> MonoidTable::non_factorizable() const { return generators_; }

NonFactorizableReport non_factorizable(const MonoidTable &table) {
  NonFactorizableReport r;
  r.components = table.non_factorizable();
  r.bounds = table.bounds();
  for (ComponentId c : r.components)
    r.observed_max_degree = std::max(r.observed_max_degree, table.component(c).degree);
  r.complete = BigInt(table.max_degree()) >= r.bounds.certified();
  r.exponent_bound_reached = BigInt(table.max_degree()) >= r.bounds.exponent_bound;
  return r;
}

std::optional<ComponentId> factor(const MonoidTable &table, ComponentId y, ComponentId x) {
  const auto &cy = table.component(y);
  const auto &cx = table.component(x);
  if (cx.degree > cy.degree) throw InvalidArgument("deg x exceeds deg y");
  if (x == y) return MonoidTable::identity();
  for (ComponentId z : table.degree(cy.degree - cx.degree)) {
    if (table.component(z).subgroup != cy.subgroup) continue;
    if (table.multiply(z, x) == y) return z;
  }
  return std::nullopt;
}

std::uint64_t kappa(const Setting &setting, const SubgroupRecord &h) {
  std::uint64_t k = 0;
  for (const auto &c : h.dh_classes)
    k = std::max<std::uint64_t>(k, c.size() * setting.group().element_order(c.front()));
  return k;
}

bool factorization_hypothesis(const MonoidTable &table, ComponentId y, ComponentId x) {
  const auto &s = table.setting();
  const auto &cy = table.component(y);
  const auto &cx = table.component(x);
  if (!s.contains(cy.subgroup, cx.subgroup)) return false;
  const auto &h = s.subgroup(cy.subgroup);
  auto mx = multidiscriminant(h, cx.canonical);
  const std::uint64_t k = kappa(s, h);
  for (std::size_t c = 0; c < mx.size(); ++c) {
    std::uint64_t need = static_cast<std::uint64_t>(mx[c]) + (mx[c] > 0 ? k : 0);
    if (static_cast<std::uint64_t>(cy.mu[c]) < need) return false;
  }
  return true;
}

std::uint64_t HilbertTable::count(SubgroupId h, int n) const {
  auto it = counts.find(h);
  if (it == counts.end() || n < 0 || n > max_degree) return 0;
  return it->second[n];
}

HilbertTable hilbert_table(const MonoidTable &table) {
  HilbertTable ht;
  ht.max_degree = table.max_degree();
  ht.totals.assign(ht.max_degree + 1, 0);
  for (SubgroupId h = 0; h < table.setting().sub_count(); ++h)
    ht.counts[h].assign(ht.max_degree + 1, 0);
  for (int n = 0; n <= ht.max_degree; ++n)
    for (ComponentId c : table.degree(n)) {
      auto &row = ht.counts[table.component(c).subgroup];
      row.resize(ht.max_degree + 1, 0);
      ++row[n];
      ++ht.totals[n];
    }
  return ht;
}

bool in_subspace(const Setting &setting, Subspace kind, SubgroupId h, const Component &c) {
  const SubgroupId k = c.subgroup;
  const bool k_contains_h = setting.contains(k, h);
  const bool h_contains_k = setting.contains(h, k);
  switch (kind) {
  case Subspace::I: return k_contains_h;
  case Subspace::IStar: return k_contains_h && !h_contains_k;
  case Subspace::J: return !(h_contains_k && !k_contains_h);
  case Subspace::JStar: return !h_contains_k;
  case Subspace::RH: return h_contains_k;
  }
  return false;
}

} // namespace hurwitz
