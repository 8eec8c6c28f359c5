#include "hurwitz/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

BigInt binom_nonneg(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

void sort_blocks(std::vector<std::uint32_t> &blocks, std::vector<int> *edges) {
  std::vector<std::size_t> idx(blocks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
    return std::countr_zero(blocks[a]) < std::countr_zero(blocks[b]);
  });
  std::vector<std::uint32_t> nb;
  std::vector<int> ne;
  for (auto i : idx) {
    nb.push_back(blocks[i]);
    if (edges) ne.push_back((*edges)[i]);
  }
  blocks = std::move(nb);
  if (edges) *edges = std::move(ne);
}

std::string block_string(std::uint32_t b) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1u) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

} // namespace

void Multigraph::add_edge(int i, int j, int count) {
  if (i == j || i < 0 || j < 0 || i >= d || j >= d) throw InvalidArgument("bad multigraph edge");
  if (i > j) std::swap(i, j);
  edges[{i, j}] += count;
}

int Multigraph::edge_count() const {
  int total = 0;
  for (const auto &[e, m] : edges)
    total += m;
  return total;
}

Multigraph tuple_to_multigraph(int d, const std::vector<Permutation> &t) {
  Multigraph m;
  m.d = d;
  for (const auto &p : t) {
    Permutation::Point i, j;
    if (p.degree() != static_cast<std::size_t>(d) || !p.is_transposition(&i, &j))
      throw InvalidArgument(p.to_string() + " is not a transposition of degree " + std::to_string(d));
    m.add_edge(i, j);
  }
  return m;
}

Multigraph tuple_to_multigraph(const GroupContext &group, const Tuple &t) {
  std::vector<Permutation> perms;
  for (ElemId x : t)
    perms.push_back(group.element(x));
  return tuple_to_multigraph(static_cast<int>(group.degree()), perms);
}

std::string Signature::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) s += " ";
    s += block_string(blocks[k]) + ":" + std::to_string(edges[k]);
  }
  return s;
}

Signature signature(const Multigraph &m) {
  std::vector<int> parent(m.d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &[e, mult] : m.edges)
    parent[find(e.first)] = find(e.second);
  std::map<int, std::uint32_t> masks;
  std::map<int, int> counts;
  for (int v = 0; v < m.d; ++v)
    masks[find(v)] |= 1u << v;
  for (const auto &[e, mult] : m.edges)
    counts[find(e.first)] += mult;
  Signature s;
  for (const auto &[root, mask] : masks) {
    s.blocks.push_back(mask);
    s.edges.push_back(counts[root]);
  }
  sort_blocks(s.blocks, &s.edges);
  return s;
}

Signature halved(const Signature &s) {
  Signature h = s;
  for (int &e : h.edges) {
    if (e % 2) throw InvalidArgument("odd edge count in a block; the tuple is not of product 1");
    e /= 2;
  }
  return h;
}

std::vector<CensusEntry> component_census_sd(int d, int n, const Caps &caps) {
  if (d < 1 || d > caps.max_symmetric_degree)
    throw CapExceeded("max_symmetric_degree", caps.max_symmetric_degree, "symmetric degree out of range");
  if (n < 0) throw InvalidArgument("negative degree");
  std::vector<CensusEntry> out;
  if (n % 2) return out;
  const int e = n / 2;
  std::vector<std::uint32_t> blocks;
  auto emit = [&] {
    std::vector<std::uint32_t> bl = blocks;
    sort_blocks(bl, nullptr);
    std::vector<std::size_t> big;
    int base = 0;
    for (std::size_t k = 0; k < bl.size(); ++k) {
      int v = std::popcount(bl[k]);
      if (v >= 2) {
        big.push_back(k);
        base += v - 1;
      }
    }
    if (base > e) return;
    int extra = e - base;
    if (big.empty()) {
      if (extra) return;
      out.push_back({Signature{bl, std::vector<int>(bl.size(), 0)}, {}});
      return;
    }
    std::vector<int> add(big.size(), 0);
    auto rec = [&](auto &self, std::size_t k, int left) -> void {
      if (k + 1 == big.size()) {
        add[k] = left;
        CensusEntry ce;
        ce.signature.blocks = bl;
        ce.signature.edges.assign(bl.size(), 0);
        for (std::size_t t = 0; t < big.size(); ++t) {
          ce.signature.edges[big[t]] = std::popcount(bl[big[t]]) - 1 + add[t];
          ce.subgroup_blocks.push_back(bl[big[t]]);
        }
        out.push_back(std::move(ce));
        return;
      }
      for (int v = 0; v <= left; ++v) {
        add[k] = v;
        self(self, k + 1, left - v);
      }
    };
    rec(rec, 0, extra);
  };
  auto part = [&](auto &self, int i) -> void {
    if (i == d) {
      emit();
      return;
    }
    for (std::size_t b = 0, nb = blocks.size(); b < nb; ++b) {
      blocks[b] |= 1u << i;
      self(self, i + 1);
      blocks[b] &= ~(1u << i);
    }
    blocks.push_back(1u << i);
    self(self, i + 1);
    blocks.pop_back();
  };
  part(part, 0);
  std::sort(out.begin(), out.end(),
            [](const CensusEntry &a, const CensusEntry &b) { return a.signature < b.signature; });
  return out;
}

std::uint64_t census_full_group(int d, int n, const Caps &caps) {
  const std::uint32_t all = d >= 32 ? ~0u : (1u << d) - 1;
  std::uint64_t c = 0;
  for (const auto &e : component_census_sd(d, n, caps))
    if (e.subgroup_blocks.size() == 1 && e.subgroup_blocks[0] == all) ++c;
  return c;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j)
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

BigInt multinomial3(int d, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != d) return 0;
  return factorial(d) / (factorial(a) * factorial(b) * factorial(c));
}

BigInt hf_closed_form_raw(int d, long long n) {
  BigInt total = 0;
  for (int s = 1; s <= d; ++s)
    for (int w = 1; w <= s; ++w)
      for (int j = 0; j <= w; ++j) {
        BigInt term = binom_nonneg(n - d + s + w - 1, w - 1) *
                      multinomial3(d, s - w, j, d - s + w - j) * stirling2(d - s + w - j, w - j);
        if (j % 2) total -= term;
        else total += term;
      }
  return total;
}

BigInt hf_closed_form(int d, long long n) {
  if (n < 0) throw InvalidArgument("negative degree");
  if (n == 0) return 1;
  return hf_closed_form_raw(d, n);
}

std::pair<BigInt, BigInt> hf_leading_coefficient(int d) {
  const int dp = d / 2;
  BigInt num = factorial(d);
  BigInt den = BigInt(1) << dp;
  den *= factorial(dp) * factorial(std::max(dp - 1, 0));
  if (d % 2) {
    num *= 3 + dp;
    den *= 3;
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  return {num / g, den / g};
}

std::shared_ptr<const Setting> symmetric_setting(int d, const Caps &caps) {
  if (d < 2) throw InvalidArgument("symmetric groups need d >= 2");
  std::vector<Permutation> gens{Permutation::transposition(d, 0, 1)};
  if (d > 2) {
    std::vector<int> cyc(d);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(Permutation::from_cycles(d, {cyc}));
  }
  GroupContext g(gens, caps);
  std::size_t tc = 0;
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    if (g.element(g.classes()[c].front()).is_transposition()) tc = c;
  auto cd = ClassData::make(g, {tc}, {1});
  return Setting::make(std::move(g), std::move(cd));
}

PresentationReport verify_presentation(int d, const MonoidTable &table) {
  const auto &s = table.setting();
  const auto &g = s.group();
  BigInt fact = factorial(d);
  if (g.degree() != static_cast<std::size_t>(d) || BigInt(g.order()) != fact || s.classes().size() != 1 ||
      s.classes().xi[0] != 1 || !g.element(g.classes()[s.classes().classes[0]].front()).is_transposition())
    throw InvalidArgument("table is not for S_d with transpositions and xi = 1");
  if (table.max_degree() < 6) throw InsufficientData("presentation check needs a table to degree 6");

  PresentationReport r;
  r.d = d;
  r.max_degree = 6;
  std::vector<std::pair<int, int>> pairs;
  std::vector<ElemId> tr;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      pairs.emplace_back(i, j);
      tr.push_back(g.id_of(Permutation::transposition(d, i, j)));
    }
  const std::size_t P = pairs.size();
  auto square = [&](std::size_t p) { return Tuple{tr[p], tr[p]}; };
  auto key_of = [&](const std::vector<std::size_t> &mono) {
    Tuple t;
    for (auto p : mono) {
      auto sq = square(p);
      t.insert(t.end(), sq.begin(), sq.end());
    }
    if (auto k = table.find(t)) return *k;
    std::vector<ComponentId> factors;
    for (auto p : mono)
      factors.push_back(*table.find(square(p)));
    return table.multiply_all(factors);
  };

  // (a)
  std::vector<ComponentId> xs;
  bool ok = table.degree(2).size() == P;
  for (std::size_t p = 0; p < P; ++p) {
    auto k = table.find(square(p));
    if (!k) {
      ok = false;
      continue;
    }
    xs.push_back(*k);
  }
  auto nf = table.non_factorizable();
  std::sort(nf.begin(), nf.end());
  auto xs_sorted = xs;
  std::sort(xs_sorted.begin(), xs_sorted.end());
  r.generators_ok = ok && std::adjacent_find(xs_sorted.begin(), xs_sorted.end()) == xs_sorted.end() &&
                    nf == xs_sorted;
  if (!ok) return r;

  // (b)
  auto pair_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) -
                                    pairs.begin());
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        auto ij = pair_index(i, j), jk = pair_index(j, k), ik = pair_index(i, k);
        ComponentId a = key_of({ij, jk}), b = key_of({ik, jk}), c = key_of({ij, ik});
        r.relations_checked += 2;
        r.relations_failed += (a != b) + (b != c);
      }
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t q = p + 1; q < P; ++q) {
      ++r.relations_checked;
      if (key_of({p, q}) != key_of({q, p})) ++r.relations_failed;
    }

  // (c)
  auto sig_of = [&](const std::vector<std::size_t> &mono) {
    Multigraph m;
    m.d = d;
    for (auto p : mono)
      m.add_edge(pairs[p].first, pairs[p].second);
    return signature(m);
  };
  auto neighbours = [&](const std::vector<std::size_t> &mono) {
    std::set<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < mono.size(); ++x)
      for (std::size_t y = x + 1; y < mono.size(); ++y) {
        auto [a, b] = pairs[mono[x]];
        auto [c, e] = pairs[mono[y]];
        std::set<int> verts{a, b, c, e};
        if (verts.size() != 3 || mono[x] == mono[y]) continue;
        std::vector<int> v(verts.begin(), verts.end());
        std::size_t tri[3] = {pair_index(v[0], v[1]), pair_index(v[0], v[2]), pair_index(v[1], v[2])};
        for (int drop = 0; drop < 3; ++drop) {
          auto next = mono;
          next.erase(next.begin() + y);
          next.erase(next.begin() + x);
          for (int t = 0; t < 3; ++t)
            if (t != drop) next.push_back(tri[t]);
          std::sort(next.begin(), next.end());
          if (next != mono) out.insert(std::move(next));
        }
      }
    return out;
  };
  for (int e = 1; 2 * e <= r.max_degree; ++e) {
    std::vector<std::vector<std::size_t>> monos;
    std::vector<std::size_t> cur;
    auto rec = [&](auto &self, std::size_t from) -> void {
      if (cur.size() == static_cast<std::size_t>(e)) {
        monos.push_back(cur);
        return;
      }
      for (std::size_t p = from; p < P; ++p) {
        cur.push_back(p);
        self(self, p);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    r.monomials += monos.size();
    std::map<Signature, std::vector<std::vector<std::size_t>>> by_sig;
    std::map<Signature, ComponentId> sig_key;
    std::map<ComponentId, Signature> key_sig;
    for (const auto &mo : monos) {
      Signature sg = sig_of(mo);
      ComponentId k = key_of(mo);
      by_sig[sg].push_back(mo);
      auto [it, fresh] = sig_key.emplace(sg, k);
      if (!fresh && it->second != k) ++r.key_mismatches;
      auto [it2, fresh2] = key_sig.emplace(k, sg);
      if (!fresh2 && it2->second != sg) ++r.key_mismatches;
    }
    r.signature_classes += by_sig.size();
    for (const auto &[sg, members] : by_sig) {
      std::set<std::vector<std::size_t>> seen{members.front()};
      std::deque<std::vector<std::size_t>> queue{members.front()};
      while (!queue.empty()) {
        auto mo = queue.front();
        queue.pop_front();
        for (auto &nb : neighbours(mo))
          if (seen.insert(nb).second) queue.push_back(nb);
      }
      for (const auto &mo : members)
        if (!seen.count(mo)) {
          ++r.disconnected_classes;
          break;
        }
    }
  }
  return r;
}

std::string census_dot(int d, const std::vector<CensusEntry> &census) {
  std::ostringstream os;
  os << "graph census {\n";
  for (std::size_t k = 0; k < census.size(); ++k) {
    const auto &sg = census[k].signature;
    os << "  subgraph cluster_" << k << " {\n    label=\"" << sg.to_string() << "\";\n";
    for (int v = 0; v < d; ++v)
      os << "    s" << k << "_" << v << " [label=\"" << v + 1 << "\"];\n";
    for (std::size_t b = 0; b < sg.blocks.size(); ++b) {
      std::vector<int> verts;
      for (int v = 0; v < d; ++v)
        if (sg.blocks[b] >> v & 1u) verts.push_back(v);
      if (verts.size() < 2) continue;
      // Path through the block, extra edges on its first pair.
      int extra = sg.edges[b] - static_cast<int>(verts.size() - 1);
      for (std::size_t t = 0; t + 1 < verts.size(); ++t) {
        int mult = 1 + (t == 0 ? extra : 0);
        for (int c = 0; c < mult; ++c)
          os << "    s" << k << "_" << verts[t] << " -- s" << k << "_" << verts[t + 1] << ";\n";
      }
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace hurwitz
