#include "hurwitz/braid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <unordered_set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

void check_index(std::size_t i, std::size_t n) {
  if (i < 1 || i + 1 > n)
    throw InvalidArgument("braid index " + std::to_string(i) + " out of range for length " +
                          std::to_string(n));
}

// Packs tuples in radix |G| into a u64 when the tuple space fits, otherwise
// into a byte string. Both keys compare like the tuples themselves.
struct U64Codec {
  std::uint64_t radix;
  std::uint64_t encode(const Tuple &t) const {
    std::uint64_t c = 0;
    for (ElemId x : t)
      c = c * radix + x;
    return c;
  }
  void decode(std::uint64_t c, Tuple &t) const {
    for (std::size_t k = t.size(); k-- > 0;) {
      t[k] = static_cast<ElemId>(c % radix);
      c /= radix;
    }
  }
};

struct StringCodec {
  std::string encode(const Tuple &t) const {
    std::string s(t.size() * 4, '\0');
    for (std::size_t k = 0; k < t.size(); ++k)
      for (int b = 0; b < 4; ++b)
        s[4 * k + b] = static_cast<char>((t[k] >> (8 * (3 - b))) & 0xff);
    return s;
  }
  void decode(const std::string &s, Tuple &t) const {
    for (std::size_t k = 0; k < t.size(); ++k) {
      ElemId x = 0;
      for (int b = 0; b < 4; ++b)
        x = (x << 8) | static_cast<unsigned char>(s[4 * k + b]);
      t[k] = x;
    }
  }
};

bool fits_u64(std::size_t order, std::size_t len) {
  return static_cast<double>(len) * std::log2(static_cast<double>(std::max<std::size_t>(order, 2))) < 63.0;
}

// BFS over the orbit of `start`. Stops early when `target` is seen or `stop` accepts a member.
template <class Codec>
OrbitRecord bfs(const GroupContext &group, const Tuple &start, const Tuple *target,
                const Caps &caps, const Codec &codec, bool &hit,
                const std::function<bool(const Tuple &)> &stop = {}) {
  using Key = decltype(codec.encode(start));
  const std::size_t n = start.size();
  std::unordered_set<Key> seen;
  std::vector<Key> frontier{codec.encode(start)};
  seen.insert(frontier.front());
  Key best = frontier.front();
  const Key goal = target ? codec.encode(*target) : Key{};
  hit = (target && goal == best) || (stop && stop(start));
  Tuple t(n);
  std::vector<Key> next;
  while (!frontier.empty() && !hit) {
    next.clear();
    for (const Key &k : frontier) {
      codec.decode(k, t);
      for (std::size_t i = 1; i < n; ++i) {
        for (int dir = 0; dir < 2; ++dir) {
          Tuple u = dir == 0 ? braid_act(group, i, t) : braid_act_inv(group, i, t);
          Key ku = codec.encode(u);
          if (!seen.insert(ku).second) continue;
          if (seen.size() > caps.max_orbit_size)
            throw CapExceeded("max_orbit_size", caps.max_orbit_size, "braid orbit too large");
          if (ku < best) best = ku;
          if ((target && ku == goal) || (stop && stop(u))) hit = true;
          next.push_back(std::move(ku));
        }
      }
    }
    std::swap(frontier, next);
  }
  OrbitRecord r;
  r.canonical.resize(n);
  codec.decode(best, r.canonical);
  r.size = seen.size();
  return r;
}

} // namespace

Tuple braid_act(const GroupContext &group, std::size_t i, Tuple t) {
  check_index(i, t.size());
  ElemId a = t[i - 1], b = t[i];
  t[i - 1] = group.conj(b, a);
  t[i] = a;
  return t;
}

Tuple braid_act_inv(const GroupContext &group, std::size_t i, Tuple t) {
  check_index(i, t.size());
  ElemId a = t[i - 1], b = t[i];
  t[i - 1] = b;
  t[i] = group.conj(a, group.inv(b));
  return t;
}

Tuple apply_word(const GroupContext &group, const BraidWord &word, Tuple t) {
  for (int letter : word) {
    if (letter == 0) throw InvalidArgument("braid letter 0 is not allowed");
    auto i = static_cast<std::size_t>(std::abs(letter));
    t = letter > 0 ? braid_act(group, i, std::move(t)) : braid_act_inv(group, i, std::move(t));
  }
  return t;
}

BraidWord random_word(std::size_t tuple_length, std::size_t max_length, std::mt19937_64 &rng) {
  BraidWord w;
  if (tuple_length < 2) return w;
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> idx(1, static_cast<int>(tuple_length) - 1);
  std::bernoulli_distribution sign(0.5);
  std::size_t l = len(rng);
  for (std::size_t k = 0; k < l; ++k) {
    int i = idx(rng);
    w.push_back(sign(rng) ? i : -i);
  }
  return w;
}

ElemId product(const GroupContext &group, const Tuple &t) {
  ElemId p = GroupContext::identity_id;
  for (ElemId x : t)
    p = group.mul(p, x);
  return p;
}

std::vector<ElemId> generated_elements(const GroupContext &group, const Tuple &t) {
  return group.closure(t);
}

std::vector<int> class_counts(const GroupContext &group, const Tuple &t) {
  std::vector<int> counts(group.classes().size(), 0);
  for (ElemId x : t)
    ++counts[group.class_of(x)];
  return counts;
}

std::vector<int> multidiscriminant(const SubgroupRecord &h, const Tuple &t) {
  std::vector<int> mu(h.dh_classes.size(), 0);
  for (ElemId x : t) {
    if (!h.contains(x)) throw InvalidArgument("tuple entry is not in the subgroup");
    if (auto c = h.dh_class_of(x)) ++mu[*c];
  }
  return mu;
}

OrbitRecord orbit(const GroupContext &group, const Tuple &t, const Caps &caps) {
  if (t.empty()) throw InvalidArgument("orbit of the empty tuple");
  bool hit = false;
  OrbitRecord r = fits_u64(group.order(), t.size())
                      ? bfs(group, t, nullptr, caps, U64Codec{group.order()}, hit)
                      : bfs(group, t, nullptr, caps, StringCodec{}, hit);
  r.product = product(group, t);
  r.subgroup_order = generated_elements(group, t).size();
  r.class_counts = class_counts(group, t);
  return r;
}

bool equivalent(const GroupContext &group, const Tuple &t1, const Tuple &t2, const Caps &caps) {
  if (t1.size() != t2.size()) throw InvalidArgument("tuples have different lengths");
  if (t1 == t2) return true;
  if (product(group, t1) != product(group, t2)) return false;
  if (class_counts(group, t1) != class_counts(group, t2)) return false;
  if (generated_elements(group, t1) != generated_elements(group, t2)) return false;
  bool hit = false;
  if (fits_u64(group.order(), t1.size()))
    bfs(group, t1, &t2, caps, U64Codec{group.order()}, hit);
  else
    bfs(group, t1, &t2, caps, StringCodec{}, hit);
  return hit;
}

bool orbit_any(const GroupContext &group, const Tuple &t, const std::function<bool(const Tuple &)> &pred,
               const Caps &caps) {
  bool hit = false;
  if (t.size() < 2) return pred(t);
  if (fits_u64(group.order(), t.size()))
    bfs(group, t, nullptr, caps, U64Codec{group.order()}, hit, pred);
  else
    bfs(group, t, nullptr, caps, StringCodec{}, hit, pred);
  return hit;
}

Tuple conjugate_tuple(const GroupContext &group, const Tuple &t, ElemId h) {
  Tuple out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k)
    out[k] = group.conj(t[k], h);
  return out;
}

Tuple concat(const Tuple &a, const Tuple &b) {
  Tuple out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

} // namespace hurwitz
