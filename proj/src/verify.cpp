#include "hurwitz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "hurwitz/asymptotics.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/symmetric.hpp"

namespace hurwitz {

namespace {

constexpr std::size_t chunk_size = 50;

// Thread-safe tally for one check; keeps the first failure message.
struct Tally {
  std::atomic<std::size_t> cases{0};
  std::atomic<std::size_t> failures{0};
  std::mutex mutex;
  std::string first;
  std::size_t first_key = SIZE_MAX;

  void record(bool ok, std::size_t key, const std::function<std::string()> &why) {
    ++cases;
    if (ok) return;
    ++failures;
    std::lock_guard lock(mutex);
    if (key < first_key) {
      first_key = key;
      first = why();
    }
  }

  CheckResult result(std::string name) {
    return CheckResult{std::move(name), cases.load(), failures.load(), first};
  }
};

std::string show(const GroupContext &g, const Tuple &t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ", ";
    s += g.element(t[k]).to_string();
  }
  return s + ")";
}

ElemId random_letter(const Setting &s, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> pick(0, s.letters().size() - 1);
  return s.letters()[pick(rng)];
}

Tuple random_letters(const Setting &s, std::size_t n, std::mt19937_64 &rng) {
  Tuple t(n);
  for (auto &x : t)
    x = random_letter(s, rng);
  return t;
}

template <class T>
const T &random_pick(const std::vector<T> &v, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  return v[pick(rng)];
}

std::size_t chunks_for(std::size_t samples) { return (samples + chunk_size - 1) / chunk_size; }

// Runs `one(key, rng)` for `samples` keys split into fixed chunks.
void sample(std::size_t samples, const SuiteOptions &o, std::uint64_t salt,
            const std::function<void(std::size_t, std::mt19937_64 &)> &one) {
  parallel_chunks(chunks_for(samples), o.workers, o.seed ^ salt, [&](std::size_t chunk, std::mt19937_64 &rng) {
    for (std::size_t k = chunk * chunk_size; k < std::min(samples, (chunk + 1) * chunk_size); ++k)
      one(k, rng);
  });
}

} // namespace

void parallel_chunks(std::size_t chunks, unsigned workers, std::uint64_t seed,
                     const std::function<void(std::size_t, std::mt19937_64 &)> &body) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      std::size_t c = next++;
      if (c >= chunks) return;
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(c)};
      std::mt19937_64 rng(seq);
      try {
        body(c, rng);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = chunks;
      }
    }
  };
  unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < w; ++i)
    pool.emplace_back(run);
  run();
  for (auto &t : pool)
    t.join();
  if (error) std::rethrow_exception(error);
}

Tuple random_product_one(const Setting &s, std::size_t n, std::mt19937_64 &rng) {
  if (n == 0) return {};
  Tuple t = random_letters(s, n - 1, rng);
  t.push_back(s.group().inv(product(s.group(), t)));
  return t;
}

CheckResult check_braid_invariance(const Setting &s, const SuiteOptions &o) {
  const auto &g = s.group();
  const auto &whole = s.subgroup(s.whole_group_id());
  Tally tally;
  sample(o.braid_samples, o, 0x1, [&](std::size_t key, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, o.max_tuple_length));
    Tuple t = random_letters(s, len(rng), rng);
    BraidWord w = random_word(t.size(), o.max_word_length, rng);
    Tuple u = apply_word(g, w, t);
    SubgroupId h = s.generated(t);
    const auto &hr = s.subgroup(h);
    bool ok = product(g, u) == product(g, t) && generated_elements(g, u) == generated_elements(g, t) &&
              class_counts(g, u) == class_counts(g, t) &&
              multidiscriminant(hr, u) == multidiscriminant(hr, t) &&
              multidiscriminant(whole, u) == multidiscriminant(whole, t);
    tally.record(ok, key, [&] { return "word of length " + std::to_string(w.size()) + " on " + show(g, t); });
  });
  return tally.result("braid invariance");
}

CheckResult check_commutation_lemma(const Setting &s, const SuiteOptions &o) {
  const auto &g = s.group();
  Tally tally;
  sample(o.lemma_samples, o, 0x2, [&](std::size_t key, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> len(2, 3);
    Tuple a = random_product_one(s, len(rng), rng);
    Tuple b = random_product_one(s, len(rng), rng);
    bool ok = equivalent(g, concat(a, b), concat(b, a));
    tally.record(ok, key, [&] { return show(g, a) + " and " + show(g, b); });
  });
  return tally.result("commutation of product-1 blocks");
}

CheckResult check_rotation_lemma(const Setting &s, const SuiteOptions &o) {
  const auto &g = s.group();
  Tally tally;
  sample(o.lemma_samples, o, 0x3, [&](std::size_t key, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> len(2, 6);
    Tuple t = random_product_one(s, len(rng), rng);
    Tuple r(t.begin() + 1, t.end());
    r.push_back(t.front());
    bool ok = equivalent(g, t, r);
    tally.record(ok, key, [&] { return show(g, t); });
  });
  return tally.result("rotation");
}

CheckResult check_conjugation_lemma(const Setting &s, const SuiteOptions &o) {
  const auto &g = s.group();
  Tally tally;
  sample(o.lemma_samples, o, 0x4, [&](std::size_t key, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> len(2, 6);
    Tuple t = random_product_one(s, len(rng), rng);
    ElemId h = random_pick(generated_elements(g, t), rng);
    bool ok = equivalent(g, t, conjugate_tuple(g, t, h));
    tally.record(ok, key, [&] { return show(g, t) + " by " + g.element(h).to_string(); });
  });
  return tally.result("conjugation by the generated group");
}

CheckResult check_block_conjugation(const Setting &s, const SuiteOptions &o) {
  const auto &g = s.group();
  Tally tally;
  sample(o.lemma_samples, o, 0x5, [&](std::size_t key, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> outer(0, 1), inner(2, 3);
    Tuple a = random_letters(s, outer(rng), rng);
    Tuple b = random_product_one(s, inner(rng), rng);
    Tuple c = random_letters(s, outer(rng), rng);
    Tuple ac = concat(a, c);
    std::bernoulli_distribution use_outer(ac.empty() ? 0.0 : 0.5);
    ElemId gamma = random_pick(generated_elements(g, use_outer(rng) ? ac : b), rng);
    bool ok = equivalent(g, concat(concat(a, b), c), concat(concat(a, conjugate_tuple(g, b, gamma)), c));
    tally.record(ok, key, [&] {
      return show(g, a) + " " + show(g, b) + " " + show(g, c) + " by " + g.element(gamma).to_string();
    });
  });
  return tally.result("block conjugation");
}

CheckResult check_subgroup_data(const Setting &s) {
  const auto &g = s.group();
  const auto &cd = s.classes();
  Tally tally;
  auto subs = s.d_generated_subgroups();
  std::size_t key = 0;
  tally.record(s.subgroup(s.whole_group_id()).omega == 0, key++, [] { return std::string("Omega(G) != 0"); });
  for (const auto *h : subs) {
    if (h->is_trivial()) continue;
    bool ok = h->omega.has_value();
    if (ok) {
      std::vector<std::size_t> tau = h->tau;
      std::sort(tau.begin(), tau.end());
      bool bijective = tau.size() == cd.size() && std::adjacent_find(tau.begin(), tau.end()) == tau.end();
      ok = *h->omega >= 0 && *h->omega == static_cast<int>(h->dh_classes.size()) - static_cast<int>(cd.size()) &&
           (*h->omega == 0) == bijective;
    }
    tally.record(ok, key++, [&] { return "splitting data of H" + std::to_string(h->id); });
    // Abelianization is a homomorphism.
    bool hom = true;
    const std::size_t step = std::max<std::size_t>(1, h->order() / 64);
    for (std::size_t i = 0; i < h->order() && hom; i += step)
      for (std::size_t j = 0; j < h->order() && hom; j += step) {
        ElemId x = h->elements[i], y = h->elements[j];
        hom = abelianization_coset(*h, g.mul(x, y)) ==
              abelian_mul(*h, abelianization_coset(*h, x), abelianization_coset(*h, y));
      }
    tally.record(hom, key++, [&] { return "abelianization of H" + std::to_string(h->id); });
    for (const auto *k : subs) {
      if (k == h || !k->omega || !h->omega || !k->contains(*h)) continue;
      bool refines = true;
      for (const auto &cls : h->dh_classes) {
        auto target = k->dh_class_of(cls.front());
        for (ElemId x : cls)
          refines = refines && k->dh_class_of(x) == target;
      }
      tally.record(refines, key++, [&] {
        return "classes of H" + std::to_string(h->id) + " split inside H" + std::to_string(k->id);
      });
    }
  }
  return tally.result("subgroup data");
}

CheckResult check_monoid_laws(const MonoidTable &table, const SuiteOptions &o) {
  const auto &s = table.setting();
  const auto &g = s.group();
  const int N = table.max_degree();
  Tally tally;
  std::size_t key = 0;
  auto hf = hilbert_table(table);
  for (int n = 0; n <= N; ++n) {
    std::uint64_t sum = 0;
    for (const auto &[h, row] : hf.counts)
      sum += row[n];
    tally.record(sum == hf.totals[n], key++, [&] { return "Hilbert rows at degree " + std::to_string(n); });
  }
  for (ComponentId c = 0; c < table.size(); ++c) {
    const auto &comp = table.component(c);
    auto counts = class_counts(g, comp.canonical);
    bool ok = product(g, comp.canonical) == GroupContext::identity_id;
    for (std::size_t k = 0; k < s.classes().size(); ++k)
      ok = ok && counts[s.classes().classes[k]] == comp.degree * s.classes().xi[k];
    auto f = table.factorization(c);
    ok = ok && table.multiply_all(f) == c;
    for (ComponentId x : f)
      ok = ok && table.component(x).non_factorizable;
    tally.record(ok, key++, [&] { return "component " + std::to_string(c); });
  }
  if (table.size() > 1) {
    std::vector<ComponentId> nontrivial;
    for (ComponentId c = 1; c < table.size(); ++c)
      nontrivial.push_back(c);
    const std::size_t base = key;
    sample(o.lemma_samples, o, 0x6, [&](std::size_t k, std::mt19937_64 &rng) {
      ComponentId a = random_pick(nontrivial, rng), b = random_pick(nontrivial, rng),
                  c = random_pick(nontrivial, rng);
      const int da = table.component(a).degree, db = table.component(b).degree, dc = table.component(c).degree;
      if (da + db > N) {
        tally.record(true, base + k, {});
        return;
      }
      bool ok = table.multiply(a, b) == table.multiply(b, a) && table.multiply(a, MonoidTable::identity()) == a;
      if (da + db + dc <= N)
        ok = ok && table.multiply(table.multiply(a, b), c) == table.multiply(a, table.multiply(b, c));
      tally.record(ok, base + k, [&] {
        return "components " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c);
      });
    });
  }
  return tally.result("monoid laws");
}

CheckResult check_likely_maps(const Setting &s, int max_n) {
  Tally tally;
  std::size_t key = 0;
  for (const auto *h : s.d_generated_subgroups()) {
    if (!h->omega) continue;
    for (int n = 0; n <= max_n; ++n) {
      BigInt count = count_likely_maps(s, *h, n);
      if (count > 1'000'000) continue;
      auto maps = enumerate_likely_maps(s, *h, n);
      tally.record(BigInt(maps.size()) == count, key++, [&] {
        return "H" + std::to_string(h->id) + " at degree " + std::to_string(n) + ": formula " +
               count.convert_to<std::string>() + ", listed " + std::to_string(maps.size());
      });
    }
  }
  return tally.result("likely-map count");
}

CheckResult check_factorization(const MonoidTable &table) {
  Tally tally;
  std::size_t key = 0;
  for (ComponentId y = 1; y < table.size(); ++y)
    for (ComponentId x = 1; x < table.size(); ++x) {
      if (table.component(x).degree > table.component(y).degree) continue;
      if (!factorization_hypothesis(table, y, x)) continue;
      auto z = factor(table, y, x);
      bool ok = z && table.component(*z).subgroup == table.component(y).subgroup && table.multiply(*z, x) == y;
      tally.record(ok, key++, [&] { return "y = " + std::to_string(y) + ", x = " + std::to_string(x); });
    }
  return tally.result("factorization under the multidiscriminant hypothesis");
}

std::optional<int> symmetric_degree(const Setting &s) {
  const auto &g = s.group();
  const int d = static_cast<int>(g.degree());
  std::uint64_t fact = 1;
  for (int i = 2; i <= d; ++i)
    fact *= i;
  if (d < 2 || g.order() != fact || s.classes().size() != 1 || s.classes().xi[0] != 1) return std::nullopt;
  if (!g.element(g.classes()[s.classes().classes[0]].front()).is_transposition()) return std::nullopt;
  return d;
}

CheckResult check_signature_bijection(int d, const MonoidTable &table) {
  const auto &g = table.setting().group();
  Tally tally;
  for (int n = 0; n <= table.max_degree(); ++n) {
    std::vector<Signature> from_table;
    for (ComponentId c : table.degree(n))
      from_table.push_back(halved(signature(tuple_to_multigraph(g, table.component(c).canonical))));
    std::sort(from_table.begin(), from_table.end());
    std::vector<Signature> census;
    for (auto &e : component_census_sd(d, n))
      census.push_back(e.signature);
    std::sort(census.begin(), census.end());
    bool ok = from_table == census;
    tally.record(ok, static_cast<std::size_t>(n), [&] {
      return "degree " + std::to_string(n) + ": " + std::to_string(from_table.size()) + " components, " +
             std::to_string(census.size()) + " signatures";
    });
  }
  return tally.result("component/signature bijection");
}

CheckResult check_squares_normal_form(int d, const MonoidTable &table, const SuiteOptions &o) {
  const auto &s = table.setting();
  const auto &g = s.group();
  (void)d;
  Tally tally;
  sample(o.lemma_samples, o, 0x7, [&](std::size_t key, std::mt19937_64 &rng) {
    // Product-1 tuples of transpositions: retry until the last entry is one.
    std::uniform_int_distribution<std::size_t> half(1, 3);
    Tuple t;
    for (;;) {
      t = random_product_one(s, 2 * half(rng), rng);
      if (s.letter_index(t.back())) break;
    }
    bool ok = orbit_any(g, t, [](const Tuple &u) {
      for (std::size_t k = 0; k + 1 < u.size(); k += 2)
        if (u[k] != u[k + 1]) return false;
      return true;
    });
    tally.record(ok, key, [&] { return show(g, t); });
  });
  return tally.result("squares normal form");
}

CheckResult check_triangle_moves(int d, const MonoidTable &table) {
  const auto &g = table.setting().group();
  Tally tally;
  std::size_t key = 0;
  auto tr = [&](int a, int b) { return g.id_of(Permutation::transposition(d, a, b)); };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if (i == j || j == k || i == k) continue;
        ElemId ij = tr(i, j), jk = tr(j, k), ik = tr(i, k);
        Tuple base{ij, ij, jk, jk};
        bool ok = equivalent(g, base, Tuple{ik, ik, jk, jk}) && equivalent(g, base, Tuple{ij, ij, ik, ik});
        tally.record(ok, key++, [&] { return show(g, base); });
      }
  return tally.result("triangle moves");
}

CheckResult check_full_group_uniqueness(int d, const MonoidTable &table) {
  const auto &s = table.setting();
  auto hf = hilbert_table(table);
  Tally tally;
  for (int n = 0; n <= table.max_degree(); ++n) {
    std::uint64_t want = (n % 2 == 0 && n >= 2 * d - 2) ? 1 : 0;
    std::uint64_t got = hf.count(s.whole_group_id(), n);
    tally.record(got == want, static_cast<std::size_t>(n), [&] {
      return "degree " + std::to_string(n) + ": " + std::to_string(got) + " components";
    });
  }
  return tally.result("one full-group component from degree 2d-2");
}

CheckResult check_closed_formula(int d, int max_half) {
  Tally tally;
  for (int m = 0; m <= max_half; ++m) {
    auto census = component_census_sd(d, 2 * m).size();
    BigInt f = hf_closed_form(d, m);
    tally.record(f == census, static_cast<std::size_t>(m), [&] {
      return "d = " + std::to_string(d) + ", degree " + std::to_string(2 * m) + ": formula " +
             f.convert_to<std::string>() + ", census " + std::to_string(census);
    });
  }
  return tally.result("closed Hilbert formula");
}

std::vector<CheckResult> run_property_suite(const MonoidTable &table, const SuiteOptions &o) {
  const auto &s = table.setting();
  std::vector<CheckResult> out;
  out.push_back(check_subgroup_data(s));
  out.push_back(check_braid_invariance(s, o));
  out.push_back(check_commutation_lemma(s, o));
  out.push_back(check_rotation_lemma(s, o));
  out.push_back(check_conjugation_lemma(s, o));
  out.push_back(check_block_conjugation(s, o));
  out.push_back(check_monoid_laws(table, o));
  out.push_back(check_likely_maps(s, std::min(table.max_degree(), 12)));
  out.push_back(check_factorization(table));
  if (auto d = symmetric_degree(s)) {
    out.push_back(check_signature_bijection(*d, table));
    out.push_back(check_squares_normal_form(*d, table, o));
    if (*d >= 3) out.push_back(check_triangle_moves(*d, table));
    out.push_back(check_full_group_uniqueness(*d, table));
    out.push_back(check_closed_formula(*d, table.max_degree() / 2));
  }
  return out;
}

} // namespace hurwitz
