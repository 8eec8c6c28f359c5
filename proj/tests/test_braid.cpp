#include "doctest.h"
#include "helpers.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;
using namespace hurwitz::test;

TEST_SUITE("braid_engine") {

TEST_CASE("sigma_i and its inverse") {
  auto s3 = fixture("s3");
  const auto &g = s3->group();
  CHECK(braid_act(g, 1, tup(g, {"(1 2)", "(1 2)"})) == tup(g, {"(1 2)", "(1 2)"}));
  CHECK(braid_act(g, 1, tup(g, {"(1 2)", "(2 3)"})) == tup(g, {"(1 3)", "(1 2)"}));
  CHECK(braid_act_inv(g, 1, tup(g, {"(1 3)", "(1 2)"})) == tup(g, {"(1 2)", "(2 3)"}));
  CHECK_THROWS_AS(braid_act(g, 0, tup(g, {"(1 2)", "(2 3)"})), InvalidArgument);
  CHECK_THROWS_AS(braid_act(g, 2, tup(g, {"(1 2)", "(2 3)"})), InvalidArgument);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
  for (int k = 0; k < 200; ++k) {
    Tuple t(5);
    for (auto &x : t)
      x = pick(rng);
    std::size_t i = 1 + k % 4;
    CHECK(braid_act_inv(g, i, braid_act(g, i, t)) == t);
    CHECK(braid_act(g, i, braid_act_inv(g, i, t)) == t);
  }
}

TEST_CASE("orbits") {
  auto s3 = fixture("s3");
  const auto &g = s3->group();
  auto o = orbit(g, tup(g, {"(1 2)", "(1 2)"}));
  CHECK(o.size == 1);
  CHECK(orbit(g, tup(g, {"(1 2 3)"})).size == 1);

  Tuple a = tup(g, {"(1 2)", "(1 2)", "(2 3)", "(2 3)"});
  Tuple b = tup(g, {"(1 2)", "(2 3)", "(2 3)", "(1 2)"});
  CHECK(product(g, a) == GroupContext::identity_id);
  CHECK(product(g, b) == GroupContext::identity_id);
  CHECK(generated_elements(g, a).size() == 6);
  CHECK(equivalent(g, a, b));
  // The alternating tuple multiplies to (1 3 2), so it lies in another orbit.
  Tuple alt = tup(g, {"(1 2)", "(2 3)", "(1 2)", "(2 3)"});
  CHECK(product(g, alt) == el(g, "(1 3 2)"));
  CHECK_FALSE(equivalent(g, a, alt));
  auto oa = orbit(g, a), ob = orbit(g, b);
  CHECK(oa.canonical == ob.canonical);
  CHECK(oa.size == ob.size);
  // Canonical is the lexicographic minimum: no member of the orbit is smaller.
  CHECK(orbit(g, oa.canonical).canonical == oa.canonical);
  CHECK(equivalent(g, oa.canonical, a));

  CHECK_THROWS_AS(equivalent(g, a, tup(g, {"(1 2)", "(1 2)"})), InvalidArgument);
  CHECK_FALSE(equivalent(g, tup(g, {"(1 2)", "(1 2)"}), tup(g, {"(1 3)", "(1 3)"})));

  Caps caps;
  caps.max_orbit_size = 3;
  CHECK_THROWS_AS(orbit(g, a, caps), CapExceeded);
}

TEST_CASE("multidiscriminant") {
  auto s4 = fixture("s4");
  const auto &g = s4->group();
  const auto &klein = s4->subgroup(sub(*s4, {"(1 2)", "(3 4)"}));
  CHECK(multidiscriminant(klein, Tuple{}) == std::vector<int>{0, 0});
  auto mu = multidiscriminant(klein, tup(g, {"(1 2)", "(1 2)", "(3 4)", "(3 4)"}));
  CHECK(mu == std::vector<int>{2, 2});
  CHECK_THROWS_AS(multidiscriminant(klein, tup(g, {"(1 3)"})), InvalidArgument);
}

TEST_CASE("braid invariants on random words") {
  for (const char *name : {"s3", "s4", "d4", "q8"}) {
    SuiteOptions o;
    o.braid_samples = 300;
    auto r = check_braid_invariance(*fixture(name), o);
    CHECK_MESSAGE(r.passed(), name, ": ", r.detail);
  }
}

TEST_CASE("braid lemmas") {
  for (const char *name : {"s3", "s4", "d4"}) {
    auto s = fixture(name);
    SuiteOptions o;
    o.lemma_samples = 100;
    for (auto r : {check_commutation_lemma(*s, o), check_rotation_lemma(*s, o), check_conjugation_lemma(*s, o),
                   check_block_conjugation(*s, o)})
      CHECK_MESSAGE(r.passed(), name, " ", r.name, ": ", r.detail);
  }
}

TEST_CASE("orbit_any finds a member") {
  auto s3 = fixture("s3");
  const auto &g = s3->group();
  Tuple b = tup(g, {"(1 2)", "(2 3)", "(1 2)", "(2 3)"});
  ElemId target = el(g, "(1 3)");
  CHECK(orbit_any(g, b, [&](const Tuple &u) { return u.front() == target; }));
  CHECK_FALSE(orbit_any(g, b, [&](const Tuple &u) { return u.front() == GroupContext::identity_id; }));
}

TEST_CASE("worker count does not change results") {
  auto s = fixture("s4");
  SuiteOptions one, four;
  one.braid_samples = four.braid_samples = 400;
  four.workers = 4;
  auto a = check_braid_invariance(*s, one);
  auto b = check_braid_invariance(*s, four);
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
}

} // TEST_SUITE
