#include "doctest.h"
#include "helpers.hpp"

#include <map>

#include "hurwitz/errors.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;
using namespace hurwitz::test;

namespace {

std::size_t count_degree(const MonoidTable &t, int n) { return t.degree(n).size(); }

// Maps every component of `small` onto `full` through the braid orbit of its representative.
std::vector<ComponentId> match(const MonoidTable &small, const MonoidTable &full) {
  std::vector<ComponentId> m(small.size());
  for (ComponentId c = 0; c < small.size(); ++c) {
    auto id = full.find(small.component(c).canonical);
    REQUIRE(id);
    m[c] = *id;
  }
  return m;
}

} // namespace

TEST_SUITE("component_monoid") {

TEST_CASE("S3 components") {
  auto t = MonoidTable::build(fixture("s3"), 8);
  const auto &s = t.setting();
  CHECK(count_degree(t, 0) == 1);
  CHECK(count_degree(t, 1) == 0);
  CHECK(count_degree(t, 2) == 3);
  CHECK(count_degree(t, 3) == 0);
  CHECK(count_degree(t, 4) == 4);
  std::vector<std::size_t> orders;
  for (ComponentId c : t.degree(2))
    orders.push_back(s.subgroup(t.component(c).subgroup).order());
  CHECK(orders == std::vector<std::size_t>{2, 2, 2});

  const auto &g = s.group();
  auto a = t.find(tup(g, {"(1 2)", "(1 2)"}));
  auto b = t.find(tup(g, {"(2 3)", "(2 3)"}));
  REQUIRE(a);
  REQUIRE(b);
  ComponentId ab = t.multiply(*a, *b);
  CHECK(t.component(ab).degree == 4);
  CHECK(t.component(ab).subgroup == s.whole_group_id());
  CHECK(t.multiply(*a, MonoidTable::identity()) == *a);
  CHECK(t.multiply(*a, *b) == t.multiply(*b, *a));

  auto nf = non_factorizable(t);
  CHECK(nf.components.size() == 3);
  CHECK(nf.complete);
  for (ComponentId c : nf.components)
    CHECK(t.component(c).degree == 2);
}

TEST_CASE("non-factorizable components of S_d are the squares of transpositions") {
  for (int d = 3; d <= 4; ++d) {
    auto t = MonoidTable::build(symmetric_setting(d), 8);
    auto nf = non_factorizable(t);
    CHECK(nf.complete);
    CHECK(nf.components.size() == static_cast<std::size_t>(d * (d - 1) / 2));
    CHECK(nf.observed_max_degree == 2);
    CHECK(nf.bounds.refined_bound);
  }
  // Bound reported for S_4: max(exp, (exp - 1) A) with exp = 12, A = 6.
  CHECK(factorization_bounds(*symmetric_setting(4)).exponent_bound == 66);
}

TEST_CASE("Hilbert tables") {
  auto s4 = fixture("s4");
  auto t = MonoidTable::build(s4, 10);
  auto hf = hilbert_table(t);
  auto klein = sub(*s4, {"(1 2)", "(3 4)"});
  CHECK(hf.count(klein, 4) == 1);
  CHECK(hf.count(klein, 6) == 2);
  CHECK(hf.count(klein, 8) == 3);
  CHECK(hf.count(s4->trivial_id(), 0) == 1);
  for (int n = 1; n <= 10; ++n)
    CHECK(hf.count(s4->trivial_id(), n) == 0);
  std::vector<std::uint64_t> totals(hf.totals.begin(), hf.totals.end());
  CHECK(totals == std::vector<std::uint64_t>{1, 0, 6, 0, 13, 0, 17, 0, 20, 0, 23});
  // Every component's group is D-generated.
  for (ComponentId c = 0; c < t.size(); ++c)
    CHECK(t.component(c).subgroup < s4->sub_count());

  auto s3 = MonoidTable::build(fixture("s3"), 12);
  auto hf3 = hilbert_table(s3);
  for (int n = 0; n <= 12; ++n)
    CHECK(hf3.count(s3.setting().whole_group_id(), n) == ((n % 2 == 0 && n >= 4) ? 1u : 0u));
}

TEST_CASE("grading and multidiscriminants are additive") {
  auto t = MonoidTable::build(fixture("s4"), 8);
  const auto &s = t.setting();
  for (ComponentId a : t.degree(2))
    for (ComponentId b : t.degree(4)) {
      ComponentId ab = t.multiply(a, b);
      CHECK(t.component(ab).degree == 6);
      const auto &whole = s.subgroup(s.whole_group_id());
      auto ma = multidiscriminant(whole, t.component(a).canonical);
      auto mb = multidiscriminant(whole, t.component(b).canonical);
      auto mab = multidiscriminant(whole, t.component(ab).canonical);
      CHECK(mab[0] == ma[0] + mb[0]);
    }
  SuiteOptions o;
  auto laws = check_monoid_laws(t, o);
  CHECK_MESSAGE(laws.passed(), laws.detail);
}

TEST_CASE("factor") {
  auto t = MonoidTable::build(fixture("s3"), 8);
  const auto &s = t.setting();
  const auto &g = s.group();
  ComponentId y = 0;
  for (ComponentId c : t.degree(6))
    if (t.component(c).subgroup == s.whole_group_id()) y = c;
  REQUIRE(y != 0);
  ComponentId x = *t.find(tup(g, {"(1 2)", "(1 2)"}));
  auto z = factor(t, y, x);
  REQUIRE(z);
  CHECK(t.component(*z).degree == 4);
  CHECK(t.component(*z).subgroup == s.whole_group_id());
  CHECK(t.multiply(*z, x) == y);
  CHECK(factor(t, y, y) == MonoidTable::identity());
  CHECK_THROWS_AS(factor(t, x, y), InvalidArgument);

  auto r = check_factorization(t);
  CHECK_MESSAGE(r.passed(), r.detail);
}

TEST_CASE("closure degrees agree with brute force") {
  for (const char *name : {"s3", "s4"}) {
    auto s = fixture(name);
    auto full = MonoidTable::build(s, 10);
    Caps caps;
    caps.max_bruteforce_tuples = std::string(name) == "s3" ? 30 : 10000;
    auto mixed = MonoidTable::build(s, 10, caps);
    CHECK(mixed.bruteforce_degree() < 10);
    CHECK(mixed.method(10) == DegreeMethod::Closure);
    auto m = match(mixed, full);
    for (int n = 0; n <= 10; ++n) {
      CHECK(mixed.degree(n).size() == full.degree(n).size());
      std::vector<ComponentId> img;
      for (ComponentId c : mixed.degree(n)) {
        img.push_back(m[c]);
        CHECK(mixed.component(c).subgroup == full.component(m[c]).subgroup);
        CHECK(mixed.component(c).mu == full.component(m[c]).mu);
      }
      std::sort(img.begin(), img.end());
      CHECK(std::adjacent_find(img.begin(), img.end()) == img.end());
    }
    for (ComponentId a = 1; a < mixed.size(); ++a)
      for (ComponentId b = a; b < mixed.size(); ++b)
        if (mixed.component(a).degree + mixed.component(b).degree <= 10)
          CHECK(m[mixed.multiply(a, b)] == full.multiply(m[a], m[b]));
  }
}

TEST_CASE("closure needs exhaustive degrees up to the bound") {
  Caps caps;
  caps.max_bruteforce_tuples = 10; // S_4: degree 2 only, bound 6
  CHECK_THROWS_AS(MonoidTable::build(fixture("s4"), 8, caps), CapExceeded);
}

TEST_CASE("subspace predicates") {
  auto t = MonoidTable::build(fixture("s4"), 8);
  const auto &s = t.setting();
  for (SubgroupId h = 0; h < s.sub_count(); ++h)
    for (ComponentId c = 0; c < t.size(); ++c) {
      const auto &comp = t.component(c);
      bool i = in_subspace(s, Subspace::I, h, comp);
      bool is = in_subspace(s, Subspace::IStar, h, comp);
      bool j = in_subspace(s, Subspace::J, h, comp);
      bool js = in_subspace(s, Subspace::JStar, h, comp);
      bool rh = in_subspace(s, Subspace::RH, h, comp);
      CHECK(is == (i && js));
      CHECK(j == (i || js));
      CHECK(rh == !js);
    }
}

} // TEST_SUITE
