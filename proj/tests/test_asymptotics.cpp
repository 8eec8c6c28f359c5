#include "doctest.h"
#include "helpers.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;
using namespace hurwitz::test;

TEST_SUITE("asymptotics") {

TEST_CASE("likely-map counts") {
  auto s4 = fixture("s4");
  const auto &whole = s4->subgroup(s4->whole_group_id());
  const auto &klein = s4->subgroup(sub(*s4, {"(1 2)", "(3 4)"}));
  for (int n = 0; n <= 30; ++n) {
    CHECK(count_likely_maps(*s4, whole, n) == 1);
    CHECK(count_likely_maps(*s4, klein, n) == n + 1);
  }
  auto lc = likely_leading_coefficient(*s4, klein);
  CHECK(lc.first == 1);
  CHECK(lc.second == 1);
  CHECK_THROWS_AS(count_likely_maps(*s4, s4->subgroup(s4->trivial_id()), 2), InvalidArgument);

  auto r = check_likely_maps(*s4, 30);
  CHECK_MESSAGE(r.passed(), r.detail);
  CHECK(check_likely_maps(*fixture("s3"), 30).passed());
}

TEST_CASE("really-likely maps") {
  auto s4 = fixture("s4");
  const auto &klein = s4->subgroup(sub(*s4, {"(1 2)", "(3 4)"}));
  auto rl = enumerate_really_likely(*s4, klein, 4);
  std::vector<std::vector<int>> psis;
  for (const auto &m : rl)
    psis.push_back(m.psi);
  CHECK(psis == std::vector<std::vector<int>>{{0, 4}, {2, 2}, {4, 0}});
  CHECK(enumerate_likely_maps(*s4, klein, 4).size() == 5);

  // Non-splitters: really-likely maps exist exactly on multiples of the period.
  const auto &whole = s4->subgroup(s4->whole_group_id());
  CHECK(non_splitter_period(*s4, whole) == 2);
  for (int n = 0; n <= 10; ++n)
    CHECK(enumerate_really_likely(*s4, whole, n).size() == (n % 2 == 0 ? 1u : 0u));
  CHECK(non_splitter_period(*s4, s4->subgroup(s4->trivial_id())) == 1);
  CHECK_THROWS_AS(non_splitter_period(*s4, klein), InvalidArgument);
}

TEST_CASE("multidiscriminant census") {
  auto s4 = fixture("s4");
  auto t = MonoidTable::build(s4, 10);
  auto klein = sub(*s4, {"(1 2)", "(3 4)"});
  for (int n = 0; n <= 10; ++n)
    for (const auto &[mu, cc] : multidiscriminant_census(t, klein, n)) {
      CHECK(cc.likely);
      if (cc.exact) CHECK(cc.really_likely);
    }
  CHECK(multidiscriminant_census(t, klein, 3).empty());
}

TEST_CASE("stabilization reports") {
  auto s4 = fixture("s4");
  auto t = MonoidTable::build(s4, 12);
  auto hf = hilbert_table(t);
  auto r = stabilization_report(t, hf, s4->whole_group_id());
  CHECK(r.non_splitter);
  CHECK(r.value == 1);
  CHECK(r.period == 2);
  CHECK(r.threshold == 6);
  CHECK(r.off_progression.empty());

  auto klein = sub(*s4, {"(1 2)", "(3 4)"});
  auto g = stabilization_report(t, hf, klein);
  CHECK_FALSE(g.non_splitter);
  CHECK(g.omega == 1);
  CHECK(g.ratio_min >= 0.5);
  CHECK(g.ratio_max <= 1.0);
  CHECK(g.upper_sandwich);
  CHECK(g.census_consistent);

  auto triv = stabilization_report(t, hf, s4->trivial_id());
  CHECK(triv.value == 0);
  CHECK(triv.period == 1);

  // Too few multiples of the period in the window.
  auto small = MonoidTable::build(s4, 8);
  CHECK_THROWS_AS(stabilization_report(small, hilbert_table(small), s4->whole_group_id()), InsufficientData);
}

TEST_CASE("average leading coefficient") {
  auto s4 = fixture("s4");
  auto t = MonoidTable::build(s4, 20);
  auto hf = hilbert_table(t);
  auto klein = sub(*s4, {"(1 2)", "(3 4)"});
  std::vector<SubgroupId> factors{sub(*s4, {"(1 2)"}), sub(*s4, {"(3 4)"})};
  auto a = average_leading_coefficient(t, hf, klein, factors);
  CHECK(a.s == 2);
  CHECK(a.abelianization_order == 4);
  CHECK(a.cumulative == 45);
  CHECK(a.estimate == doctest::Approx(0.9));
  CHECK(a.consistent);

  auto whole = average_leading_coefficient(t, hf, s4->whole_group_id(), {});
  CHECK(whole.s == 1);
  CHECK(whole.relative_error <= 0.25);

  auto q8 = fixture("q8");
  auto tq = MonoidTable::build(q8, 3);
  CHECK_THROWS_AS(average_leading_coefficient(tq, hilbert_table(tq), q8->whole_group_id(), {}), InvalidArgument);
}

} // TEST_SUITE
