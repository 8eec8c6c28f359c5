#include "doctest.h"
#include "helpers.hpp"

#include "hurwitz/errors.hpp"

using namespace hurwitz;
using namespace hurwitz::test;

TEST_SUITE("spectrum") {

TEST_CASE("classification in S4") {
  auto s4 = fixture("s4");
  auto t = MonoidTable::build(s4, 10);
  auto klein = sub(*s4, {"(1 2)", "(3 4)"});
  auto c = classify_subgroup(t, klein);
  CHECK(c.kind == SubgroupKind::FactoredSplitter);
  std::vector<SubgroupId> want{sub(*s4, {"(1 2)"}), sub(*s4, {"(3 4)"})};
  std::sort(want.begin(), want.end());
  auto got = c.factors;
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(c.criterion == true);

  for (const char *a : {"(1 2)", "(2 4)"})
    CHECK(classify_subgroup(t, sub(*s4, {a})).kind == SubgroupKind::NonSplitter);
  CHECK(classify_subgroup(t, sub(*s4, {"(1 2)", "(2 3)"})).kind == SubgroupKind::NonSplitter);
  CHECK(classify_subgroup(t, s4->whole_group_id()).kind == SubgroupKind::NonSplitter);
  CHECK(classify_subgroup(t, s4->trivial_id()).kind == SubgroupKind::Trivial);
}

TEST_CASE("gamma descriptions") {
  auto s4 = fixture("s4");
  auto t = MonoidTable::build(s4, 10);
  auto hf = hilbert_table(t);
  auto origin = gamma_description(t, hf, s4->trivial_id());
  CHECK(origin.status == GammaStatus::Origin);
  CHECK(origin.span.dimension() == 0);

  auto s123 = gamma_description(t, hf, sub(*s4, {"(1 2)", "(2 3)"}));
  CHECK(s123.status == GammaStatus::Described);
  CHECK(s123.span.dimension() == 1);
  CHECK(s123.span.strict);
  // e_H marks the three squares of transpositions inside S_{1,2,3}.
  int ones = 0;
  for (int x : s123.span.basis[0])
    ones += x;
  CHECK(ones == 3);

  auto k = gamma_description(t, hf, sub(*s4, {"(1 2)", "(3 4)"}));
  CHECK(k.status == GammaStatus::Described);
  CHECK(k.span.dimension() == 2);
  CHECK(k.omega == 1);
  for (std::size_t i = 0; i < k.span.basis[0].size(); ++i)
    CHECK(k.span.basis[0][i] * k.span.basis[1][i] == 0);
}

TEST_CASE("generic description of S3 and S4") {
  auto t3 = MonoidTable::build(fixture("s3"), 10);
  auto d3 = spec_description(t3);
  CHECK(d3.strata.size() == 4);
  CHECK(d3.krull_dimension == 1);
  CHECK(d3.complete);
  CHECK(dimension_profile(d3) == std::vector<std::size_t>{1, 4});

  auto t4 = MonoidTable::build(fixture("s4"), 10);
  auto d4 = spec_description(t4);
  CHECK(d4.krull_dimension == 2);
  CHECK(d4.complete);
  CHECK(d4.generators_complete);
  CHECK(d4.generators.size() == 6);
  CHECK(dimension_profile(d4) == std::vector<std::size_t>{1, 11, 3});
  // Fully described strata have dimension Omega + 1.
  for (const auto &st : d4.strata)
    if (st.status == GammaStatus::Described) CHECK(static_cast<int>(st.span.dimension()) == *st.omega + 1);
  CHECK(check_relations(t4, d4, 6) == 0);
}

TEST_CASE("closed form for symmetric groups") {
  auto sp3 = spec_sd(3);
  CHECK(sp3.strata.size() == 4);
  CHECK(sp3.krull_dimension == 1);
  auto sp2 = spec_sd(2);
  CHECK(sp2.strata.size() == 1);
  auto sp4 = spec_sd(4);
  CHECK(sp4.dimension_profile() == std::vector<std::size_t>{1, 11, 3});
  CHECK(sp4.krull_dimension == 2);
  // Bell(d) - 1 nontrivial strata.
  std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int d = 2; d <= 8; ++d) {
    CHECK(spec_sd(d).strata.size() == bell[d] - 1);
    CHECK(spec_sd(d).krull_dimension == d / 2);
  }
  Caps caps;
  caps.max_symmetric_degree = 5;
  CHECK_THROWS_AS(spec_sd(6, caps), CapExceeded);

  // Agreement with the generic path for S_4: same dimension profile, same supports.
  auto t4 = MonoidTable::build(fixture("s4"), 10);
  auto d4 = spec_description(t4);
  CHECK(dimension_profile(d4) == sp4.dimension_profile());

  auto dot = proj_dot(sp4);
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("\"{1,2}\" -- \"{3,4}\"") != std::string::npos);
}

} // TEST_SUITE
