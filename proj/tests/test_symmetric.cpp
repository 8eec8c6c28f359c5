#include "doctest.h"
#include "helpers.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;
using namespace hurwitz::test;

namespace {

std::vector<Permutation> perms(std::size_t d, std::initializer_list<const char *> xs) {
  std::vector<Permutation> out;
  for (const char *x : xs)
    out.push_back(Permutation::parse(x, d));
  return out;
}

} // namespace

TEST_SUITE("sym_fastpath") {

TEST_CASE("tuple to multigraph") {
  auto m = tuple_to_multigraph(3, perms(3, {"(1 2)", "(1 2)"}));
  CHECK(m.edges.size() == 1);
  CHECK(m.edges.at({0, 1}) == 2);
  auto m2 = tuple_to_multigraph(3, perms(3, {"(1 2)", "(2 3)", "(1 2)", "(2 3)"}));
  CHECK(m2.edges.at({0, 1}) == 2);
  CHECK(m2.edges.at({1, 2}) == 2);
  CHECK(tuple_to_multigraph(3, {}).edges.empty());
  CHECK_THROWS_AS(tuple_to_multigraph(3, perms(3, {"(1 2 3)"})), InvalidArgument);
  Multigraph bad;
  bad.d = 3;
  CHECK_THROWS_AS(bad.add_edge(1, 1), InvalidArgument);
}

TEST_CASE("signatures") {
  Multigraph a;
  a.d = 3;
  a.add_edge(0, 1, 2);
  auto sa = signature(a);
  CHECK(sa.blocks == std::vector<std::uint32_t>{0b011, 0b100});
  CHECK(sa.edges == std::vector<int>{2, 0});

  Multigraph b;
  b.d = 3;
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  CHECK(signature(b).blocks == std::vector<std::uint32_t>{0b111});
  CHECK(signature(b).edges == std::vector<int>{2});

  Multigraph c;
  c.d = 4;
  c.add_edge(0, 1);
  c.add_edge(2, 3, 3);
  CHECK(signature(c).edges == std::vector<int>{1, 3});
  CHECK(signature(c).to_string() == "{1,2}:1 {3,4}:3");
}

TEST_CASE("census") {
  CHECK(component_census_sd(3, 4).size() == 4);
  CHECK(component_census_sd(4, 6).size() == 17);
  CHECK(component_census_sd(3, 5).empty());
  CHECK(component_census_sd(3, 0).size() == 1);
  CHECK(census_full_group(3, 4) == 1);
  CHECK(census_full_group(4, 4) == 0);
  CHECK(census_full_group(4, 6) == 1);
  Caps caps;
  caps.max_symmetric_degree = 4;
  CHECK_THROWS_AS(component_census_sd(5, 2, caps), CapExceeded);
}

TEST_CASE("closed Hilbert formula") {
  CHECK(hf_closed_form(3, 1) == 3);
  for (int m = 2; m <= 10; ++m)
    CHECK(hf_closed_form(3, m) == 4);
  for (int m = 3; m <= 10; ++m)
    CHECK(hf_closed_form(4, m) == 3 * m + 8);
  CHECK(hf_closed_form(4, 0) == 1);
  CHECK(hf_closed_form_raw(4, 0) == 0);
  for (int d = 2; d <= 6; ++d) {
    auto r = check_closed_formula(d, 8);
    CHECK_MESSAGE(r.passed(), r.detail);
  }
  CHECK(stirling2(5, 2) == 15);
  CHECK(multinomial3(4, 2, 1, 1) == 12);
  CHECK(multinomial3(4, 2, 1, 2) == 0);

  auto l4 = hf_leading_coefficient(4);
  CHECK(l4.first == 3);
  CHECK(l4.second == 1);
  auto l3 = hf_leading_coefficient(3);
  CHECK(l3.first == 4);
  // Polynomial of degree floor(d/2) - 1: the (d/2 - 1)-th difference is constant.
  auto l6 = hf_leading_coefficient(6);
  CHECK(l6.first == 15);
  CHECK(l6.second == 2);
  BigInt d2 = hf_closed_form(6, 12) - 2 * hf_closed_form(6, 11) + hf_closed_form(6, 10);
  CHECK(d2 == 15); // 2! times 15/2
}

TEST_CASE("census against braid orbits") {
  for (int d = 2; d <= 4; ++d) {
    auto t = MonoidTable::build(symmetric_setting(d), 8);
    auto r = check_signature_bijection(d, t);
    CHECK_MESSAGE(r.passed(), r.detail);
    CHECK(check_full_group_uniqueness(d, t).passed());
    SuiteOptions o;
    o.lemma_samples = 100;
    auto sq = check_squares_normal_form(d, t, o);
    CHECK_MESSAGE(sq.passed(), sq.detail);
    if (d >= 3) CHECK(check_triangle_moves(d, t).passed());
  }
}

TEST_CASE("presentation") {
  auto t3 = MonoidTable::build(symmetric_setting(3), 6);
  const auto &g = t3.setting().group();
  ComponentId x12 = *t3.find(tup(g, {"(1 2)", "(1 2)"}));
  ComponentId x23 = *t3.find(tup(g, {"(2 3)", "(2 3)"}));
  ComponentId x13 = *t3.find(tup(g, {"(1 3)", "(1 3)"}));
  CHECK(t3.multiply(x12, x23) == t3.multiply(x13, x23));
  CHECK(t3.multiply(x12, x23) == t3.multiply(x12, x13));
  CHECK(verify_presentation(3, t3).ok());

  auto t4 = MonoidTable::build(symmetric_setting(4), 6);
  const auto &g4 = t4.setting().group();
  auto x = [&](const char *p) { return *t4.find(tup(g4, {p, p})); };
  CHECK(t4.multiply(x("(1 2)"), x("(3 4)")) != t4.multiply(x("(1 2)"), x("(1 3)")));
  CHECK(t4.multiply(x("(1 2)"), x("(3 4)")) == t4.multiply(x("(3 4)"), x("(1 2)")));
  auto r = verify_presentation(4, t4);
  CHECK(r.ok());
  CHECK(r.relations_failed == 0);

  auto small = MonoidTable::build(symmetric_setting(3), 4);
  CHECK_THROWS_AS(verify_presentation(3, small), InsufficientData);
  auto other = MonoidTable::build(fixture("d4"), 4);
  CHECK_THROWS_AS(verify_presentation(4, other), InvalidArgument);
}

} // TEST_SUITE
