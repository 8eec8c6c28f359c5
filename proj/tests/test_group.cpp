#include "doctest.h"
#include "helpers.hpp"

#include "hurwitz/errors.hpp"

using namespace hurwitz;
using namespace hurwitz::test;

TEST_SUITE("group_core") {

TEST_CASE("composition is right to left and conjugation is h g h^-1") {
  auto a = Permutation::parse("(1 2)", 3);
  auto b = Permutation::parse("(2 3)", 3);
  // (a b)(1) = a(b(1)) = a(1) = 2
  CHECK((a * b)(0) == 1);
  CHECK((a * b).to_string() == "(1 2 3)");
  CHECK(b.conjugated_by(a) == Permutation::parse("(1 3)", 3));
  CHECK(a * a.inverse() == Permutation::identity(3));
  CHECK(Permutation::parse("()", 4).is_identity());
  CHECK(Permutation::parse("(1 2 3)(4 5)", 5).order() == 6);
  CHECK_THROWS_AS(Permutation::parse("(1 1)", 3), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(1 4)", 3), InvalidArgument);
}

TEST_CASE("enumerate_elements") {
  CHECK(enumerate_elements(std::vector{Permutation::parse("(1 2)", 2)}).size() == 2);
  CHECK(enumerate_elements(std::vector{Permutation::parse("(1 2)", 3), Permutation::parse("(2 3)", 3)}).size() == 6);
  CHECK(enumerate_elements(std::vector{Permutation::parse("(1 2)(3 4)", 4), Permutation::parse("(1 3)(2 4)", 4)})
            .size() == 4);
  Caps caps;
  caps.max_group_order = 10;
  CHECK_THROWS_AS(enumerate_elements(std::vector{Permutation::parse("(1 2)", 4), Permutation::parse("(1 2 3 4)", 4)},
                                     caps),
                  CapExceeded);
}

TEST_CASE("conjugacy classes") {
  GroupContext s3({Permutation::parse("(1 2)", 3), Permutation::parse("(1 2 3)", 3)});
  std::vector<std::size_t> sizes;
  for (const auto &c : s3.classes())
    sizes.push_back(c.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  CHECK(s3.classes()[0] == std::vector<ElemId>{GroupContext::identity_id});
  CHECK(s3.exponent() == 6);
  CHECK(s3.derived_subgroup().size() == 3);

  GroupContext trivial({Permutation::identity(3)});
  CHECK(trivial.classes().size() == 1);

  GroupContext s4({Permutation::parse("(1 2)", 4), Permutation::parse("(1 2 3 4)", 4)});
  CHECK(s4.classes().size() == 5);
  auto tc = s4.class_of(el(s4, "(1 2)"));
  CHECK(s4.classes()[tc].size() == 6);
  CHECK(s4.exponent() == 12);
  for (ElemId x = 0; x < s4.order(); ++x)
    CHECK(s4.power(x, s4.exponent()) == GroupContext::identity_id);
}

TEST_CASE("class data validation") {
  GroupContext s3({Permutation::parse("(1 2)", 3), Permutation::parse("(1 2 3)", 3)});
  auto three = s3.class_of(el(s3, "(1 2 3)"));
  auto two = s3.class_of(el(s3, "(1 2)"));
  CHECK_THROWS_AS(ClassData::make(s3, {0}, {1}), InvalidArgument);
  CHECK_THROWS_AS(ClassData::make(s3, {three}, {1}), InvalidArgument); // A_3 only
  CHECK_THROWS_AS(ClassData::make(s3, {two}, {0}), InvalidArgument);
  CHECK(ClassData::make(s3, {two}, {2}).xi_total() == 2);
}

TEST_CASE("class splitting") {
  auto s4 = fixture("s4");
  const auto &g = s4->group();
  const auto &whole = s4->subgroup(s4->whole_group_id());
  CHECK(whole.omega == 0);
  CHECK(whole.dh_classes.size() == 1);

  auto klein = sub(*s4, {"(1 2)", "(3 4)"});
  CHECK(s4->subgroup(klein).order() == 4);
  CHECK(s4->subgroup(klein).dh_classes.size() == 2);
  CHECK(s4->subgroup(klein).omega == 1);

  auto s3 = fixture("s3");
  auto h = sub(*s3, {"(1 2)"});
  CHECK(s3->subgroup(h).dh_classes.size() == 1);
  CHECK(s3->subgroup(h).omega == 0);

  // A subgroup missing the class has no splitting number.
  auto cyclic = s4->generated(std::vector<ElemId>{el(g, "(1 2 3)")});
  CHECK_FALSE(s4->subgroup(cyclic).omega.has_value());
}

TEST_CASE("D-generated subgroups") {
  auto s3 = fixture("s3");
  CHECK(s3->sub_count() == 5);
  std::vector<std::size_t> orders;
  for (const auto *h : s3->d_generated_subgroups())
    orders.push_back(h->order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 6});

  auto s4 = fixture("s4");
  CHECK(s4->sub_count() == 15);
  auto klein = sub(*s4, {"(1 2)", "(3 4)"});
  CHECK(klein < s4->sub_count());
  for (const char *a : {"(1 2)", "(1 3)", "(2 4)"})
    CHECK(sub(*s4, {a}) < s4->sub_count());
  CHECK(s4->subgroup(sub(*s4, {"(1 2)", "(2 3)"})).order() == 6);
  CHECK(s4->subgroup(s4->whole_group_id()).order() == 24);

  // Every D-generated H has Omega >= 0, and Omega = 0 exactly when tau is a bijection.
  for (const auto *h : s4->d_generated_subgroups()) {
    if (h->is_trivial()) continue;
    REQUIRE(h->omega);
    CHECK(*h->omega >= 0);
    CHECK((*h->omega == 0) == (h->dh_classes.size() == 1));
  }
}

TEST_CASE("abelianization cosets") {
  auto s3 = fixture("s3");
  const auto &g = s3->group();
  const auto &h = s3->subgroup(s3->whole_group_id());
  CHECK(h.abelianization_order() == 2);
  CHECK(abelianization_coset(h, el(g, "(1 2 3)")) == 0);
  CHECK(abelianization_coset(h, el(g, "(1 2)")) != 0);
  for (ElemId x : h.elements)
    for (ElemId y : h.elements)
      CHECK(abelianization_coset(h, g.mul(x, y)) ==
            abelian_mul(h, abelianization_coset(h, x), abelianization_coset(h, y)));

  auto s4 = fixture("s4");
  const auto &k = s4->subgroup(sub(*s4, {"(1 2)", "(3 4)"}));
  CHECK(k.derived.size() == 1);
  CHECK(k.abelianization_order() == 4);
  CHECK_THROWS_AS(abelianization_coset(k, el(s4->group(), "(1 3)")), InvalidArgument);
}

} // TEST_SUITE
