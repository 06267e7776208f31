#include <doctest.h>

#include "helpers.hpp"

using namespace branecalc;
using bctest::gen;

TEST_CASE("purity and connectivity") {
  SullivanModel s4 = bctest::sphere_model(4);
  CHECK(check_pure(s4).pure);
  CHECK(check_k_connected(s4, 2));
  CHECK(check_k_connected(s4, 3));
  CHECK_FALSE(check_k_connected(s4, 4));

  // a nonzero differential on an even generator breaks purity
  AlgebraPtr a = FreeGCA::make({{"x", 4, 0, ""}, {"y", 7, 0, ""}, {"z", 10, 0, ""}});
  Derivation d(a, 1);
  d.set_image("x", Element::zero(a));
  d.set_image("y", gen(a, "x").pow(2));
  d.set_image("z", Element::zero(a));
  SullivanModel ok{a, d};
  CHECK(check_pure(ok).pure);
  d.set_image("z", gen(a, "x") * gen(a, "y"));
  SullivanModel bad{a, d};
  PurityResult p = check_pure(bad);
  CHECK_FALSE(p.pure);
  CHECK(p.witness == "z");
}

TEST_CASE("even and odd generator lists") {
  SullivanModel ps = bctest::product_spheres_model();
  CHECK(even_generators(ps) == std::vector<std::size_t>{0, 2});
  CHECK(odd_generators(ps) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("d squared witness") {
  AlgebraPtr a = FreeGCA::make({{"x", 3, 0, ""}, {"y", 4, 0, ""}, {"z", 5, 0, ""}});
  Derivation d(a, 1);
  d.set_image("x", gen(a, "y"));
  d.set_image("y", Element::zero(a));
  d.set_image("z", Element::zero(a));
  CHECK_FALSE(SullivanModel{a, d}.d_squared_witness().has_value());
  d.set_image("y", gen(a, "z"));
  SullivanModel bad{a, d};
  CHECK(bad.d_squared_witness() == std::string("x"));
  CHECK_THROWS_AS(bad.require_d_squared_zero("test"), verify_error);
}

TEST_CASE("amalgamated tensor identifies shared generators once") {
  SullivanModel s4 = bctest::sphere_model(4);
  SullivanModel other = [&] {
    AlgebraPtr a = FreeGCA::make({{"x", 4, 0, ""}, {"w", 3, 0, ""}});
    Derivation d(a, 1);
    d.set_image("x", Element::zero(a));
    d.set_image("w", gen(a, "x"));
    return SullivanModel{a, d};
  }();
  Amalgamation am = tensor_amalgamated(s4, other, {"x"});
  CHECK(am.model.algebra->size() == 3);  // x, y, w
  CHECK(am.model.algebra->find("x") == 0);
  CHECK(am.model.algebra->find("w") == 2);
  am.model.require_d_squared_zero("amalgamation");
  // inclusions are chain maps and agree on the shared generator
  CHECK(am.left.apply(gen(s4.algebra, "x")) ==
        am.right.apply(gen(other.algebra, "x")));
  std::string w;
  CHECK(am.left.chain_map(s4.d, am.model.d, &w));
  CHECK(am.right.chain_map(other.d, am.model.d, &w));

  SUBCASE("shared generators must agree in degree") {
    SullivanModel clash = bctest::lambda_x(6, "x");
    CHECK_THROWS_AS((void)tensor_amalgamated(s4, clash, {"x"}), input_error);
  }
}

TEST_CASE("quotients kill generators") {
  SullivanModel s4 = bctest::sphere_model(4);
  SUBCASE("killing y fails: d(y) = x^2 survives the quotient") {
    CHECK_THROWS_AS((void)quotient_by_generators(s4, {"y"}), input_error);
  }
  SUBCASE("killing x and y works") {
    Quotient q = quotient_by_generators(s4, {"x", "y"});
    CHECK(q.model.algebra->size() == 0);
    CHECK(q.projection.apply(gen(s4.algebra, "x")).is_zero());
  }
  SUBCASE("killing x works: d(y) projects to zero") {
    Quotient q = quotient_by_generators(s4, {"x"});
    CHECK(q.model.algebra->size() == 1);
    CHECK(q.projection.apply(gen(s4.algebra, "x")).is_zero());
    std::string w;
    CHECK(q.projection.chain_map(s4.d, q.model.d, &w));
  }
}

TEST_CASE("renaming is an isomorphism") {
  SullivanModel s4 = bctest::sphere_model(4);
  auto [renamed, iso] = rename_generators(s4, {{"x", "a"}, {"y", "b"}});
  CHECK(renamed.algebra->find("a") == 0);
  CHECK(renamed.algebra->find("x") == -1);
  std::string w;
  CHECK(iso.chain_map(s4.d, renamed.d, &w));
  CHECK(renamed.d.image(0).is_zero());
  CHECK(renamed.d.image(1) == gen(renamed.algebra, "a").pow(2));
}
