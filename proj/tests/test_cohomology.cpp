#include <doctest.h>

#include "branecalc/cohomology.hpp"
#include "branecalc/mapping_spaces.hpp"
#include "helpers.hpp"

using namespace branecalc;
using bctest::gen;

TEST_CASE("cohomology of the fixtures") {
  SUBCASE("K(Z,4): polynomial on one degree-4 class") {
    std::vector<int> dims = cohomology_dims(bctest::lambda_x(4), 12);
    CHECK(dims == std::vector<int>{1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1});
  }
  SUBCASE("spheres") {
    std::vector<int> s4 = cohomology_dims(bctest::sphere_model(4), 12);
    CHECK(s4 == std::vector<int>{1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
    std::vector<int> s6 = cohomology_dims(bctest::sphere_model(6), 12);
    CHECK(s6 == std::vector<int>{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0});
  }
  SUBCASE("product of K(Z,4) and K(Z,6)") {
    // Hilbert series 1/((1-t^4)(1-t^6))
    std::vector<int> dims = cohomology_dims(bctest::two_even_model(), 12);
    CHECK(dims == std::vector<int>{1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2});
  }
  SUBCASE("product of spheres S^4 x S^6") {
    std::vector<int> dims = cohomology_dims(bctest::product_spheres_model(), 12);
    CHECK(dims == std::vector<int>{1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0});
  }
}

TEST_CASE("cohomology is independent of generator declaration order") {
  SullivanModel a = bctest::product_spheres_model();
  AlgebraPtr ralg = FreeGCA::make(
      {{"y'", 11, 0, ""}, {"x'", 6, 0, ""}, {"y", 7, 0, ""}, {"x", 4, 0, ""}});
  Derivation d(ralg, 1);
  d.set_image("x", Element::zero(ralg));
  d.set_image("x'", Element::zero(ralg));
  d.set_image("y", gen(ralg, "x").pow(2));
  d.set_image("y'", gen(ralg, "x'").pow(2));
  SullivanModel b{ralg, d};
  CHECK(cohomology_dims(a, 16) == cohomology_dims(b, 16));
}

TEST_CASE("cocycles and coboundaries") {
  SullivanModel s4 = bctest::sphere_model(4);
  Element x = gen(s4.algebra, "x"), y = gen(s4.algebra, "y");
  CHECK(is_cocycle(x, s4));
  CHECK_FALSE(is_cocycle(y, s4));

  SUBCASE("x^2 is exact with preimage y") {
    auto pre = coboundary_preimage(x.pow(2), s4);
    REQUIRE(pre);
    CHECK(s4.d.apply(*pre) == x.pow(2));
  }
  SUBCASE("x is a nonzero class") {
    CHECK_FALSE(coboundary_preimage(x, s4).has_value());
  }
  SUBCASE("zero is exact") {
    auto pre = coboundary_preimage(Element::zero(s4.algebra), s4);
    REQUIRE(pre);
    CHECK(pre->is_zero());
  }
  SUBCASE("nonzero scalars are never exact") {
    CHECK_FALSE(coboundary_preimage(Element::unit(s4.algebra), s4).has_value());
  }
}

TEST_CASE("degree slices and coordinates") {
  SullivanModel s4 = bctest::sphere_model(4);
  DegreeSlice slice = build_slice(s4, 7);
  CHECK(slice.basis.size() == 1);       // y
  CHECK(slice.next_basis.size() == 1);  // x^2
  CHECK(rank(slice.matrix_of_d) == 1);

  Element e = gen(s4.algebra, "y") * Rational(5);
  std::vector<Rational> coords = coords_in_basis(e, slice.basis);
  CHECK(coords == std::vector<Rational>{5});
  CHECK_THROWS_AS((void)coords_in_basis(gen(s4.algebra, "x"), slice.basis),
                  verify_error);
}

TEST_CASE("hom differential squares to zero") {
  SullivanModel s4 = bctest::sphere_model(4);
  MappingSpaceModel disk = build_disk_model(s4, 2);
  AlgebraPtr a = disk.model.algebra;
  // an arbitrary base-linear map with no chain-map property at all
  std::vector<bool> base(a->size(), false);
  base[a->index_of("x")] = base[a->index_of("y")] = true;
  base[a->index_of("s1x")] = base[a->index_of("s1y")] = true;
  ModuleMorphism f(a, a, base, -2, true);
  Monomial s2x = a->gen_monomial(a->index_of("s2x"));
  f.set_image(a->one(), Element::zero(a));
  f.set_image(s2x, Element::unit(a));
  HomElement h{f, -2};
  CHECK_FALSE(hom_is_cocycle(h, disk.model.d, disk.model.d, 8));
  HomElement Dh = hom_differential(h, disk.model.d, disk.model.d, 8);
  HomElement DDh = hom_differential(Dh, disk.model.d, disk.model.d, 7);
  for (const auto& [mono, img] : DDh.map.images()) CHECK(img.is_zero());
}

TEST_CASE("lift through a surjective quasi-isomorphism") {
  SullivanModel s4 = bctest::sphere_model(4);
  MappingSpaceModel disk = build_disk_model(s4, 2);
  const AlgebraMorphism& p = disk.map("eps_tilde");
  AlgebraMorphism id = AlgebraMorphism::identity(s4.algebra);
  AlgebraMorphism phi = lift_through_surjection(s4, id, disk.model, p, 16);
  for (std::size_t i = 0; i < s4.algebra->size(); ++i) {
    Element g = Element::generator(s4.algebra, i);
    CHECK(p.apply(phi.apply(g)) == g);
  }
  std::string w;
  CHECK(phi.chain_map(s4.d, disk.model.d, &w));
}

TEST_CASE("module basis enumeration") {
  SullivanModel s4 = bctest::sphere_model(4);
  MappingSpaceModel path = build_path_model(s4);
  AlgebraPtr a = path.model.algebra;
  std::vector<bool> base(a->size(), false);
  base[a->index_of("x1")] = base[a->index_of("x2")] = true;
  base[a->index_of("y1")] = base[a->index_of("y2")] = true;
  std::vector<Monomial> mb = module_basis_up_to(*a, base, 10);
  // 1, sx (3), sy (6), sx sy (9)
  CHECK(mb.size() == 4);
  for (const Monomial& m : mb) {
    for (std::size_t i = 0; i < a->size(); ++i)
      if (base[i]) CHECK(m.exp[i] == 0);
  }
}

TEST_CASE("default truncation") {
  CHECK(default_truncation(bctest::lambda_x(4)) == 12);
  CHECK(default_truncation(bctest::sphere_model(4)) == 18);
  CHECK(default_truncation(bctest::product_spheres_model()) == 26);
}
