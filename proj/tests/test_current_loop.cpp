#include "doctest.h"
#include "uea/catalog.hpp"
#include "uea/current_loop.hpp"

using namespace uea;

TEST_CASE("brackets add the x-degrees") {
  CurrentAlgebra g{catalog_get("sl2"), Variant::Current};
  const Field q = Field::rationals();
  // [e_1, f_2] = h_3
  CHECK(g.gen_bracket({0, 1}, {2, 2}) == GVector{GeneratorId{1, 3}, Scalar::one(q)});
  CHECK(g.gen_bracket({1, 0}, {0, 4}) == GVector{GeneratorId{0, 4}, Scalar{q, 2L}});
  CurrentAlgebra loop{catalog_get("sl2"), Variant::Loop};
  CHECK(loop.gen_bracket({0, -1}, {2, 1}) == GVector{GeneratorId{1, 0}, Scalar::one(q)});
  CHECK(g.bracket(g.lift(LVector{0, Scalar::one(q)}, 2), g.lift(LVector{2, Scalar::one(q)}, 0)) ==
        GVector{GeneratorId{1, 2}, Scalar::one(q)});
}

TEST_CASE("variant checks") {
  CurrentAlgebra g{catalog_get("heisenberg3"), Variant::Current};
  try {
    g.gen_bracket({0, -1}, {1, 0});
    FAIL("negative degree accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VariantMismatch);
  }
  CHECK_THROWS_AS(g.check({7, 0}), Error);
  CurrentAlgebra loop{catalog_get("heisenberg3"), Variant::Loop};
  CHECK_NOTHROW(loop.check({0, -3}));
  CHECK(parse_variant("loop") == Variant::Loop);
  CHECK_THROWS_AS(parse_variant("affine"), Error);
}

TEST_CASE("restricted powers shift the degree") {
  CurrentAlgebra g{catalog_get("sl2", 3), Variant::Current};
  const Field f3 = Field::prime(3);
  CHECK(g.p_power_gen({1, 2}) == GVector{GeneratorId{1, 6}, Scalar::one(f3)});
  CHECK(g.p_power_gen({0, 1}).is_zero());
  CurrentAlgebra s{catalog_get("gl11", 3), Variant::Current};
  try {
    s.p_power_gen({2, 0});
    FAIL("odd p-power accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddGenerator);
  }
  CurrentAlgebra q{catalog_get("sl2"), Variant::Current};
  CHECK_THROWS_AS(q.p_power_gen({1, 0}), Error);
}

TEST_CASE("generator names") {
  CurrentAlgebra g{catalog_get("gl11"), Variant::Loop};
  CHECK(g.format(GeneratorId{2, -1}) == "E12[-1]");
  CHECK(g.parse_generator("E12[-1]") == GeneratorId{2, -1});
  CHECK(g.parse_generator("H[2]") == GeneratorId{1, 2});
  CHECK_THROWS_AS(g.parse_generator("H2]"), Error);
  CHECK_THROWS_AS(g.parse_generator("Q[0]"), Error);
}

TEST_CASE("window generators") {
  CurrentAlgebra g{catalog_get("heisenberg3"), Variant::Current};
  auto gens = enumerate_generators(GradedWindow::current(2, 2), g);
  CHECK(gens == std::vector<GeneratorId>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
  CurrentAlgebra l{catalog_get("abelian1"), Variant::Loop};
  CHECK(enumerate_generators(GradedWindow::loop(0, 2, -1, 1), l).size() == 3);
  GradedWindow open{Variant::Loop, 0, 0, 2, std::nullopt};
  try {
    open.require_finite();
    FAIL("open loop window accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteWindow);
  }
  CHECK(test_degrees(Variant::Current, 2) == std::vector<int>{0, 1, 2});
  CHECK(test_degrees(Variant::Loop, 1) == std::vector<int>{-1, 0, 1});
}
