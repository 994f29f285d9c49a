#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "uea/catalog.hpp"
#include "uea/sym.hpp"

using namespace uea;

namespace {

SymAlgebra sym(const char* key, std::uint32_t p = 0, Variant v = Variant::Current) {
  return SymAlgebra{CurrentAlgebra{catalog_get(key, p), v}};
}

SymElement random_sym(std::mt19937& rng, const SymAlgebra& s, int max_xdeg, int max_filt, int terms = 3) {
  std::uniform_int_distribution<int> xd(0, max_xdeg), fd(0, max_filt), nt(1, terms);
  const auto basis = enumerate_sym_basis(GradedWindow::current(xd(rng), fd(rng)), s.algebra());
  SymElement f;
  if (basis.empty()) return s.one();
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = nt(rng); t > 0; --t) f.add(basis[pick(rng)], oracle::random_scalar(rng, s.field()));
  return f;
}

}  // namespace

TEST_CASE("derivation examples") {
  const auto h = sym("heisenberg3");
  CHECK(h.derivation_action({0, 0}, h.parse("Y[0] * Y[1]")) == h.parse("Z[0] * Y[1] + Y[0] * Z[1]"));
  const auto g = sym("gl11");
  CHECK(g.derivation_action({2, 0}, g.parse("E21[0] * E21[1]")) == g.parse("Z[0] * E21[1] - E21[0] * Z[1]"));
  const auto s3 = sym("sl2", 3);
  CHECK(s3.derivation_action({2, 0}, s3.parse("e[0]^3")).is_zero());
  const auto s0 = sym("sl2");
  CHECK(s0.derivation_action({2, 0}, s0.parse("e[0]^3")) == s0.parse("-3 * e[0]^2 * h[0]"));
}

TEST_CASE("supercommutative products") {
  const auto g = sym("gl11");
  CHECK(g.parse("E21[0] * E12[0]") == g.parse("-1 * E12[0] * E21[0]"));
  CHECK(g.parse("E12[0] * E12[0]").is_zero());
  CHECK(g.parse("H[1] * Z[0]") == g.parse("Z[0] * H[1]"));
}

TEST_CASE("derivations obey the super Leibniz rule") {
  std::mt19937 rng(8);
  for (auto [key, p] : {std::pair{"gl11", 0u}, std::pair{"osp12", 0u}, std::pair{"sl2", 3u}, std::pair{"osp12", 5u}}) {
    const auto s = sym(key, p);
    const auto gens = enumerate_generators(GradedWindow::current(1, 2), s.algebra());
    for (int t = 0; t < 40; ++t) {
      const auto f = random_sym(rng, s, 1, 3, 1);
      const auto h = random_sym(rng, s, 1, 3, 2);
      for (const auto& a : gens) {
        SymElement rhs = s.multiply(s.derivation_action(a, f), h);
        SymElement second = s.multiply(f, s.derivation_action(a, h));
        const bool neg = is_odd(s.algebra().parity(a)) && is_odd(s.parity_of(f).value());
        rhs += neg ? -second : second;
        CHECK(s.derivation_action(a, s.multiply(f, h)) == rhs);
      }
    }
  }
}

TEST_CASE("derivations match the oracle on single words") {
  for (auto [key, p] : {std::pair{"gl11", 0u}, std::pair{"osp12", 3u}, std::pair{"heisenberg3", 0u}}) {
    const auto s = sym(key, p);
    const auto& pres = s.algebra().presentation();
    const auto basis = enumerate_sym_basis(GradedWindow::current(1, 3), s.algebra());
    for (const auto& a : enumerate_generators(GradedWindow::current(1, 2), s.algebra()))
      for (const auto& m : basis)
        CHECK(oracle::from_library(s.derivation_action(a, SymElement{m, Scalar::one(s.field())})) ==
              oracle::sym_action(pres, a, oracle::expand(m.factors)));
  }
}

TEST_CASE("p-th powers are invariant") {
  std::mt19937 rng(13);
  for (auto [key, p] : {std::pair{"sl2", 3u}, std::pair{"gl11", 3u}, std::pair{"osp12", 5u}}) {
    const auto s = sym(key, p);
    const auto gens = enumerate_generators(GradedWindow::current(1, 2), s.algebra());
    for (int t = 0; t < 10; ++t) {
      auto f = random_sym(rng, s, 1, 2, 2);
      if (s.parity_of(f) != Parity::Even) continue;
      const auto fp = s.power(f, p);
      for (const auto& a : gens) CHECK(s.derivation_action(a, fp).is_zero());
    }
  }
}

TEST_CASE("invariant kernels") {
  const auto h = sym("heisenberg3");
  auto k = invariant_kernel(GradedWindow::current(1, 2), 2, h);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == h.parse("Z[1]"));
  CHECK(oracle::invariant_dim(h.algebra().presentation(), GradedWindow::current(1, 2), 2) == 1);

  const auto s0 = sym("sl2");
  k = invariant_kernel(GradedWindow::current(0, 2), 1, s0);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == s0.one());
  // the symmetric Casimir survives s = 0 alone
  CHECK(invariant_kernel(GradedWindow::current(0, 2), 0, s0).size() == 2);
  CHECK(oracle::invariant_dim(s0.algebra().presentation(), GradedWindow::current(0, 2), 0) == 2);

  const auto s3 = sym("sl2", 3);
  k = invariant_kernel(GradedWindow::current(0, 3), 1, s3);
  CHECK(k.size() == 4);
  CHECK(oracle::invariant_dim(s3.algebra().presentation(), GradedWindow::current(0, 3), 1) == 4);
  CHECK(invariant_kernel(GradedWindow::current(0, 3), 1, s3, Exec::Serial) == k);
}

TEST_CASE("invariant kernels agree with the brute-force oracle") {
  for (auto [key, p] : {std::pair{"heisenberg3", 0u}, std::pair{"gl11", 0u}, std::pair{"gl11", 3u},
                        std::pair{"sl2", 3u}, std::pair{"osp12", 0u}, std::pair{"abelian1", 5u}}) {
    const auto s = sym(key, p);
    for (int x = 0; x <= 2; ++x)
      for (int f = 0; f <= 3; ++f) {
        CAPTURE(key);
        CAPTURE(x);
        CAPTURE(f);
        const auto w = GradedWindow::current(x, f);
        CHECK(invariant_kernel(w, x + 1, s).size() == oracle::invariant_dim(s.algebra().presentation(), w, x + 1));
      }
  }
  const auto loop = sym("sl2", 3, Variant::Loop);
  for (int x = -3; x <= 3; ++x) {
    const auto w = GradedWindow::loop(x, 3, -1, 1);
    CHECK(invariant_kernel(w, 2, loop).size() == oracle::invariant_dim(loop.algebra().presentation(), w, 2));
  }
}

TEST_CASE("predicted invariant generators") {
  auto names = [](const SymAlgebra& s, const std::vector<SymElement>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(s.format(e));
    return out;
  };
  const auto h = sym("heisenberg3");
  CHECK(names(h, predicted_invariant_generators(h, GradedWindow::current(2, 3))) ==
        std::vector<std::string>{"1 * Z[0]", "1 * Z[1]", "1 * Z[2]"});
  const auto s0 = sym("sl2");
  CHECK(predicted_invariant_generators(s0, GradedWindow::current(2, 3)).empty());
  const auto g3 = sym("gl11", 3);
  CHECK(names(g3, predicted_invariant_generators(g3, GradedWindow::current(1, 6))) ==
        std::vector<std::string>{"1 * Z[0]", "1 * Z[1]", "1 * H[0]^3", "1 * H[1]^3"});
  auto d = catalog_get("heisenberg3").data();
  d.center_ids.reset();
  const SymAlgebra bare{CurrentAlgebra{AlgebraPresentation{d}, Variant::Current}};
  try {
    predicted_invariant_generators(bare, GradedWindow::current(0, 1));
    FAIL("unadapted basis accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingJ);
  }
}

TEST_CASE("comparing predicted and computed invariants") {
  const auto h = sym("heisenberg3");
  for (int x = 0; x <= 2; ++x) {
    const auto r = compare_invariants(GradedWindow::current(x, 3), 3, h);
    CHECK(r.pass);
    CHECK(r.containment);
  }
  const auto s3 = sym("sl2", 3);
  auto r = compare_invariants(GradedWindow::current(0, 3), 1, s3);
  CHECK(r.pass);
  CHECK(r.computed_dim == 4);
  const auto g = sym("gl11");
  r = compare_invariants(GradedWindow::current(1, 2), 2, g);
  CHECK(r.pass);
  CHECK(r.computed_dim == 1);
  CHECK(r.computed_basis == std::vector<std::string>{"1 * Z[1]"});
  // too few tests: the Casimir is not separated and the comparison fails honestly
  r = compare_invariants(GradedWindow::current(0, 2), 0, sym("sl2"));
  CHECK_FALSE(r.pass);
  CHECK(r.computed_dim == 2);
  CHECK(r.predicted_dim == 1);
}
