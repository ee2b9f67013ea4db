#include <doctest.h>

#include "dsg/module.hpp"
#include "dsg_test_util.hpp"

using namespace dsg;
using namespace dsg::test;

namespace {

ModuleElement vec(const RingPtr& R, std::initializer_list<const char*> coords) {
  ModuleElement v;
  for (const auto* c : coords) v.coords.push_back(poly(R, c));
  return v;
}

PolyMatrix row(const RingPtr& R, std::initializer_list<const char*> entries) {
  PolyMatrix m(1, entries.size());
  std::size_t j = 0;
  for (const auto* e : entries) m(0, j++) = poly(R, e);
  return m;
}

}  // namespace

TEST_SUITE("module") {
  TEST_CASE("Koszul syzygy of two variables") {
    auto R = free_ring("x y");
    const auto& P = R->ambient();
    auto M = row(R, {"x", "y"});
    auto S = syzygies(P, M);
    REQUIRE(S.generators.size() == 1);
    ModuleGroebnerBasis span(P, 2, S.generators);
    CHECK(span.contains(vec(R, {"y", "-x"})));
    CHECK_FALSE(span.contains(vec(R, {"1", "0"})));
  }

  TEST_CASE("syzygies of (x^2, xy, y^2)") {
    auto R = free_ring("x y");
    const auto& P = R->ambient();
    auto M = row(R, {"x^2", "x*y", "y^2"});
    auto S = syzygies(P, M);
    CHECK(S.generators.size() == 2);
    for (const auto& g : S.generators) CHECK(apply(P, M, g).is_zero());
    ModuleGroebnerBasis span(P, 3, S.generators);
    CHECK(span.contains(vec(R, {"y", "-x", "0"})));
    CHECK(span.contains(vec(R, {"0", "y", "-x"})));
    CHECK(span.contains(vec(R, {"y^2", "0", "-x^2"})));
  }

  TEST_CASE("kernel over a quotient ring") {
    auto R = quotient("x y", "x^2");
    const auto& P = R->ambient();
    auto S = syzygies_modulo(P, row(R, {"x"}), R->relation_basis().elements());
    REQUIRE(S.generators.size() == 1);
    CHECK(R->reduce(S.generators[0].coords[0]) == poly(R, "x"));
  }

  TEST_CASE("membership modulo relations") {
    auto R = quotient("x y", "x*y");
    const auto& P = R->ambient();
    std::vector<ModuleElement> gens = {vec(R, {"x", "y"})};
    QuotientSubmodule Q(P, 2, gens, R->relation_basis().elements());
    CHECK(Q.contains(vec(R, {"x^2", "0"})));  // x (x, y) = (x^2, 0) in R
    CHECK_FALSE(Q.contains(vec(R, {"x", "0"})));
    CHECK(Q.contains(vec(R, {"x*y", "x*y"})));
  }

  TEST_CASE("module normal forms are zero exactly on the submodule") {
    auto R = free_ring("x y z");
    const auto& P = R->ambient();
    std::vector<ModuleElement> gens = {vec(R, {"x", "y", "0"}), vec(R, {"0", "z", "x"})};
    ModuleGroebnerBasis G(P, 3, gens);
    auto comb = vec(R, {"x*z", "y*z - y*z", "0"});
    comb.coords[1] = poly(R, "y*z + x*z");
    comb.coords[2] = poly(R, "x^2");
    // z * g1 + x * g2 = (xz, yz + xz, x^2)
    CHECK(G.contains(comb));
    CHECK_FALSE(G.contains(vec(R, {"x", "0", "0"})));
    ModuleGroebnerBasis pot(P, 3, gens, ModuleOrder{ModuleOrder::Kind::PositionOverTerm, 0});
    CHECK(pot.contains(comb));
  }
}
