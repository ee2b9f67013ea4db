#include <doctest.h>

#include "dsg/ball.hpp"
#include "dsg/bounds.hpp"
#include "dsg/errors.hpp"
#include "dsg/resolution.hpp"
#include "dsg_test_util.hpp"

using namespace dsg;
using namespace dsg::test;

namespace {

HypothesisStatus ok(const std::string& name) { return {name, Status::Verified, "test"}; }

}  // namespace

TEST_SUITE("ball") {
  TEST_CASE("star and filtration") {
    auto k3 = make_ball(Category::Derived, {"k"}, 3, "a");
    auto p3 = make_ball(Category::Derived, {"S/p"}, 3, "b");
    auto s = star(k3, p3);
    CHECK(s.format() == "<k ⊕ S/p>_6");
    CHECK(s.provenance.size() >= 3);
    auto g = make_ball(Category::Derived, {"G"}, 1, "g");
    CHECK(star(g, g).format() == "<G>_2");
    CHECK_THROWS_AS(make_ball(Category::Derived, {"G"}, 0, "zero"), DomainError);
    CHECK_THROWS_AS(star(g, make_ball(Category::Singularity, {"G"}, 1, "x")), DomainError);
    for (long n = 2; n <= 5; ++n) {
      auto f = filtration(make_ball(Category::Derived, {"R/(x)"}, 2, "r"), n - 1);
      CHECK(f.radius == 2 * (n - 1));
      CHECK(f.generator == std::vector<std::string>{"R/(x)"});
    }
    CHECK_THROWS_AS(filtration(g, 0), DomainError);
  }

  TEST_CASE("derived strategies on the examples") {
    auto E = load("egdimsing1.ring");
    auto db = derived_category_ball(jacobian_ideal(E).ideal, Strategy::Auto);
    CHECK(db.ball.format() == "<R/(x, y, z)>_4");
    CHECK(db.chosen == Strategy::NilpotentFiltration);
    CHECK(db.trace.size() == 4);

    auto D = load("dim41.ring");
    auto d41 = derived_category_ball(jacobian_ideal(D).ideal, Strategy::Auto);
    CHECK(d41.ball.format() == "<k ⊕ R/(x, y)>_6");
    CHECK(d41.chosen == Strategy::SocleSplit);
    bool marked = false;
    for (const auto& p : d41.ball.provenance) marked |= p.find("example-pattern") != std::string::npos;
    CHECK(marked);
    CHECK(derived_category_ball(jacobian_ideal(D).ideal, Strategy::NilpotentFiltration).ball.radius == 12);

    auto A = quotient("x", "x^2");
    CHECK(derived_category_ball(IdealData::zero(A), Strategy::Auto).ball.format() == "<k>_2");
    CHECK(derived_category_ball(IdealData::zero(free_ring("x y z")), Strategy::Regular).ball.format() == "<R>_4");

    auto C = free_ring("x y");
    CHECK_THROWS_AS(derived_category_ball(ideal(C, "x^2 - y^3"), Strategy::Auto), UnsupportedError);
    CHECK_THROWS_AS(derived_category_ball(ideal(C, "x"), Strategy::Artinian), UnsupportedError);
  }

  TEST_CASE("radical candidates from the caller") {
    auto C = free_ring("x y");
    DerivedBallOptions o;
    o.radical = std::vector<IdealData>{ideal(C, "x - y")};
    o.attest.prime_candidates = true;
    auto db = derived_category_ball(ideal(C, "(x - y)^2"), Strategy::NilpotentFiltration, o);
    CHECK(db.ball.radius == 4);
    o.attest.prime_candidates = false;
    CHECK_THROWS_AS(derived_category_ball(ideal(C, "(x - y)^2"), Strategy::NilpotentFiltration, o),
                    UnsupportedError);
  }

  TEST_CASE("formula arithmetic") {
    CHECK(main_radius(6, 6, 0) == 42);
    CHECK(main_radius(1, 2, 2) == 1);
    CHECK(dimsing1_radius(2, 0, 3, 1) == 12);
    CHECK(dimsing1_radius(4, 0, 2, 1) == 16);
    CHECK(liu_radius(1, 0, 1) == 2);
    CHECK(dimsing0_radius(2, 1, 0) == 4);
    CHECK_THROWS_AS(main_radius(0, 2, 1), DomainError);
    CHECK_THROWS_AS(main_radius(2, 1, 3), DomainError);
  }

  TEST_CASE("extended integers") {
    auto inf = ExtInt::infinity();
    CHECK(inf.is_infinite());
    CHECK(ExtInt(5) < inf);
    CHECK(min(inf, ExtInt(3)) == ExtInt(3));
    CHECK((inf + ExtInt(1)).is_infinite());
    CHECK((inf * ExtInt(2)).is_infinite());
    CHECK_THROWS_AS(inf * ExtInt(0), DomainError);
    CHECK_THROWS_AS(inf.value(), DomainError);
    CHECK(inf.to_string() == "inf");
  }

  TEST_CASE("countable CM type takes the exact minimum") {
    CHECK(countable_cm_radius(ExtInt::infinity(), 2, 2, 16) == ExtInt(16));
    CHECK(countable_cm_radius(ExtInt(2), 3, 2, 16) == ExtInt(6));
    CHECK(countable_cm_radius(ExtInt(9), 3, 2, 16) == ExtInt(16));
    std::mt19937 rng(4);
    std::uniform_int_distribution<long> small(1, 9);
    for (int k = 0; k < 200; ++k) {
      long ll = small(rng), dim = small(rng) % 3, mu = dim + small(rng), grade = small(rng) % (mu + 1);
      long d1 = dimsing1_radius(small(rng), 0, mu, grade);
      auto r = countable_cm_radius(ExtInt(ll), mu, dim, d1);
      CHECK(r == ExtInt(std::min((ll + 1) * (mu - dim + 1), d1)));
      CHECK(countable_cm_radius(ExtInt::infinity(), mu, dim, d1) == ExtInt(d1));
    }
  }

  TEST_CASE("radii are monotone in their inputs") {
    std::mt19937 rng(6);
    std::uniform_int_distribution<long> small(1, 20);
    for (int k = 0; k < 500; ++k) {
      long r = small(rng), mu = small(rng), grade = small(rng) % (mu + 1), ll = small(rng);
      CHECK(main_radius(r + 1, mu, grade) >= main_radius(r, mu, grade));
      CHECK(main_radius(r, mu + 1, grade) >= main_radius(r, mu, grade));
      CHECK(dimsing0_radius(ll + 1, mu, grade) >= dimsing0_radius(ll, mu, grade));
      CHECK(dimsing0_radius(ll, mu + 1, grade) >= dimsing0_radius(ll, mu, grade));
      CHECK(liu_radius(mu, grade, ll + 1) >= liu_radius(mu, grade, ll));
    }
  }

  TEST_CASE("liu and dimsing0 agree when grade equals depth") {
    struct Case {
      RingPtr R;
      std::string I;
    };
    std::vector<Case> cases = {
        {free_ring("x"), "x^3"},
        {free_ring("x y"), "x^2, y^2"},
        {free_ring("x y"), "x^2, x*y, y^3"},
        {load("dual.ring"), "x, y^2"},
        {quotient("x y z", "x*y - z^2"), "x, y, z"},
        {quotient("x y", "x^2 - y^2"), "x^2, y"},
    };
    for (const auto& c : cases) {
      auto I = ideal(c.R, c.I);
      const long g = grade_koszul(I), d = depth_graded(*c.R);
      REQUIRE(g == d);
      const long m = mu(I), ll = loewy_length(I);
      CHECK(liu_radius(m, d, ll) == dimsing0_radius(ll, m, g));
    }
  }

  TEST_CASE("main formula reports") {
    SingularityInputs in{"R", "I", 6, 0, make_ball(Category::Derived, {"k", "R/(x, y)"}, 6, "test"),
                         {ok(kAnnihilator), ok(kSingularLocus)}};
    auto r = singularity_bound(in);
    REQUIRE(r.ball.has_value());
    CHECK(r.ball->format() == "<k ⊕ R/(x, y)>_42");
    CHECK(r.dim_bound == 41);

    in.mu = 2;
    in.grade = 2;
    in.derived = make_ball(Category::Derived, {"G"}, 1, "test");
    CHECK(singularity_bound(in).dim_bound == 0);

    in.hypotheses = {ok(kSingularLocus)};
    auto cls = singularity_bound(in);
    REQUIRE(cls.ball.has_value());
    CHECK(cls.ball->class_generator);
    CHECK_FALSE(cls.dim_bound.has_value());

    in.hypotheses = {ok(kAnnihilator), {"half-cohen-macaulay", Status::Failed, "x"}};
    CHECK_FALSE(singularity_bound(in).dim_bound.has_value());

    in.hypotheses = {ok(kAnnihilator)};
    in.derived.reset();
    auto cond = singularity_bound(in);
    CHECK_FALSE(cond.dim_bound.has_value());
    CHECK(cond.formula_text.find("dim D^b(R/I)") != std::string::npos);
  }

  TEST_CASE("special formulas") {
    SpecialInputs in;
    in.mu = 3;
    in.grade = 1;
    in.quotient_dim = 1;
    in.nilpotency = 2;
    in.loewy_t = 0;
    in.reduced_label = "R/(x, y, z)";
    in.hypotheses = {ok(kAnnihilator), ok(kSingularLocus)};
    auto r = special_bounds(Formula::DimSing1, in);
    REQUIRE(r.ball.has_value());
    CHECK(r.ball->format() == "<R/(x, y, z)>_12");
    CHECK(r.dim_bound == 11);

    in.hypotheses = {ok(kSingularLocus)};
    auto c = special_bounds(Formula::DimSing1, in);
    CHECK_FALSE(c.dim_bound.has_value());
    CHECK_FALSE(c.warnings.empty());

    SpecialInputs liu;
    liu.mu = 1;
    liu.depth = 0;
    liu.grade = 0;
    liu.loewy = ExtInt(1);
    liu.hypotheses = {ok(kAnnihilator)};
    CHECK(special_bounds(Formula::Liu, liu).ball->radius == 2);
    CHECK(special_bounds(Formula::DimSing0, liu).ball->radius == 2);
    liu.loewy = ExtInt::infinity();
    CHECK_FALSE(special_bounds(Formula::Liu, liu).dim_bound.has_value());

    SpecialInputs dz;
    dz.derived = make_ball(Category::Derived, {"R/(x)"}, 2, "regular");
    dz.socle_label = "R/(x)";
    dz.hypotheses = {ok("depth-zero")};
    auto z = special_bounds(Formula::DepthZero, dz);
    CHECK(z.ball->format() == "<k>_2");
    CHECK(z.dim_bound == 1);
    dz.socle_label = "R/(x^2)";
    CHECK(special_bounds(Formula::DepthZero, dz).ball->format() == "<R/(x)>_2");
  }

  TEST_CASE("dim_bound is radius minus one") {
    std::mt19937 rng(10);
    std::uniform_int_distribution<long> small(1, 30);
    for (int k = 0; k < 200; ++k) {
      long mu = small(rng), grade = small(rng) % (mu + 1);
      SingularityInputs in{"R", "I", mu, grade, make_ball(Category::Derived, {"G"}, small(rng), "t"),
                           {ok(kAnnihilator)}};
      auto r = singularity_bound(in);
      REQUIRE(r.dim_bound.has_value());
      CHECK(*r.dim_bound + 1 == r.ball->radius);
    }
  }
}
