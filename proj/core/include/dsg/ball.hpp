#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsg/ideal.hpp"
#include "dsg/invariants.hpp"

namespace dsg {

// D^b(S) for a quotient S = R/I, or the singularity category D_sg(R).
enum class Category { Derived, Singularity };
std::string to_string(Category c);

/// <G>_r: the objects built from G (sums, summands, shifts) in at most r
/// cones. G is a list of cyclic-module labels; a class generator names a
/// whole family ("mod R/I").
struct BallExpr {
  Category category = Category::Derived;
  std::vector<std::string> generator;
  bool class_generator = false;
  long radius = 1;
  std::vector<std::string> provenance;

  std::string generator_label() const;  // summands joined by " ⊕ "
  std::string format() const;           // "<k ⊕ R/(x, y)>_42"
};

/// Throws DomainError unless radius >= 1 and the generator is nonempty.
BallExpr make_ball(Category c, std::vector<std::string> generator, long radius, std::string rule,
                   bool class_generator = false);

/// <A>_a * <B>_b ⊆ <A ⊕ B>_{a+b}; repeated summands collapse.
BallExpr star(const BallExpr& a, const BallExpr& b);
/// An m-step filtration with factors in <G>_r lies in <G>_{m r}.
BallExpr filtration(const BallExpr& inner, long m);

/// Label of R/Q relative to R: "k" for the irrelevant ideal, "R" for the
/// zero ideal, otherwise "R/(...)" with minimal generators.
std::string module_label(const IdealData& Q);

enum class Strategy { Auto, Artinian, Regular, NilpotentFiltration, SocleSplit };
std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& s);

struct DerivedBallOptions {
  std::optional<std::vector<IdealData>> radical;  // candidate minimal primes of R/I
  Attestations attest;
  int nil_cap = 64;
};

struct StrategyOutcome {
  Strategy strategy;
  std::optional<BallExpr> ball;
  std::string detail;  // why it applies (or not)
};

struct DerivedBall {
  BallExpr ball;
  Strategy chosen = Strategy::Auto;
  std::vector<StrategyOutcome> trace;
  std::optional<NilpotencyData> nilpotency;
  std::optional<IdealData> socle_annihilator;  // (0 :_S p) for the socle split
};

/// A ball <G>_r = D^b(R/I). `Auto` tries every strategy and keeps the
/// smallest radius. Throws UnsupportedError when nothing applies.
DerivedBall derived_category_ball(const IdealData& I, Strategy strategy, const DerivedBallOptions& opts = {});

}  // namespace dsg
