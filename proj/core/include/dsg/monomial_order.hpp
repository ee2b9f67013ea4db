#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dsg {

using Exponents = std::vector<std::int32_t>;

/// Term order on monomials of a fixed polynomial ring.
///
/// Every kind is refined by the ring weights so that all orders are
/// well-orders (weights are strictly positive):
///  - WeightedGrevlex: weighted degree, ties by reverse lexicographic.
///  - Lex: plain lexicographic with X1 > X2 > ... > Xn.
///  - Elimination: weighted degree in the eliminated block first, ties by
///    weighted grevlex on all variables. Any monomial involving an
///    eliminated variable dominates every monomial that does not.
class MonomialOrder {
 public:
  enum class Kind { WeightedGrevlex, Lex, Elimination };

  static MonomialOrder grevlex(std::vector<std::int32_t> weights);
  static MonomialOrder lex(std::vector<std::int32_t> weights);
  static MonomialOrder elimination(std::vector<std::int32_t> weights, std::vector<bool> eliminate);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return weights_.size(); }
  const std::vector<std::int32_t>& weights() const { return weights_; }
  const std::vector<bool>& eliminated() const { return eliminate_; }
  bool degree_compatible() const { return kind_ == Kind::WeightedGrevlex; }

  std::int64_t weighted_degree(std::span<const std::int32_t> e) const;
  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(std::span<const std::int32_t> a, std::span<const std::int32_t> b) const;

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::vector<std::int32_t> w, std::vector<bool> elim)
      : kind_(k), weights_(std::move(w)), eliminate_(std::move(elim)) {}

  int compare_grevlex(std::span<const std::int32_t> a, std::span<const std::int32_t> b) const;

  Kind kind_;
  std::vector<std::int32_t> weights_;
  std::vector<bool> eliminate_;
};

/// Extension of a ring order to free modules R^m. Components are numbered
/// from 0; a smaller component index ranks higher. With `split > 0`, every
/// term in a component below `split` dominates every term at or above it;
/// this is the order used to read off syzygies from an augmented module.
struct ModuleOrder {
  enum class Kind { TermOverPosition, PositionOverTerm };
  Kind kind = Kind::TermOverPosition;
  std::size_t split = 0;

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;
};

// Exponent helpers shared by the arithmetic and the Groebner engine.
bool divides(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
Exponents lcm(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
Exponents quotient(std::span<const std::int32_t> b, std::span<const std::int32_t> a);  // b / a
Exponents product(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
bool coprime(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
std::int64_t total_degree(std::span<const std::int32_t> e);

}  // namespace dsg
