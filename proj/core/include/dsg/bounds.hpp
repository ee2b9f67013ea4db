#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dsg/ball.hpp"
#include "dsg/invariants.hpp"

namespace dsg {

/// Non-negative integer or +infinity. Loewy lengths of non-artinian rings
/// are infinite.
class ExtInt {
 public:
  ExtInt(long v) : value_(v) {}  // NOLINT: implicit by design
  static ExtInt infinity() { return ExtInt(); }

  bool is_infinite() const { return !value_; }
  long value() const;  // throws DomainError on infinity
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend ExtInt operator+(ExtInt a, ExtInt b);
  friend ExtInt operator*(ExtInt a, ExtInt b);  // inf * 0 is rejected
  friend bool operator==(const ExtInt&, const ExtInt&) = default;
  friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b);

 private:
  ExtInt() = default;
  std::optional<long> value_;
};

ExtInt min(ExtInt a, ExtInt b);

enum class Formula { Main, Liu, DimSing0, DimSing1, CountableCM, DepthZero };
std::string to_string(Formula f);
std::optional<Formula> parse_formula(const std::string& s);

// Radii. Each throws DomainError on a non-positive factor.
long main_radius(long derived_radius, long mu, long grade);      // r (mu - grade + 1)
long liu_radius(long mu, long depth, long loewy);                 // (mu - depth + 1) ll
long dimsing0_radius(long loewy, long mu, long grade);            // ll (mu - grade + 1)
long dimsing1_radius(long nil, long loewy_t, long mu, long grade);  // 2 n (ll(T) + 1)(mu - grade + 1)
/// min{ (ll + 1)(mu - dim + 1), dimsing1 }, with ll possibly infinite.
ExtInt countable_cm_radius(ExtInt loewy, long mu, long dim, long dimsing1);

struct InvariantValues {
  std::optional<long> mu, grade, depth, dim, loewy, nilpotency, type;
};

struct BoundReport {
  std::string ring;
  std::string ideal;
  InvariantValues invariants;
  std::vector<HypothesisStatus> hypotheses;
  std::optional<BallExpr> ball;
  std::optional<long> dim_bound;  // ball->radius - 1 when unconditional
  std::string formula;            // identifier
  std::string formula_text;       // the formula with values (or unknowns) filled in
  std::vector<std::string> trace;
  std::vector<std::string> warnings;

  bool conditional() const { return !dim_bound; }
};

/// Looks up a hypothesis by name.
const HypothesisStatus* find_hypothesis(const std::vector<HypothesisStatus>& hs, const std::string& name);

inline constexpr const char* kAnnihilator = "ideal-in-annihilator";
inline constexpr const char* kSingularLocus = "singular-locus-in-V(I)";

struct SingularityInputs {
  std::string ring, ideal;
  long mu = 0, grade = 0;
  std::optional<BallExpr> derived;          // a ball equal to D^b(R/I)
  std::vector<HypothesisStatus> hypotheses;  // must include kAnnihilator and kSingularLocus to go beyond conditional
};

/// D_sg(R) = <mod R/I>_(mu - grade + 1). With I ⊆ ann D_sg(R) and a derived
/// ball the radii multiply; with only Sing R ⊆ V(I) the report carries the
/// class generator filt{R/p : p in V(I)} and no numeric bound.
BoundReport singularity_bound(const SingularityInputs& in);

struct SpecialInputs {
  std::string ring, ideal;
  std::optional<long> mu, grade, depth, dim;
  std::optional<long> quotient_dim;  // dim R/I
  std::optional<ExtInt> loewy;       // ll(R/I)
  std::optional<long> nilpotency;    // n(S), S = R/I
  std::optional<long> loewy_t;       // ll(T); 0 when S_red is regular
  std::optional<std::string> reduced_label;  // label of S_red relative to R
  std::optional<BallExpr> derived;   // depth-zero: a ball equal to D^b(R/soc R)
  std::optional<std::string> socle_label;    // label of R/soc R
  std::vector<HypothesisStatus> hypotheses;
};

BoundReport special_bounds(Formula f, const SpecialInputs& in);

}  // namespace dsg
