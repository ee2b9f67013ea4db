#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsg/ball.hpp"
#include "dsg/bounds.hpp"
#include "dsg/invariants.hpp"

namespace dsg {

enum class IdealSource { Jacobian, Socle, Explicit };

struct IdealChoice {
  IdealSource source = IdealSource::Jacobian;
  std::string text;  // generators for Explicit
};

/// "jacobian", "socle", or a comma-separated generator list.
IdealChoice parse_ideal_choice(const std::string& s);

struct PipelineOptions {
  IdealChoice ideal;
  std::optional<std::string> radical;  // "x, y; z" : candidate primes separated by ';'
  Attestations attest;
  Strategy strategy = Strategy::Auto;
  std::optional<long> derived_radius;
  std::optional<Formula> formula;  // nullopt: every applicable formula, smallest radius wins
  int nil_cap = 64;
};

struct Analysis {
  RingPtr ring;
  IdealData ideal;
  std::optional<JacobianIdeal> jacobian;
  InvariantValues invariants;
  std::optional<NilpotencyData> nilpotency;
  std::vector<HypothesisStatus> hypotheses;
  std::vector<std::string> warnings;
  std::vector<std::string> trace;
};

IdealData resolve_ideal(const RingPtr& R, const IdealChoice& choice);
std::vector<IdealData> parse_radical(const RingPtr& R, const std::string& text);

/// Invariants and hypothesis statuses for (R, I). Invariants that do not
/// apply are left empty with a warning.
Analysis analyze(const RingPtr& R, const PipelineOptions& opts);

/// The full bound pipeline. Throws UnsupportedError when mu or grade are
/// unavailable, or when no derived ball can be formed for a formula that
/// needs one.
BoundReport compute_bound(const RingPtr& R, const PipelineOptions& opts);

}  // namespace dsg
