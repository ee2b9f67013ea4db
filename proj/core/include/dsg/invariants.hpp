#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsg/ideal.hpp"
#include "dsg/matrix.hpp"

namespace dsg {

struct JacobianIdeal {
  IdealData ideal;
  std::size_t height = 0;  // size of the minors
  std::optional<std::string> note;
};

/// Ideal of R generated by the h x h minors of the Jacobian matrix of the
/// relations, h = n - dim R. For h = 0 the ideal is the unit ideal.
JacobianIdeal jacobian_ideal(const RingPtr& R);

/// Minimal number of generators. Requires graded R and I; throws
/// UnsupportedError otherwise.
int mu(const IdealData& I);

/// grade(I, R) from Koszul homology of the given generators:
/// m - max{ i : H_i(x; R) != 0 }. Throws DomainError on the unit ideal.
int grade_koszul(const IdealData& I);

/// Loewy length of R/I: least l with m^l (R/I) = 0, m the irrelevant ideal.
/// Requires R/I artinian and graded.
int loewy_length(const IdealData& I);

struct SocleData {
  IdealData socle;          // (0 :_R m), minimally generated
  std::optional<int> type;  // mu of the socle, when depth R = 0
};
SocleData socle(const RingPtr& R);

enum class Status { Verified, Attested, Failed, Unverifiable };
std::string to_string(Status s);
inline bool holds(Status s) { return s == Status::Verified || s == Status::Attested; }

struct HypothesisStatus {
  std::string name;
  Status status = Status::Unverifiable;
  std::string evidence;
};

struct PrimeCandidate {
  IdealData prime;
  Status primality = Status::Unverifiable;  // variable-generated primes are verified
  bool contains_ideal = false;
};

struct NilpotencyData {
  std::vector<PrimeCandidate> candidates;
  std::optional<int> index;  // least e with (∩P)^e ⊆ I
  bool capped = false;
};

/// Candidate minimal primes of R/I: the variable primes of a monomial ideal.
/// Throws UnsupportedError for other ideals.
std::vector<IdealData> auto_radical_candidates(const IdealData& I);

/// Nilpotency index of R/I relative to the intersection of `candidates`.
NilpotencyData nilpotency_index(const IdealData& I, const std::vector<IdealData>& candidates,
                                bool primes_attested, int cap = 64);

struct Attestations {
  bool half_cm_local = false;
  bool equidimensional = false;
  bool prime_candidates = false;
  bool annihilator = false;
  bool countable_cm_type = false;
};

/// Parses a comma-separated attestation list; throws ParseError on unknown keys.
Attestations parse_attestations(const std::string& text);

HypothesisStatus check_equidimensional(const RingPresentation& R, const Attestations& att);
HypothesisStatus check_half_cm(const RingPresentation& R, const Attestations& att);
/// Sing(R) ⊆ V(I) via the Jacobian criterion: I ⊆ √jac with R equidimensional.
HypothesisStatus check_singular_locus(const IdealData& I, const JacobianIdeal& jac, const HypothesisStatus& equidim);
/// jac(R) is the unit ideal on an equidimensional presentation.
HypothesisStatus check_regular(const RingPtr& R, const Attestations& att);
HypothesisStatus check_depth_zero(const RingPresentation& R);

}  // namespace dsg
