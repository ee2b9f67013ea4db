#include "dsg/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "dsg/errors.hpp"
#include "dsg/parse.hpp"
#include "dsg/resolution.hpp"
#include "dsg/ringfile.hpp"

namespace dsg {

IdealChoice parse_ideal_choice(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  auto t = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  if (t == "jacobian") return {IdealSource::Jacobian, ""};
  if (t == "socle") return {IdealSource::Socle, ""};
  return {IdealSource::Explicit, s};
}

IdealData resolve_ideal(const RingPtr& R, const IdealChoice& choice) {
  switch (choice.source) {
    case IdealSource::Jacobian: return jacobian_ideal(R).ideal;
    case IdealSource::Socle: return socle(R).socle;
    case IdealSource::Explicit: return IdealData(R, parse_polynomial_list(choice.text, R->ambient()));
  }
  throw std::logic_error("unreachable");
}

std::vector<IdealData> parse_radical(const RingPtr& R, const std::string& text) {
  std::vector<IdealData> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    auto part = text.substr(start, end - start);
    try {
      auto gens = parse_polynomial_list(part, R->ambient());
      if (!gens.empty()) out.emplace_back(R, std::move(gens));
    } catch (const ParseError& e) {
      throw ParseError(std::string("--radical: ") + e.what(), start + e.position());
    }
    start = end + 1;
  }
  if (out.empty()) throw ParseError("--radical: no candidate primes", 0);
  return out;
}

namespace {

HypothesisStatus combine(std::string name, std::initializer_list<const HypothesisStatus*> parts, std::string how) {
  HypothesisStatus h{std::move(name), Status::Verified, std::move(how)};
  for (const auto* p : parts) {
    if (p->status == Status::Failed) {
      h.status = Status::Failed;
      h.evidence += "; " + p->name + " failed";
      return h;
    }
    if (p->status == Status::Unverifiable) h.status = Status::Unverifiable;
    if (p->status == Status::Attested && h.status == Status::Verified) h.status = Status::Attested;
  }
  if (h.status == Status::Unverifiable) h.evidence += "; not all premises established";
  return h;
}

}  // namespace

Analysis analyze(const RingPtr& R, const PipelineOptions& o) {
  std::optional<JacobianIdeal> jac;
  if (o.ideal.source == IdealSource::Jacobian) jac = jacobian_ideal(R);
  Analysis a{R, o.ideal.source == IdealSource::Jacobian ? jac->ideal : resolve_ideal(R, o.ideal), jac, {}, {}, {},
             {}, {}};
  auto& inv = a.invariants;
  const auto& I = a.ideal;
  if (jac && jac->note) a.warnings.push_back(*jac->note);

  inv.dim = R->dimension();
  try {
    inv.mu = mu(I);
  } catch (const UnsupportedError& e) {
    a.warnings.push_back(std::string("mu not computed: ") + e.what());
  }
  if (I.is_unit()) {
    a.warnings.push_back("I is the unit ideal");
  } else {
    inv.grade = grade_koszul(I);
  }
  if (R->is_graded()) {
    inv.depth = depth_graded(*R);
  } else {
    a.warnings.push_back("depth not computed: relations are not weighted-homogeneous");
  }
  if (!I.is_unit()) {
    if (krull_dimension(I) == 0) {
      try {
        inv.loewy = loewy_length(I);
      } catch (const UnsupportedError& e) {
        a.warnings.push_back(std::string("Loewy length not computed: ") + e.what());
      }
    } else {
      a.trace.push_back("R/I is not artinian: ll(R/I) = inf");
    }
    std::optional<std::vector<IdealData>> cands;
    if (o.radical) {
      cands = parse_radical(R, *o.radical);
    } else if (I.is_monomial()) {
      cands = auto_radical_candidates(I);
    }
    if (cands) {
      a.nilpotency = nilpotency_index(I, *cands, o.attest.prime_candidates, o.nil_cap);
      if (a.nilpotency->index) {
        inv.nilpotency = *a.nilpotency->index;
      } else {
        a.warnings.push_back(a.nilpotency->capped ? "nilpotency index exceeds the cap"
                                                  : "candidate primes not usable for the nilpotency index");
      }
    } else {
      a.warnings.push_back("nilpotency index not computed: supply --radical candidates");
    }
  }
  if (inv.depth && *inv.depth == 0) inv.type = socle(R).type;

  auto& H = a.hypotheses;
  switch (o.ideal.source) {
    case IdealSource::Jacobian: {
      auto eq = check_equidimensional(*R, o.attest);
      auto hcm = check_half_cm(*R, o.attest);
      auto sing = check_singular_locus(I, *jac, eq);
      auto ann = combine(kAnnihilator, {&eq, &hcm}, "jac(R) annihilates D_sg(R) for equidimensional half-CM R");
      H = {eq, hcm, sing, ann};
      break;
    }
    case IdealSource::Socle: {
      auto dz = check_depth_zero(*R);
      auto ann = combine(kAnnihilator, {&dz}, "soc R annihilates the syzygies when depth R = 0");
      H = {dz, ann};
      break;
    }
    case IdealSource::Explicit: {
      auto eq = check_equidimensional(*R, o.attest);
      a.jacobian = jacobian_ideal(R);
      auto sing = check_singular_locus(I, *a.jacobian, eq);
      H = {eq, sing};
      if (o.attest.annihilator) {
        H.push_back({kAnnihilator, Status::Attested, "attested by the caller"});
      } else if (contained_in(I, a.jacobian->ideal)) {
        auto hcm = check_half_cm(*R, o.attest);
        H.push_back(hcm);
        H.push_back(combine(kAnnihilator, {&eq, &hcm}, "I is contained in jac(R)"));
      } else {
        H.push_back({kAnnihilator, Status::Unverifiable, "not derivable; attest with 'ann'"});
      }
      break;
    }
  }
  if (o.attest.countable_cm_type) H.push_back({"countable-cm-type", Status::Attested, "attested by the caller"});
  return a;
}

namespace {

std::optional<BallExpr> user_ball(const PipelineOptions& o) {
  if (!o.derived_radius) return std::nullopt;
  return make_ball(Category::Derived, {"G"}, *o.derived_radius,
                   "user-supplied: D^b(R/I) = <G>_" + std::to_string(*o.derived_radius));
}

void record(std::vector<std::string>& trace, const DerivedBall& db) {
  for (const auto& s : db.trace)
    trace.push_back("strategy " + to_string(s.strategy) + ": " + (s.ball ? s.ball->format() + "; " : "not applicable; ") +
                    s.detail);
  trace.push_back("derived ball: " + db.ball.format() + " via " + to_string(db.chosen));
}

}  // namespace

BoundReport compute_bound(const RingPtr& R, const PipelineOptions& o) {
  auto a = analyze(R, o);
  const auto& inv = a.invariants;
  const auto& I = a.ideal;
  if (I.is_unit()) throw UnsupportedError("bound: I is the unit ideal");
  if (!inv.mu) throw UnsupportedError("bound: mu(I) requires a graded ring and ideal");
  if (!inv.grade) throw UnsupportedError("bound: grade not available");

  const bool socle_route = o.ideal.source == IdealSource::Socle;
  std::vector<Formula> formulas;
  if (o.formula) {
    formulas = {*o.formula};
  } else if (socle_route) {
    formulas = {Formula::DepthZero};
  } else {
    formulas = {Formula::Main};
    if (inv.loewy) formulas.insert(formulas.end(), {Formula::DimSing0, Formula::Liu});
    if (krull_dimension(I) == 1 && inv.nilpotency) formulas.push_back(Formula::DimSing1);
    if (o.attest.countable_cm_type && inv.nilpotency) formulas.push_back(Formula::CountableCM);
  }

  std::vector<std::string> trace = a.trace;
  std::vector<std::string> warnings = a.warnings;

  // Derived ball of R/I, or of R/soc R on the depth-zero route.
  std::optional<BallExpr> derived = user_ball(o);
  std::optional<std::string> derived_error;
  const bool wants_derived = std::find(formulas.begin(), formulas.end(), Formula::Main) != formulas.end() ||
                             std::find(formulas.begin(), formulas.end(), Formula::DepthZero) != formulas.end();
  if (!derived && wants_derived) {
    DerivedBallOptions dopt;
    if (o.radical) dopt.radical = parse_radical(R, *o.radical);
    dopt.attest = o.attest;
    dopt.nil_cap = o.nil_cap;
    try {
      auto db = derived_category_ball(I, o.strategy, dopt);
      record(trace, db);
      if (db.socle_annihilator && !db.socle_annihilator->is_unit())
        trace.push_back("(0 :_S p) = " + db.socle_annihilator->format());
      derived = db.ball;
    } catch (const UnsupportedError& e) {
      derived_error = e.what();
      trace.push_back(std::string("derived ball: ") + e.what());
    }
  }

  // S_red data for the one-dimensional formulas.
  std::optional<long> loewy_t;
  std::optional<std::string> reduced_label;
  if (a.nilpotency && a.nilpotency->index) {
    auto N = a.nilpotency->candidates.front().prime;
    for (std::size_t k = 1; k < a.nilpotency->candidates.size(); ++k)
      N = ideal_intersection(N, a.nilpotency->candidates[k].prime);
    reduced_label = module_label(N);
    auto reg = check_regular(quotient_ring(N), o.attest);
    if (holds(reg.status)) {
      loewy_t = 0;
      trace.push_back("S_red = " + *reduced_label + " is regular: T = 0");
    } else {
      trace.push_back("S_red = " + *reduced_label + " not shown regular: ll(T) unknown");
    }
  }

  std::vector<BoundReport> reports;
  for (auto f : formulas) {
    if (f == Formula::Main) {
      SingularityInputs in{"", "", *inv.mu, *inv.grade, derived, a.hypotheses};
      reports.push_back(singularity_bound(in));
      continue;
    }
    SpecialInputs in;
    in.mu = inv.mu;
    in.grade = inv.grade;
    in.depth = inv.depth;
    in.dim = inv.dim;
    in.quotient_dim = krull_dimension(I);
    in.loewy = inv.loewy ? std::optional<ExtInt>(*inv.loewy)
                         : (krull_dimension(I).value_or(0) > 0 ? std::optional<ExtInt>(ExtInt::infinity()) : std::nullopt);
    in.nilpotency = inv.nilpotency;
    in.loewy_t = loewy_t;
    in.reduced_label = reduced_label;
    in.derived = derived;
    if (socle_route) in.socle_label = module_label(I);
    in.hypotheses = a.hypotheses;
    reports.push_back(special_bounds(f, in));
  }

  std::size_t best = 0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    trace.push_back("formula " + r.formula + ": " + (r.dim_bound ? "radius " + std::to_string(r.ball->radius)
                                                                  : std::string("conditional")));
    if (r.dim_bound && (!reports[best].dim_bound || *r.dim_bound < *reports[best].dim_bound)) best = k;
  }
  auto out = reports[best];
  if (!out.dim_bound && derived_error && wants_derived && !o.derived_radius) throw UnsupportedError(*derived_error);
  out.ring = describe_ring(*R);
  out.ideal = I.format();
  out.invariants = inv;
  out.hypotheses = a.hypotheses;
  warnings.insert(warnings.end(), out.warnings.begin(), out.warnings.end());
  out.warnings = std::move(warnings);
  trace.insert(trace.end(), out.trace.begin(), out.trace.end());
  out.trace = std::move(trace);
  return out;
}

}  // namespace dsg
