#include "dsg/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "dsg/errors.hpp"
#include "dsg/module.hpp"
#include "dsg/resolution.hpp"

namespace dsg {

JacobianIdeal jacobian_ideal(const RingPtr& R) {
  const auto& P = R->ambient();
  std::vector<Polynomial> rels;
  for (const auto& f : R->relations())
    if (!f.is_zero()) rels.push_back(f);
  const auto h = static_cast<std::size_t>(R->codimension());
  if (h == 0 || rels.empty())
    return {IdealData::unit(R), 0, std::string("relation ideal has height 0; the presentation is regular")};
  auto jm = jacobian_matrix(P, rels);
  auto ms = minors(P, jm, h);
  return {minimal_generators(IdealData(R, std::move(ms))), h, std::nullopt};
}

int mu(const IdealData& I) {
  if (!I.ring().is_graded()) throw UnsupportedError("mu: ring is not graded");
  if (!I.is_graded()) throw UnsupportedError("mu: ideal is not weighted-homogeneous");
  return static_cast<int>(minimal_generators(I).generators().size());
}

namespace {

// Differential K_i -> K_{i-1} of the Koszul complex on x.
PolyMatrix koszul_differential(const PolyRing& P, const std::vector<Polynomial>& x, std::size_t i) {
  const auto m = x.size();
  auto src = subsets(m, i);
  auto dst = subsets(m, i - 1);
  std::map<std::vector<std::size_t>, std::size_t> row_of;
  for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
  PolyMatrix d(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto& S = src[c];
    for (std::size_t k = 0; k < S.size(); ++k) {
      auto face = S;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      const auto& xk = x[S[k]];
      d(row_of.at(face), c) = (k % 2 == 0) ? xk : P.neg(xk);
    }
  }
  return d;
}

}  // namespace

int grade_koszul(const IdealData& I) {
  if (I.is_unit()) throw DomainError("grade of the unit ideal");
  const auto& R = I.ring();
  const auto& P = R.ambient();
  const auto& J = R.relation_basis().elements();
  std::vector<Polynomial> x;
  for (const auto& g : I.generators()) {
    auto r = R.reduce(g);
    if (!r.is_zero()) x.push_back(std::move(r));
  }
  const auto m = x.size();
  if (m == 0) return 0;
  for (std::size_t i = m; i >= 1; --i) {
    auto cycles = syzygies_modulo(P, koszul_differential(P, x, i), J, R.options()).generators;
    std::vector<ModuleElement> boundaries;
    if (i < m) boundaries = columns(koszul_differential(P, x, i + 1));
    QuotientSubmodule image(P, subsets(m, i).size(), boundaries, J, R.options());
    for (const auto& z : cycles)
      if (!image.contains(z)) return static_cast<int>(m - i);
  }
  return static_cast<int>(m);
}

int loewy_length(const IdealData& I) {
  if (I.is_unit()) return 0;
  if (!I.is_graded()) throw UnsupportedError("Loewy length: quotient is not graded");
  auto d = krull_dimension(I);
  if (!d || *d != 0) throw UnsupportedError("Loewy length: quotient is not artinian");
  const auto& K = I.lifted();
  const auto& P = I.ring().ambient();
  const std::size_t n = P.nvars();
  constexpr std::size_t kMaxMonomials = 2'000'000;
  std::set<Exponents> seen;
  std::deque<Exponents> queue;
  queue.emplace_back(n, 0);
  seen.insert(queue.front());
  std::int64_t top = 0;
  while (!queue.empty()) {
    auto u = std::move(queue.front());
    queue.pop_front();
    top = std::max(top, total_degree(u));
    for (std::size_t j = 0; j < n; ++j) {
      auto v = u;
      ++v[j];
      if (seen.count(v)) continue;
      if (K.contains(P.monomial(v, P.field().one()))) continue;
      if (seen.size() >= kMaxMonomials) throw CapExceeded("Loewy length: monomial enumeration cap");
      seen.insert(v);
      queue.push_back(std::move(v));
    }
  }
  return static_cast<int>(top) + 1;
}

SocleData socle(const RingPtr& R) {
  auto c = ideal_colon(IdealData::zero(R), IdealData::maximal(R));
  SocleData out{minimal_generators(c), std::nullopt};
  if (R->is_graded() && depth_graded(*R) == 0) out.type = mu(out.socle);
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Attested: return "attested";
    case Status::Failed: return "failed";
    case Status::Unverifiable: return "unverifiable";
  }
  return "unverifiable";
}

std::vector<IdealData> auto_radical_candidates(const IdealData& I) {
  std::vector<IdealData> out;
  for (const auto& vars : monomial_minimal_primes(I)) out.push_back(IdealData::variables(I.ring_ptr(), vars));
  return out;
}

namespace {

bool variable_generated(const IdealData& P) {
  const auto& A = P.ring().ambient();
  return std::all_of(P.generators().begin(), P.generators().end(), [&](const Polynomial& g) {
    return g.is_monomial() && total_degree(g.leading().exp) == 1 && A.is_homogeneous(g);
  });
}

}  // namespace

NilpotencyData nilpotency_index(const IdealData& I, const std::vector<IdealData>& candidates, bool primes_attested,
                                int cap) {
  if (candidates.empty()) throw DomainError("nilpotency index: no prime candidates");
  NilpotencyData out;
  bool usable = true;
  for (const auto& P : candidates) {
    PrimeCandidate pc{P, Status::Unverifiable, contained_in(I, P)};
    if (P.is_unit())
      pc.primality = Status::Failed;
    else if (variable_generated(P))
      pc.primality = Status::Verified;
    else if (primes_attested)
      pc.primality = Status::Attested;
    usable = usable && pc.contains_ideal && holds(pc.primality);
    out.candidates.push_back(std::move(pc));
  }
  if (!usable) return out;
  auto N = candidates.front();
  for (std::size_t k = 1; k < candidates.size(); ++k) N = ideal_intersection(N, candidates[k]);
  auto power = N;
  for (int e = 1; e <= cap; ++e) {
    if (contained_in(power, I)) {
      out.index = e;
      return out;
    }
    if (e < cap) power = minimal_generators(ideal_product(power, N));
  }
  out.capped = true;
  return out;
}

Attestations parse_attestations(const std::string& text) {
  Attestations a;
  std::stringstream ss(text);
  std::string key;
  std::size_t pos = 0;
  while (std::getline(ss, key, ',')) {
    auto b = key.find_first_not_of(" \t");
    auto e = key.find_last_not_of(" \t");
    auto k = b == std::string::npos ? std::string() : key.substr(b, e - b + 1);
    if (k.empty()) {
    } else if (k == "half-cm-local") {
      a.half_cm_local = true;
    } else if (k == "equidimensional") {
      a.equidimensional = true;
    } else if (k == "prime-candidates") {
      a.prime_candidates = true;
    } else if (k == "ann" || k == "annihilator") {
      a.annihilator = true;
    } else if (k == "countable-cm-type") {
      a.countable_cm_type = true;
    } else {
      throw ParseError("unknown attestation '" + k + "'", pos);
    }
    pos += key.size() + 1;
  }
  return a;
}

namespace {

std::string format_prime(const RingPresentation& R, const std::vector<std::size_t>& vars) {
  std::string s = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + R.ambient().variables()[vars[i]];
  return s + ")";
}

}  // namespace

HypothesisStatus check_equidimensional(const RingPresentation& R, const Attestations& att) {
  HypothesisStatus h{"equidimensional", Status::Unverifiable, ""};
  const auto& G = R.relation_basis().elements();
  if (G.empty()) {
    h.status = Status::Verified;
    h.evidence = "polynomial ring";
    return h;
  }
  if (G.size() == 1) {
    h.status = Status::Verified;
    h.evidence = "principal relation ideal (hypersurface)";
    return h;
  }
  auto linear = [](const Polynomial& g) {
    return std::all_of(g.terms().begin(), g.terms().end(), [](const Term& t) { return total_degree(t.exp) == 1; });
  };
  if (std::all_of(G.begin(), G.end(), linear)) {
    h.status = Status::Verified;
    h.evidence = "linear relations: R is a polynomial ring";
    return h;
  }
  if (std::all_of(G.begin(), G.end(), [](const Polynomial& g) { return g.is_monomial(); })) {
    RingPtr tmp = std::make_shared<const RingPresentation>(R);
    auto primes = monomial_minimal_primes(IdealData::zero(tmp));
    std::set<std::size_t> dims;
    std::string list;
    for (const auto& p : primes) {
      dims.insert(R.nvars() - p.size());
      list += (list.empty() ? "" : ", ") + format_prime(R, p);
    }
    h.status = dims.size() == 1 ? Status::Verified : Status::Failed;
    h.evidence = "monomial relations; minimal primes " + list;
    h.evidence += dims.size() == 1 ? " all of dimension " + std::to_string(*dims.begin())
                                   : " have different dimensions";
    return h;
  }
  if (att.equidimensional) {
    h.status = Status::Attested;
    h.evidence = "attested by the caller";
  } else {
    h.evidence = "relations are neither monomial nor principal";
  }
  return h;
}

HypothesisStatus check_half_cm(const RingPresentation& R, const Attestations& att) {
  HypothesisStatus h{"half-cohen-macaulay", Status::Unverifiable, ""};
  if (!R.is_graded()) {
    h.status = att.half_cm_local ? Status::Attested : Status::Unverifiable;
    h.evidence = "ring is not graded; depth not computed";
    return h;
  }
  const int depth = depth_graded(R);
  const int dim = R.dimension();
  const auto ineq = "2*" + std::to_string(depth) + (2 * depth >= dim ? " >= " : " < ") + std::to_string(dim);
  if (depth == dim) {
    h.status = Status::Verified;
    h.evidence = "Cohen-Macaulay: depth = dim = " + std::to_string(dim);
  } else if (2 * depth >= dim) {
    h.status = att.half_cm_local ? Status::Attested : Status::Unverifiable;
    h.evidence = "graded check " + ineq + " passed; condition at non-irrelevant primes " +
                 (att.half_cm_local ? "attested" : "not verified");
  } else {
    h.status = Status::Failed;
    h.evidence = "graded check " + ineq + " fails";
  }
  return h;
}

HypothesisStatus check_singular_locus(const IdealData& I, const JacobianIdeal& jac, const HypothesisStatus& equidim) {
  HypothesisStatus h{"singular-locus-in-V(I)", Status::Unverifiable, ""};
  if (!holds(equidim.status)) {
    h.evidence = "Jacobian criterion needs equidimensionality, which is not established";
    return h;
  }
  const auto& R = I.ring();
  if (!same_ideal(I, jac.ideal)) {
    for (const auto& g : I.generators())
      if (!radical_membership(g, jac.ideal)) {
        h.status = Status::Failed;
        h.evidence = R.format(g) + " is not in the radical of the Jacobian ideal";
        return h;
      }
    h.evidence = "I is contained in the radical of the Jacobian ideal";
  } else {
    h.evidence = "I is the Jacobian ideal";
  }
  h.status = equidim.status;
  h.evidence += equidim.status == Status::Verified ? " (equidimensional, perfect field)"
                                                   : " (equidimensionality attested)";
  return h;
}

HypothesisStatus check_regular(const RingPtr& R, const Attestations& att) {
  HypothesisStatus h{"regular", Status::Unverifiable, ""};
  auto eq = check_equidimensional(*R, att);
  auto jac = jacobian_ideal(R);
  if (!jac.ideal.is_unit()) {
    h.status = holds(eq.status) ? Status::Failed : Status::Unverifiable;
    h.evidence = "Jacobian ideal " + jac.ideal.format() + " is proper";
    return h;
  }
  if (!holds(eq.status)) {
    h.evidence = "Jacobian ideal is the unit ideal but equidimensionality is not established";
    return h;
  }
  h.status = eq.status;
  h.evidence = "Jacobian ideal is the unit ideal; " + eq.evidence;
  return h;
}

HypothesisStatus check_depth_zero(const RingPresentation& R) {
  HypothesisStatus h{"depth-zero", Status::Unverifiable, ""};
  if (!R.is_graded()) {
    h.evidence = "ring is not graded; depth not computed";
    return h;
  }
  const int d = depth_graded(R);
  h.status = d == 0 ? Status::Verified : Status::Failed;
  h.evidence = "depth R = " + std::to_string(d);
  return h;
}

}  // namespace dsg
