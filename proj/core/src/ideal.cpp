#include "dsg/ideal.hpp"

#include <algorithm>

#include "dsg/errors.hpp"

namespace dsg {

namespace {

GroebnerBasis lift(const RingPresentation& R, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = R.relations();
  all.insert(all.end(), gens.begin(), gens.end());
  return reduced_groebner(R.ambient(), all, R.options());
}

void same_ring(const IdealData& a, const IdealData& b) {
  if (a.ring_ptr() != b.ring_ptr() && !(a.ring().ambient() == b.ring().ambient() &&
                                        a.ring().relation_basis() == b.ring().relation_basis()))
    throw DomainError("ideals live in different rings");
}

// Normal forms modulo J, nonzero, monic, without duplicates.
std::vector<Polynomial> tidy(const RingPresentation& R, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    auto r = R.ambient().monic(R.reduce(g));
    if (r.is_zero()) continue;
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

IdealData::IdealData(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), lifted_(lift(*ring_, gens_)) {}

IdealData IdealData::unit(RingPtr ring) {
  auto one = ring->ambient().one();
  return IdealData(std::move(ring), {one});
}

IdealData IdealData::variables(RingPtr ring, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> g;
  for (auto v : vars) g.push_back(ring->ambient().variable(v));
  return IdealData(std::move(ring), std::move(g));
}

IdealData IdealData::maximal(RingPtr ring) {
  std::vector<std::size_t> all(ring->nvars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return variables(std::move(ring), all);
}

bool IdealData::is_zero() const { return ring_->relation_basis() == lifted_; }

bool IdealData::is_monomial() const {
  return std::all_of(lifted_.elements().begin(), lifted_.elements().end(),
                     [](const Polynomial& p) { return p.is_monomial(); });
}

bool IdealData::is_graded() const {
  const auto& P = ring_->ambient();
  return std::all_of(lifted_.elements().begin(), lifted_.elements().end(),
                     [&](const Polynomial& p) { return P.is_homogeneous(p); });
}

std::string IdealData::format() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += ring_->format(gens_[i]);
  }
  if (gens_.empty()) s += "0";
  return s + ")";
}

bool same_ideal(const IdealData& a, const IdealData& b) {
  same_ring(a, b);
  return a.lifted() == b.lifted();
}

bool contained_in(const IdealData& a, const IdealData& b) {
  same_ring(a, b);
  return b.lifted().contains(a.lifted());
}

IdealData ideal_sum(const IdealData& a, const IdealData& b) {
  same_ring(a, b);
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return IdealData(a.ring_ptr(), tidy(a.ring(), g));
}

IdealData ideal_product(const IdealData& a, const IdealData& b) {
  same_ring(a, b);
  const auto& P = a.ring().ambient();
  std::vector<Polynomial> g;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(P.mul(x, y));
  return IdealData(a.ring_ptr(), tidy(a.ring(), g));
}

IdealData ideal_power(const IdealData& a, unsigned e) {
  if (e == 0) return IdealData::unit(a.ring_ptr());
  IdealData acc = a;
  for (unsigned k = 1; k < e; ++k) {
    auto p = ideal_product(acc, a);
    // Replace the product generators by the basis elements outside J.
    std::vector<Polynomial> g;
    for (const auto& x : p.lifted().elements())
      if (!a.ring().reduce(x).is_zero()) g.push_back(x);
    acc = IdealData(a.ring_ptr(), std::move(g));
  }
  return acc;
}

namespace {

// (A ∩ B) for ideals of P given by generator lists, via one tag variable.
std::vector<Polynomial> intersect_in_ambient(const PolyRing& P, const std::vector<Polynomial>& A,
                                             const std::vector<Polynomial>& B, const GroebnerOptions& opts) {
  std::vector<std::int32_t> w = P.weights();
  w.push_back(1);
  std::vector<bool> elim(P.nvars() + 1, false);
  elim.back() = true;
  const std::string tag = "_t";
  PolyRing E = P.extended(std::span<const std::string>(&tag, 1), MonomialOrder::elimination(w, elim));
  auto t = E.variable(P.nvars());
  auto one_minus_t = E.sub(E.one(), t);
  std::vector<Polynomial> gens;
  for (const auto& a : A) gens.push_back(E.mul(t, E.import(a)));
  for (const auto& b : B) gens.push_back(E.mul(one_minus_t, E.import(b)));
  auto G = reduced_groebner(E, gens, opts);
  std::vector<Polynomial> out;
  for (const auto& g : G.elements()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& term) { return term.exp.back() == 0; });
    if (free) out.push_back(P.import(E.restrict_to(g, P.nvars())));
  }
  return out;
}

}  // namespace

IdealData ideal_intersection(const IdealData& a, const IdealData& b) {
  same_ring(a, b);
  const auto& R = a.ring();
  auto g = intersect_in_ambient(R.ambient(), a.lifted().elements(), b.lifted().elements(), R.options());
  return IdealData(a.ring_ptr(), tidy(R, g));
}

IdealData ideal_colon(const IdealData& a, const IdealData& b) {
  same_ring(a, b);
  const auto& R = a.ring();
  const auto& P = R.ambient();
  std::optional<IdealData> acc;
  for (const auto& f : b.generators()) {
    auto fr = R.reduce(f);
    if (fr.is_zero() || a.lifted().contains(fr)) continue;  // (a : f) = R
    auto meet = intersect_in_ambient(P, a.lifted().elements(), {fr}, R.options());
    std::vector<Polynomial> q;
    for (const auto& m : meet) q.push_back(P.divide_exact(m, fr));
    IdealData part(a.ring_ptr(), tidy(R, q));
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  if (!acc) return IdealData::unit(a.ring_ptr());
  return *acc;
}

IdealData ideal_saturation(const IdealData& a, const IdealData& b) {
  IdealData cur = a;
  for (int round = 0; round < 256; ++round) {
    auto next = ideal_colon(cur, b);
    if (same_ideal(next, cur)) return cur;
    cur = std::move(next);
  }
  throw CapExceeded("saturation did not stabilise within 256 colon steps");
}

bool membership(const Polynomial& f, const IdealData& I) { return I.lifted().contains(f); }

bool radical_membership(const Polynomial& f, const IdealData& I) {
  const auto& R = I.ring();
  const auto& P = R.ambient();
  std::vector<std::int32_t> w = P.weights();
  w.push_back(1);
  const std::string tag = "_t";
  PolyRing E = P.extended(std::span<const std::string>(&tag, 1), MonomialOrder::grevlex(w));
  std::vector<Polynomial> gens;
  for (const auto& g : I.lifted().elements()) gens.push_back(E.import(g));
  gens.push_back(E.sub(E.one(), E.mul(E.variable(P.nvars()), E.import(f))));
  return reduced_groebner(E, gens, R.options()).is_unit();
}

std::optional<int> krull_dimension(const IdealData& I) {
  auto lm = I.lifted().leading_monomials();
  return dimension_from_leading(I.ring().nvars(), lm, I.is_unit());
}

std::vector<std::vector<std::size_t>> monomial_minimal_primes(const IdealData& I) {
  if (!I.is_monomial()) throw UnsupportedError("minimal primes: ideal is not monomial");
  if (I.is_unit()) return {};
  const std::size_t n = I.ring().nvars();
  if (n > 24) throw UnsupportedError("minimal primes: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.lifted().elements()) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.leading().exp[i] != 0) m |= 1u << i;
    supports.push_back(m);
  }
  // Subsets in increasing popcount; a cover is minimal iff it contains no
  // cover found earlier.
  std::vector<std::uint32_t> all((std::size_t{1} << n));
  for (std::uint32_t u = 0; u < all.size(); ++u) all[u] = u;
  std::stable_sort(all.begin(), all.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::uint32_t> covers;
  for (auto u : all) {
    bool cover = std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & u) != 0; });
    if (!cover) continue;
    if (std::any_of(covers.begin(), covers.end(), [&](std::uint32_t c) { return (c & ~u) == 0; })) continue;
    covers.push_back(u);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto c : covers) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (c & (1u << i)) vars.push_back(i);
    out.push_back(std::move(vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_weighted_homogeneous(const IdealData& I) {
  const auto& P = I.ring().ambient();
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Polynomial& f) { return P.is_homogeneous(f); });
}

IdealData minimal_generators(const IdealData& I) {
  const auto& R = I.ring();
  const auto& P = R.ambient();
  auto cands = tidy(R, I.lifted().elements());
  std::stable_sort(cands.begin(), cands.end(), [&](const Polynomial& a, const Polynomial& b) {
    auto da = P.degree(a), db = P.degree(b);
    if (da != db) return da < db;
    return P.compare(a.leading().exp, b.leading().exp) < 0;
  });
  std::vector<Polynomial> kept;
  std::optional<GroebnerBasis> span;
  for (auto& c : cands) {
    if (span && span->contains(c)) continue;
    if (!span && R.relation_basis().contains(c)) continue;
    kept.push_back(c);
    std::vector<Polynomial> all = R.relations();
    all.insert(all.end(), kept.begin(), kept.end());
    span = reduced_groebner(P, all, R.options());
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Polynomial& a, const Polynomial& b) { return P.compare(a.leading().exp, b.leading().exp) > 0; });
  return IdealData(I.ring_ptr(), std::move(kept));
}

RingPtr quotient_ring(const IdealData& I) {
  if (I.is_unit()) throw DomainError("quotient by the unit ideal");
  return make_ring(I.ring().ambient(), I.lifted().elements(), I.ring().options());
}

IdealData rehome(const IdealData& I, RingPtr ring) {
  if (!(ring->ambient() == I.ring().ambient())) throw DomainError("rehome: different ambient rings");
  return IdealData(std::move(ring), I.generators());
}

}  // namespace dsg
