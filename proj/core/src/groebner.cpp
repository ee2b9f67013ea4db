#include "dsg/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "dsg/errors.hpp"

namespace dsg {
namespace detail {

int Engine::compare(const Exponents& a, std::size_t ca, const Exponents& b, std::size_t cb) const {
  if (order_.split > 0) {
    bool lower_a = ca >= order_.split, lower_b = cb >= order_.split;
    if (lower_a != lower_b) return lower_a ? -1 : 1;
  }
  if (order_.kind == ModuleOrder::Kind::PositionOverTerm && ca != cb) return ca < cb ? 1 : -1;
  int c = R_.compare(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

Vec Engine::normalize(Vec v) const {
  const auto& F = R_.field();
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().exp == t.exp) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

Vec Engine::monic(Vec v) const {
  if (v.empty() || v.front().coeff.is_one()) return v;
  auto inv = R_.field().inv(v.front().coeff);
  for (auto& t : v) t.coeff = R_.field().mul(t.coeff, inv);
  return v;
}

Vec Engine::sub_mul(const Vec& a, std::size_t a_start, const Vec& b, const Exponents& e, const Coeff& c) const {
  const auto& F = R_.field();
  Vec out;
  out.reserve(a.size() - a_start + b.size());
  std::size_t i = a_start, j = 0;
  Exponents shifted;
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) shifted = product(b[j].exp, e);
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : compare(a[i].exp, a[i].comp, shifted, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(VTerm{std::move(shifted), b[j].comp, F.neg(F.mul(c, b[j].coeff))});
      ++j;
    } else {
      auto s = F.sub(a[i].coeff, F.mul(c, b[j].coeff));
      if (!s.is_zero()) out.push_back(VTerm{a[i].exp, a[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Vec Engine::s_vector(const Vec& f, const Vec& g) const {
  const auto& F = R_.field();
  auto l = dsg::lcm(f.front().exp, g.front().exp);
  auto mf = quotient(l, f.front().exp);
  auto mg = quotient(l, g.front().exp);
  // g.lc * mf * f - f.lc * mg * g, scaled to f.lc = 1 semantics
  Vec scaled_f;
  scaled_f.reserve(f.size());
  auto cf = F.inv(f.front().coeff);
  for (const auto& t : f) scaled_f.push_back(VTerm{product(t.exp, mf), t.comp, F.mul(t.coeff, cf)});
  return sub_mul(scaled_f, 0, g, mg, F.inv(g.front().coeff));
}

Vec Engine::reduce(Vec f, const std::vector<const Vec*>& basis, std::size_t& steps, std::size_t cap) const {
  const auto& F = R_.field();
  Vec done;
  std::size_t start = 0;
  while (start < f.size()) {
    const auto& lt = f[start];
    const Vec* divisor = nullptr;
    for (const Vec* g : basis) {
      const auto& gl = g->front();
      if (gl.comp == lt.comp && divides(gl.exp, lt.exp)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      done.push_back(f[start]);
      ++start;
      continue;
    }
    if (++steps > cap) throw CapExceeded("Groebner reduction step budget exhausted");
    auto e = quotient(lt.exp, divisor->front().exp);
    auto c = F.div(lt.coeff, divisor->front().coeff);
    f = sub_mul(f, start, *divisor, e, c);
    start = 0;
  }
  return done;
}

namespace {

struct Pair {
  std::size_t i, j;
  Exponents lcm;
  std::size_t comp;
};

}  // namespace

std::vector<Vec> Engine::groebner(std::vector<Vec> gens, const GroebnerOptions& opts) const {
  std::vector<Vec> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::size_t steps = 0;

  auto active_ptrs = [&]() {
    std::vector<const Vec*> out;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) out.push_back(&polys[k]);
    return out;
  };

  auto is_unit = [&](const Vec& v) {
    return ideal_ && std::all_of(v.front().exp.begin(), v.front().exp.end(), [](auto x) { return x == 0; });
  };

  auto insert = [&](Vec h) {
    if (polys.size() >= opts.max_basis) throw CapExceeded("Groebner basis size budget exhausted");
    const std::size_t hi = polys.size();
    const auto& hl = h.front();
    struct Cand {
      std::size_t g;
      Exponents lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (!active[g] || polys[g].front().comp != hl.comp) continue;
      const auto& gl = polys[g].front().exp;
      cands.push_back(Cand{g, dsg::lcm(hl.exp, gl), ideal_ && dsg::coprime(hl.exp, gl)});
    }
    // Gebauer-Moeller: drop new pairs whose lcm is a proper multiple of
    // another new pair's lcm (or equal to an earlier one).
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      if (!cands[a].coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
          if (divides(cands[b].lcm, cands[a].lcm)) drop = true;
        for (const auto& k : kept)
          if (!drop && divides(k.lcm, cands[a].lcm)) drop = true;
      }
      if (!drop) kept.push_back(cands[a]);
    }
    // Old pairs made redundant by the chain through h.
    std::vector<Pair> next;
    next.reserve(pairs.size());
    for (auto& p : pairs) {
      if (p.comp == hl.comp && divides(hl.exp, p.lcm)) {
        auto l1 = dsg::lcm(polys[p.i].front().exp, hl.exp);
        auto l2 = dsg::lcm(polys[p.j].front().exp, hl.exp);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      next.push_back(std::move(p));
    }
    pairs = std::move(next);
    for (auto& k : kept)
      if (!k.coprime) pairs.push_back(Pair{k.g, hi, std::move(k.lcm), hl.comp});
    for (std::size_t g = 0; g < polys.size(); ++g)
      if (active[g] && polys[g].front().comp == hl.comp && divides(hl.exp, polys[g].front().exp)) active[g] = false;
    polys.push_back(std::move(h));
    active.push_back(true);
  };

  for (auto& g : gens) {
    g = normalize(std::move(g));
    if (g.empty()) continue;
    g = monic(reduce(std::move(g), active_ptrs(), steps, opts.max_steps));
    if (g.empty()) continue;
    if (is_unit(g)) return {g};
    insert(std::move(g));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      int c = compare(a.lcm, a.comp, b.lcm, b.comp);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair p = std::move(*best);
    pairs.erase(best);
    if (++steps > opts.max_steps) throw CapExceeded("Groebner step budget exhausted");
    auto s = s_vector(polys[p.i], polys[p.j]);
    s = reduce(std::move(s), active_ptrs(), steps, opts.max_steps);
    if (s.empty()) continue;
    s = monic(std::move(s));
    if (is_unit(s)) return {s};
    insert(std::move(s));
  }

  // Interreduce the minimal basis.
  std::vector<Vec> basis;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) basis.push_back(polys[k]);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<const Vec*> others;
    for (std::size_t m = 0; m < basis.size(); ++m)
      if (m != k) others.push_back(&basis[m]);
    Vec head{basis[k].front()};
    Vec tail(basis[k].begin() + 1, basis[k].end());
    tail = reduce(std::move(tail), others, steps, opts.max_steps);
    head.insert(head.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
    basis[k] = monic(std::move(head));
  }
  std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) { return compare(a.front(), b.front()) > 0; });
  return basis;
}

Vec to_vec(const Polynomial& f, std::size_t comp) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back(VTerm{t.exp, comp, t.coeff});
  return v;
}

Polynomial to_poly(const PolyRing& R, const Vec& v) {
  std::vector<Term> t;
  t.reserve(v.size());
  for (const auto& x : v) {
    if (x.comp != 0) throw DomainError("module vector used as a polynomial");
    t.push_back(Term{x.exp, x.coeff});
  }
  return R.from_terms(std::move(t));
}

}  // namespace detail

GroebnerBasis::GroebnerBasis(PolyRing ring, std::vector<Polynomial> elements, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), elements_(std::move(elements)), generators_(std::move(gens)) {
  for (const auto& e : elements_) vecs_.push_back(detail::to_vec(e));
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

std::vector<Exponents> GroebnerBasis::leading_monomials() const {
  std::vector<Exponents> out;
  for (const auto& e : elements_) out.push_back(e.leading().exp);
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.is_zero()) return f;
  detail::Engine eng(ring_, ModuleOrder{}, true);
  std::vector<const detail::Vec*> ptrs;
  for (const auto& v : vecs_) ptrs.push_back(&v);
  std::size_t steps = 0;
  auto r = eng.reduce(detail::to_vec(f), ptrs, steps, static_cast<std::size_t>(-1));
  return detail::to_poly(ring_, r);
}

bool GroebnerBasis::contains(const GroebnerBasis& other) const {
  return std::all_of(other.elements_.begin(), other.elements_.end(), [&](const auto& g) { return contains(g); });
}

GroebnerBasis reduced_groebner(const PolyRing& R, std::span<const Polynomial> gens, const GroebnerOptions& opts) {
  detail::Engine eng(R, ModuleOrder{}, true);
  std::vector<detail::Vec> in;
  for (const auto& g : gens) in.push_back(detail::to_vec(g));
  auto out = eng.groebner(std::move(in), opts);
  std::vector<Polynomial> elems;
  for (const auto& v : out) elems.push_back(detail::to_poly(R, v));
  return GroebnerBasis(R, std::move(elems), std::vector<Polynomial>(gens.begin(), gens.end()));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) { return G.normal_form(f); }

Polynomial s_polynomial(const PolyRing& R, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return R.zero();
  detail::Engine eng(R, ModuleOrder{}, true);
  return detail::to_poly(R, eng.s_vector(detail::to_vec(f), detail::to_vec(g)));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  const auto& el = G.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (!G.normal_form(s_polynomial(G.ring(), el[i], el[j])).is_zero()) return false;
  return true;
}

std::vector<Polynomial> eliminate(const PolyRing& R, std::span<const Polynomial> gens,
                                  std::span<const std::size_t> keep, const GroebnerOptions& opts) {
  std::vector<bool> elim(R.nvars(), true);
  for (auto k : keep) {
    if (k >= R.nvars()) throw DomainError("elimination keeps an unknown variable");
    elim[k] = false;
  }
  if (std::none_of(elim.begin(), elim.end(), [](bool b) { return b; })) {
    return reduced_groebner(R, gens, opts).elements();
  }
  PolyRing E = R.with_order(MonomialOrder::elimination(R.weights(), elim));
  std::vector<Polynomial> lifted;
  for (const auto& g : gens) lifted.push_back(E.import(g));
  auto G = reduced_groebner(E, lifted, opts);
  std::vector<Polynomial> kept;
  for (const auto& g : G.elements()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < elim.size(); ++i)
        if (elim[i] && t.exp[i] != 0) return false;
      return true;
    });
    if (free) kept.push_back(R.import(g));
  }
  return reduced_groebner(R, kept, opts).elements();
}

}  // namespace dsg
