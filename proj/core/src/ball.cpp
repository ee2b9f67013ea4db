#include "dsg/ball.hpp"

#include <algorithm>

#include "dsg/errors.hpp"

namespace dsg {

std::string to_string(Category c) { return c == Category::Derived ? "D^b(S)" : "D_sg(R)"; }

std::string BallExpr::generator_label() const {
  std::string s;
  for (std::size_t i = 0; i < generator.size(); ++i) s += (i ? " ⊕ " : "") + generator[i];
  return s;
}

std::string BallExpr::format() const { return "<" + generator_label() + ">_" + std::to_string(radius); }

BallExpr make_ball(Category c, std::vector<std::string> generator, long radius, std::string rule,
                   bool class_generator) {
  if (radius < 1) throw DomainError("ball radius must be at least 1");
  if (generator.empty()) throw DomainError("ball without generator");
  BallExpr b{c, std::move(generator), class_generator, radius, {std::move(rule)}};
  return b;
}

namespace {

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("radius overflow");
  return r;
}

}  // namespace

BallExpr star(const BallExpr& a, const BallExpr& b) {
  if (a.category != b.category) throw DomainError("star: category mismatch");
  BallExpr out = a;
  for (const auto& g : b.generator)
    if (std::find(out.generator.begin(), out.generator.end(), g) == out.generator.end()) out.generator.push_back(g);
  out.class_generator = a.class_generator || b.class_generator;
  if (__builtin_add_overflow(a.radius, b.radius, &out.radius)) throw DomainError("radius overflow");
  out.provenance.insert(out.provenance.end(), b.provenance.begin(), b.provenance.end());
  out.provenance.push_back("star: " + a.format() + " * " + b.format() + " in " + out.format());
  return out;
}

BallExpr filtration(const BallExpr& inner, long m) {
  if (m < 1) throw DomainError("filtration length must be at least 1");
  BallExpr out = inner;
  out.radius = checked_mul(inner.radius, m);
  out.provenance.push_back("filtration of length " + std::to_string(m) + " over " + inner.format());
  return out;
}

std::string module_label(const IdealData& Q) {
  if (Q.is_zero()) return "R";
  if (Q.is_unit()) return "0";
  if (same_ideal(Q, IdealData::maximal(Q.ring_ptr()))) return "k";
  return "R/" + minimal_generators(Q).format();
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Artinian: return "artinian";
    case Strategy::Regular: return "regular";
    case Strategy::NilpotentFiltration: return "nilpotent-filtration";
    case Strategy::SocleSplit: return "socle-split";
  }
  return "auto";
}

std::optional<Strategy> parse_strategy(const std::string& s) {
  for (auto st : {Strategy::Auto, Strategy::Artinian, Strategy::Regular, Strategy::NilpotentFiltration,
                  Strategy::SocleSplit})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

namespace {

class Planner {
 public:
  Planner(const IdealData& I, const DerivedBallOptions& o) : I_(I), opts_(o) {}

  StrategyOutcome run(Strategy s) {
    StrategyOutcome out{s, std::nullopt, ""};
    try {
      switch (s) {
        case Strategy::Artinian: artinian(out); break;
        case Strategy::Regular: regular(out); break;
        case Strategy::NilpotentFiltration: nilpotent(out); break;
        case Strategy::SocleSplit: socle_split(out); break;
        case Strategy::Auto: break;
      }
    } catch (const UnsupportedError& e) {
      out.ball.reset();
      out.detail = e.what();
    }
    return out;
  }

  std::optional<NilpotencyData> nil;
  std::optional<IdealData> socle_annihilator;

 private:
  void artinian(StrategyOutcome& out) {
    const int ll = loewy_length(I_);
    out.ball = make_ball(Category::Derived, {"k"}, ll,
                         "artinian local S: D^b(S) = <S/rad S>_ll(S), ll(S) = " + std::to_string(ll));
    out.detail = "S artinian with Loewy length " + std::to_string(ll);
  }

  void regular(StrategyOutcome& out) {
    auto S = quotient_ring(I_);
    auto reg = check_regular(S, opts_.attest);
    if (!holds(reg.status)) {
      out.detail = "S not shown regular: " + reg.evidence;
      return;
    }
    const int d = S->dimension();
    out.ball = make_ball(Category::Derived, {module_label(I_)}, d + 1,
                         "regular S of dimension " + std::to_string(d) + ": D^b(S) = <S>_(dim S + 1)");
    out.detail = reg.evidence;
  }

  // Nilpotency data relative to the candidate primes; computed once.
  const NilpotencyData* nilpotency() {
    if (!nil) {
      std::vector<IdealData> cands;
      if (opts_.radical) {
        cands = *opts_.radical;
      } else if (I_.is_monomial()) {
        cands = auto_radical_candidates(I_);
      } else {
        throw UnsupportedError("no candidate minimal primes (supply --radical)");
      }
      nil = nilpotency_index(I_, cands, opts_.attest.prime_candidates, opts_.nil_cap);
    }
    if (!nil->index) {
      for (const auto& c : nil->candidates) {
        if (!c.contains_ideal) throw UnsupportedError("candidate prime " + c.prime.format() + " does not contain I");
        if (!holds(c.primality)) throw UnsupportedError("primality of " + c.prime.format() + " not established");
      }
      throw UnsupportedError("nilpotency index exceeds the cap");
    }
    return &*nil;
  }

  IdealData radical() {
    const auto* n = nilpotency();
    auto N = n->candidates.front().prime;
    for (std::size_t k = 1; k < n->candidates.size(); ++k) N = ideal_intersection(N, n->candidates[k].prime);
    return N;
  }

  void nilpotent(StrategyOutcome& out) {
    const auto* n = nilpotency();
    auto N = radical();
    auto Sred = quotient_ring(N);
    auto reg = check_regular(Sred, opts_.attest);
    if (!holds(reg.status)) {
      out.detail = "S_red not shown regular: " + reg.evidence;
      return;
    }
    const int e = *n->index;
    const int d = Sred->dimension();
    auto inner = make_ball(Category::Derived, {module_label(N)}, d + 1,
                           "regular S_red of dimension " + std::to_string(d) + ": D^b(S_red) = <S_red>_(dim + 1)");
    out.ball = filtration(inner, e);
    out.ball->provenance.push_back("nilradical " + N.format() + " with nilpotency index " + std::to_string(e) +
                                   ": D^b(S) = <D^b(S_red)>_" + std::to_string(e));
    out.detail = "n(S) = " + std::to_string(e) + ", S_red regular of dimension " + std::to_string(d);
  }

  void socle_split(StrategyOutcome& out) {
    const auto* n = nilpotency();
    if (n->candidates.size() != 1) {
      out.detail = "S has " + std::to_string(n->candidates.size()) + " minimal primes; need exactly one";
      return;
    }
    const auto& p = n->candidates.front().prime;
    auto S = quotient_ring(I_);
    auto C = minimal_generators(ideal_colon(IdealData::zero(S), rehome(p, S)));
    socle_annihilator = C;
    if (C.is_unit()) {
      out.detail = "p is zero in S; nothing to split";
      return;
    }
    auto lifted = ideal_sum(I_, rehome(C, I_.ring_ptr()));
    const int ll = loewy_length(lifted);  // throws when S/(0:p) is not artinian
    auto reg = check_regular(quotient_ring(p), opts_.attest);
    if (!holds(reg.status)) {
      out.detail = "S/p not shown regular: " + reg.evidence;
      return;
    }
    const int d = quotient_ring(p)->dimension();
    auto a = make_ball(Category::Derived, {"k"}, ll,
                       "artinian S/(0:p), (0:p) = " + C.format() + ", ll = " + std::to_string(ll));
    auto b = make_ball(Category::Derived, {module_label(p)}, d + 1,
                       "regular S/p of dimension " + std::to_string(d));
    out.ball = star(a, b);
    out.ball->provenance.push_back("example-pattern: triangle A/(0:p)A -> A -> A/pA with p = " + p.format());
    out.detail = "unique minimal prime " + p.format() + ", (0:p) = " + C.format();
  }

  const IdealData& I_;
  const DerivedBallOptions& opts_;
};

}  // namespace

DerivedBall derived_category_ball(const IdealData& I, Strategy strategy, const DerivedBallOptions& opts) {
  if (I.is_unit()) throw DomainError("derived ball of the zero ring");
  Planner plan(I, opts);
  std::vector<Strategy> order = {strategy};
  if (strategy == Strategy::Auto)
    order = {Strategy::Artinian, Strategy::Regular, Strategy::NilpotentFiltration, Strategy::SocleSplit};
  DerivedBall out;
  std::optional<std::size_t> best;
  for (auto s : order) {
    out.trace.push_back(plan.run(s));
    const auto& o = out.trace.back();
    if (o.ball && (!best || o.ball->radius < out.trace[*best].ball->radius)) best = out.trace.size() - 1;
  }
  out.nilpotency = plan.nil;
  out.socle_annihilator = plan.socle_annihilator;
  if (!best) {
    std::string why;
    for (const auto& o : out.trace) why += "; " + to_string(o.strategy) + ": " + o.detail;
    throw UnsupportedError("no derived-category strategy applies" + why + " (supply --derived-radius)");
  }
  out.ball = *out.trace[*best].ball;
  out.chosen = out.trace[*best].strategy;
  return out;
}

}  // namespace dsg
