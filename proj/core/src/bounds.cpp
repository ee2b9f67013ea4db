#include "dsg/bounds.hpp"

#include "dsg/errors.hpp"

namespace dsg {

long ExtInt::value() const {
  if (!value_) throw DomainError("infinite value");
  return *value_;
}

ExtInt operator+(ExtInt a, ExtInt b) {
  if (a.is_infinite() || b.is_infinite()) return ExtInt::infinity();
  long r;
  if (__builtin_add_overflow(*a.value_, *b.value_, &r)) throw DomainError("integer overflow");
  return r;
}

ExtInt operator*(ExtInt a, ExtInt b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a == ExtInt(0) || b == ExtInt(0)) throw DomainError("inf * 0");
    return ExtInt::infinity();
  }
  long r;
  if (__builtin_mul_overflow(*a.value_, *b.value_, &r)) throw DomainError("integer overflow");
  return r;
}

std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return *a.value_ <=> *b.value_;
}

ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }

std::string to_string(Formula f) {
  switch (f) {
    case Formula::Main: return "main";
    case Formula::Liu: return "liu";
    case Formula::DimSing0: return "dimsing0";
    case Formula::DimSing1: return "dimsing1";
    case Formula::CountableCM: return "countable-cm";
    case Formula::DepthZero: return "depth-zero";
  }
  return "main";
}

std::optional<Formula> parse_formula(const std::string& s) {
  for (auto f : {Formula::Main, Formula::Liu, Formula::DimSing0, Formula::DimSing1, Formula::CountableCM,
                 Formula::DepthZero})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

namespace {

long positive(long v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be positive");
  return v;
}

long mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("radius overflow");
  return r;
}

std::string num(const std::optional<long>& v, const char* name) { return v ? std::to_string(*v) : name; }

}  // namespace

long main_radius(long derived_radius, long mu, long grade) {
  return mul(positive(derived_radius, "derived radius"), positive(mu - grade + 1, "mu - grade + 1"));
}

long liu_radius(long mu, long depth, long loewy) {
  return mul(positive(mu - depth + 1, "mu - depth + 1"), positive(loewy, "Loewy length"));
}

long dimsing0_radius(long loewy, long mu, long grade) {
  return mul(positive(loewy, "Loewy length"), positive(mu - grade + 1, "mu - grade + 1"));
}

long dimsing1_radius(long nil, long loewy_t, long mu, long grade) {
  if (loewy_t < 0) throw DomainError("ll(T) must be non-negative");
  return mul(mul(2, positive(nil, "nilpotency index")), mul(loewy_t + 1, positive(mu - grade + 1, "mu - grade + 1")));
}

ExtInt countable_cm_radius(ExtInt loewy, long mu, long dim, long dimsing1) {
  auto first = (loewy + ExtInt(1)) * ExtInt(positive(mu - dim + 1, "mu - dim R + 1"));
  return min(first, ExtInt(positive(dimsing1, "dimsing1 radius")));
}

const HypothesisStatus* find_hypothesis(const std::vector<HypothesisStatus>& hs, const std::string& name) {
  for (const auto& h : hs)
    if (h.name == name) return &h;
  return nullptr;
}

namespace {

bool any_failed(const std::vector<HypothesisStatus>& hs) {
  for (const auto& h : hs)
    if (h.status == Status::Failed) return true;
  return false;
}

bool holds_named(const std::vector<HypothesisStatus>& hs, const std::string& name) {
  const auto* h = find_hypothesis(hs, name);
  return h && holds(h->status);
}

void finish(BoundReport& r) {
  if (r.ball && !r.ball->class_generator && !any_failed(r.hypotheses) && r.ball->category == Category::Singularity)
    r.dim_bound = r.ball->radius - 1;
}

}  // namespace

BoundReport singularity_bound(const SingularityInputs& in) {
  BoundReport r;
  r.ring = in.ring;
  r.ideal = in.ideal;
  r.invariants.mu = in.mu;
  r.invariants.grade = in.grade;
  r.hypotheses = in.hypotheses;
  r.formula = "main";
  const long mult = positive(in.mu - in.grade + 1, "mu - grade + 1");
  const auto m = std::to_string(mult);
  const auto mg = "(" + std::to_string(in.mu) + " - " + std::to_string(in.grade) + " + 1)";

  if (holds_named(in.hypotheses, kAnnihilator) && in.derived) {
    auto b = *in.derived;
    b.category = Category::Singularity;
    b.radius = main_radius(in.derived->radius, in.mu, in.grade);
    b.provenance.push_back("I in ann D_sg(R): D_sg(R) = <mod R/I>_(mu - grade + 1) = <mod R/I>_" + m);
    b.provenance.push_back("D^b(R/I) = " + in.derived->format() + " gives " + b.format());
    r.ball = std::move(b);
    r.formula_text = "dim D_sg(R) <= " + std::to_string(in.derived->radius) + "*" + mg + " - 1";
  } else if (holds_named(in.hypotheses, kAnnihilator)) {
    r.ball = make_ball(Category::Singularity, {"mod R/I"}, mult,
                       "I in ann D_sg(R): D_sg(R) = <mod R/I>_(mu - grade + 1)", true);
    r.formula_text = "dim D_sg(R) <= (dim D^b(R/I) + 1)*" + mg + " - 1";
    r.warnings.push_back("no ball for D^b(R/I); bound stays symbolic");
  } else if (holds_named(in.hypotheses, kSingularLocus)) {
    r.ball = make_ball(Category::Singularity, {"filt{R/p : p in V(I)}"}, mult,
                       "Sing R in V(I): D_sg(R) = <filt{R/p : p in V(I)}>_(mu - grade + 1)", true);
    r.formula_text = "D_sg(R) = <filt{R/p : p in V(I)}>_" + m;
    r.warnings.push_back("I is not known to annihilate D_sg(R); only the class generator is available");
  } else {
    r.formula_text = "dim D_sg(R) <= (dim D^b(R/I) + 1)*" + mg + " - 1, provided I in ann D_sg(R)";
    r.warnings.push_back("hypotheses not established; bound is conditional");
  }
  finish(r);
  return r;
}

BoundReport special_bounds(Formula f, const SpecialInputs& in) {
  BoundReport r;
  r.ring = in.ring;
  r.ideal = in.ideal;
  r.invariants.mu = in.mu;
  r.invariants.grade = in.grade;
  r.invariants.depth = in.depth;
  r.invariants.dim = in.dim;
  if (in.loewy && !in.loewy->is_infinite()) r.invariants.loewy = in.loewy->value();
  r.invariants.nilpotency = in.nilpotency;
  r.hypotheses = in.hypotheses;
  r.formula = to_string(f);

  const bool ann = holds_named(in.hypotheses, kAnnihilator);
  const bool artinian = in.loewy && !in.loewy->is_infinite();
  std::vector<std::string> missing;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) missing.push_back(what);
  };
  const auto mu = num(in.mu, "mu"), grade = num(in.grade, "grade"), depth = num(in.depth, "depth"),
             dim = num(in.dim, "dim R"), nil = num(in.nilpotency, "n(S)"), llt = num(in.loewy_t, "ll(T)");
  const auto ll = in.loewy ? in.loewy->to_string() : std::string("ll(R/I)");

  switch (f) {
    case Formula::Main:
      throw DomainError("the main formula is assembled by singularity_bound");
    case Formula::Liu: {
      r.formula_text = "dim D_sg(R) <= (" + mu + " - " + depth + " + 1)*" + ll + " - 1";
      need(ann, "I in ann D_sg(R)");
      need(artinian, "R/I artinian");
      need(in.mu && in.depth, "mu and depth");
      if (missing.empty())
        r.ball = make_ball(Category::Singularity, {"k"}, liu_radius(*in.mu, *in.depth, in.loewy->value()),
                           "isolated singularity, m-primary I in ann D_sg(R): D_sg(R) = <k>_((mu - depth + 1) ll(R/I))");
      break;
    }
    case Formula::DimSing0: {
      r.formula_text = "dim D_sg(R) <= " + ll + "*(" + mu + " - " + grade + " + 1) - 1";
      need(ann, "I in ann D_sg(R)");
      need(artinian, "R/I artinian");
      need(in.mu && in.grade, "mu and grade");
      if (missing.empty())
        r.ball = make_ball(Category::Singularity, {"k"}, dimsing0_radius(in.loewy->value(), *in.mu, *in.grade),
                           "V(I) maximal, I in ann D_sg(R): D_sg(R) = <k>_(ll(R/I)(mu - grade + 1))");
      break;
    }
    case Formula::DimSing1: {
      r.formula_text = "dim D_sg(R) <= 2*" + nil + "*(" + llt + " + 1)*(" + mu + " - " + grade + " + 1) - 1";
      need(ann, "I in ann D_sg(R)");
      need(holds_named(in.hypotheses, kSingularLocus), "Sing R in V(I)");
      need(in.quotient_dim && *in.quotient_dim == 1, "dim R/I = 1");
      need(in.nilpotency && in.loewy_t && in.mu && in.grade && in.reduced_label, "n(S), ll(T), mu, grade");
      if (missing.empty()) {
        std::vector<std::string> gen = {*in.reduced_label};
        if (*in.loewy_t > 0) gen.push_back("T/rad T");
        r.ball = make_ball(Category::Singularity, gen, dimsing1_radius(*in.nilpotency, *in.loewy_t, *in.mu, *in.grade),
                           "one-dimensional singular locus V(I): D_sg(R) = <S_red ⊕ T/rad T>_(2 n(S)(ll(T) + 1)(mu - grade + 1))");
        if (*in.loewy_t == 0) r.ball->provenance.push_back("T = 0: S_red is regular");
      }
      break;
    }
    case Formula::CountableCM: {
      r.formula_text = "dim D_sg(R) <= min{(" + ll + " + 1)*(" + mu + " - " + dim + " + 1), 2*" + nil + "*(" + llt +
                       " + 1)*(" + mu + " - " + grade + " + 1)} - 1";
      need(ann, "I in ann D_sg(R)");
      need(holds_named(in.hypotheses, "countable-cm-type"), "countable CM type");
      need(in.loewy.has_value() && in.mu && in.dim && in.nilpotency && in.loewy_t && in.grade && in.reduced_label,
           "ll(R/I), mu, dim R, n(S), ll(T), grade");
      if (missing.empty()) {
        const long d1 = dimsing1_radius(*in.nilpotency, *in.loewy_t, *in.mu, *in.grade);
        const auto best = countable_cm_radius(*in.loewy, *in.mu, *in.dim, d1);
        const bool first = best.value() < d1;
        r.ball = make_ball(Category::Singularity, first ? std::vector<std::string>{"k"}
                                                        : std::vector<std::string>{*in.reduced_label},
                           best.value(),
                           "countable CM type: min{(ll(R/I) + 1)(mu - dim R + 1), 2 n(S)(ll(T) + 1)(mu - grade + 1)}");
        r.trace.push_back("operands: " + ((*in.loewy + ExtInt(1)) * ExtInt(*in.mu - *in.dim + 1)).to_string() + ", " +
                          std::to_string(d1));
      }
      break;
    }
    case Formula::DepthZero: {
      const auto dr = in.derived ? std::to_string(in.derived->radius) : std::string("dim D^b(R/soc R) + 1");
      r.formula_text = "dim D_sg(R) <= " + dr + " - 1";
      need(holds_named(in.hypotheses, "depth-zero"), "depth R = 0");
      need(in.derived.has_value(), "a ball for D^b(R/soc R)");
      if (missing.empty()) {
        auto b = *in.derived;
        b.category = Category::Singularity;
        b.provenance.push_back("depth R = 0: D_sg(R) = <mod R/soc R>_1");
        if (in.socle_label)
          for (auto& g : b.generator)
            if (g == *in.socle_label) {
              g = "k";
              b.provenance.push_back("R/soc R = soc R[1] = k^r[1] in D_sg(R)");
            }
        r.ball = std::move(b);
      }
      break;
    }
  }
  for (const auto& m : missing) r.warnings.push_back("precondition not established: " + m);
  finish(r);
  if (!r.dim_bound) r.ball.reset();
  return r;
}

}  // namespace dsg
