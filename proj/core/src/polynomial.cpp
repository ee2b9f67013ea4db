#include "dsg/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "dsg/errors.hpp"

namespace dsg {

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](auto e) { return e == 0; });
}

PolyRing::PolyRing(Field field, std::vector<std::string> vars, std::vector<std::int32_t> weights)
    : PolyRing(std::move(field), std::move(vars), MonomialOrder::grevlex(std::move(weights))) {}

PolyRing::PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(std::move(field)), vars_(std::move(vars)), order_(std::move(order)) {
  if (order_.nvars() != vars_.size()) throw DomainError("order arity does not match variable count");
}

PolyRing PolyRing::with_order(MonomialOrder order) const { return PolyRing(field_, vars_, std::move(order)); }

PolyRing PolyRing::extended(std::span<const std::string> extra, MonomialOrder order) const {
  auto vars = vars_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return PolyRing(field_, std::move(vars), std::move(order));
}

std::size_t PolyRing::variable_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

Polynomial PolyRing::constant(const Coeff& c) const {
  if (c.is_zero()) return {};
  return Polynomial({Term{Exponents(nvars(), 0), c}});
}

Polynomial PolyRing::variable(std::size_t i) const {
  Exponents e(nvars(), 0);
  e.at(i) = 1;
  return Polynomial({Term{std::move(e), field_.one()}});
}

Polynomial PolyRing::monomial(Exponents e, const Coeff& c) const {
  if (e.size() != nvars()) throw DomainError("exponent vector has wrong arity");
  if (c.is_zero()) return {};
  return Polynomial({Term{std::move(e), c}});
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order_.compare(a.exp, b.exp) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial PolyRing::import(const Polynomial& f) const {
  std::vector<Term> t = f.terms();
  for (auto& term : t) {
    if (term.exp.size() > nvars()) throw DomainError("cannot import polynomial from a larger ring");
    term.exp.resize(nvars(), 0);
  }
  return from_terms(std::move(t));
}

Polynomial PolyRing::restrict_to(const Polynomial& f, std::size_t n) const {
  std::vector<Term> t = f.terms();
  for (auto& term : t) {
    for (std::size_t i = n; i < term.exp.size(); ++i)
      if (term.exp[i] != 0) throw DomainError("polynomial uses a variable being dropped");
    term.exp.resize(n);
  }
  return Polynomial(std::move(t));
}

namespace {

// Merge a + c*b for sorted term lists.
std::vector<Term> merge_axpy(const PolyRing& R, const std::vector<Term>& a, const std::vector<Term>& b,
                             const Coeff& c) {
  const auto& F = R.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : R.compare(a[i].exp, b[j].exp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{b[j].exp, F.mul(c, b[j].coeff)});
      ++j;
    } else {
      auto s = F.add(a[i].coeff, F.mul(c, b[j].coeff));
      if (!s.is_zero()) out.push_back(Term{a[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  return Polynomial(merge_axpy(*this, a.terms_, b.terms_, field_.one()));
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const {
  return Polynomial(merge_axpy(*this, a.terms_, b.terms_, field_.from_int(-1)));
}

Polynomial PolyRing::neg(const Polynomial& a) const { return scale(a, field_.from_int(-1)); }

Polynomial PolyRing::scale(const Polynomial& a, const Coeff& c) const {
  if (c.is_zero()) return {};
  std::vector<Term> t;
  t.reserve(a.size());
  for (const auto& term : a.terms_) t.push_back(Term{term.exp, field_.mul(term.coeff, c)});
  return Polynomial(std::move(t));
}

Polynomial PolyRing::mul_term(const Polynomial& a, const Exponents& e, const Coeff& c) const {
  if (c.is_zero()) return {};
  std::vector<Term> t;
  t.reserve(a.size());
  for (const auto& term : a.terms_) t.push_back(Term{product(term.exp, e), field_.mul(term.coeff, c)});
  return Polynomial(std::move(t));  // multiplication by a monomial preserves the order
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& big = a.size() <= b.size() ? b : a;
  std::vector<Term> acc;
  for (const auto& t : small.terms_) acc = merge_axpy(*this, acc, mul_term(big, t.exp, t.coeff).terms_, field_.one());
  return Polynomial(std::move(acc));
}

Polynomial PolyRing::pow(const Polynomial& a, unsigned e) const {
  Polynomial result = one();
  Polynomial base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Polynomial PolyRing::derivative(const Polynomial& a, std::size_t var) const {
  if (var >= nvars()) throw DomainError("derivative variable out of range");
  std::vector<Term> t;
  for (const auto& term : a.terms_) {
    if (term.exp[var] == 0) continue;
    auto c = field_.mul(term.coeff, field_.from_int(term.exp[var]));
    if (c.is_zero()) continue;
    Exponents e = term.exp;
    --e[var];
    t.push_back(Term{std::move(e), std::move(c)});
  }
  // Lowering one exponent can reorder terms under grevlex ties.
  return from_terms(std::move(t));
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero() || a.leading().coeff.is_one()) return a;
  return scale(a, field_.inv(a.leading().coeff));
}

Polynomial PolyRing::divide_exact(const Polynomial& a, const Polynomial& b) const {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& lb = b.leading();
  auto inv = field_.inv(lb.coeff);
  std::vector<Term> q;
  Polynomial r = a;
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    if (!divides(lb.exp, lr.exp)) throw DomainError("inexact polynomial division");
    Term t{quotient(lr.exp, lb.exp), field_.mul(lr.coeff, inv)};
    r = Polynomial(merge_axpy(*this, r.terms_, mul_term(b, t.exp, t.coeff).terms_, field_.from_int(-1)));
    q.push_back(std::move(t));
  }
  return Polynomial(std::move(q));
}

bool PolyRing::is_homogeneous(const Polynomial& f) const {
  if (f.is_zero()) return true;
  auto d = weighted_degree(f.leading().exp);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return weighted_degree(t.exp) == d; });
}

std::int64_t PolyRing::degree(const Polynomial& f) const {
  std::int64_t d = -1;
  for (const auto& t : f.terms()) d = std::max(d, weighted_degree(t.exp));
  return d;
}

std::string PolyRing::format_monomial(const Exponents& e) const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars_[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    mpq_class c = t.coeff.value();
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool unit_monomial = std::all_of(t.exp.begin(), t.exp.end(), [](auto x) { return x == 0; });
    if (unit_monomial) {
      out += c.get_str();
    } else if (c == 1) {
      out += format_monomial(t.exp);
    } else {
      out += c.get_str() + '*' + format_monomial(t.exp);
    }
  }
  return out;
}

}  // namespace dsg
