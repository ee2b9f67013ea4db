#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dsg/coeff.hpp"
#include "dsg/monomial_order.hpp"

namespace dsg {

struct Term {
  Exponents exp;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial as a list of nonzero terms, strictly descending in the
/// order of the ring that built it. The zero polynomial has no terms.
/// Instances are only meaningful together with their PolyRing.
class Polynomial {
 public:
  Polynomial() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolyRing;
  explicit Polynomial(std::vector<Term> t) : terms_(std::move(t)) {}
  std::vector<Term> terms_;
};

/// k[X1..Xn] with positive weights and a term order. Owns every operation
/// that has to know the field or the order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> vars, std::vector<std::int32_t> weights);
  PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order);

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::int32_t>& weights() const { return order_.weights(); }

  // Same variables and field, different order. Polynomials must be
  // converted with `import` when crossing orders.
  PolyRing with_order(MonomialOrder order) const;
  // Appends fresh variables (weight 1) after the existing ones.
  PolyRing extended(std::span<const std::string> extra, MonomialOrder order) const;

  std::size_t variable_index(const std::string& name) const;  // throws DomainError

  // Constructors.
  Polynomial zero() const { return {}; }
  Polynomial one() const { return constant(field_.one()); }
  Polynomial constant(const Coeff& c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(Exponents e, const Coeff& c) const;
  // Sorts, merges equal monomials and drops zeros.
  Polynomial from_terms(std::vector<Term> terms) const;
  // Re-sorts a polynomial of a ring with the same variables (or pads with
  // zero exponents when this ring has more variables).
  Polynomial import(const Polynomial& f) const;
  // Drops trailing variables; throws DomainError if any is used.
  Polynomial restrict_to(const Polynomial& f, std::size_t nvars) const;

  // Arithmetic.
  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial scale(const Polynomial& a, const Coeff& c) const;
  Polynomial mul_term(const Polynomial& a, const Exponents& e, const Coeff& c) const;
  Polynomial pow(const Polynomial& a, unsigned e) const;
  Polynomial derivative(const Polynomial& a, std::size_t var) const;
  Polynomial monic(const Polynomial& a) const;
  // Exact division; throws DomainError if b does not divide a.
  Polynomial divide_exact(const Polynomial& a, const Polynomial& b) const;

  int compare(const Exponents& a, const Exponents& b) const { return order_.compare(a, b); }
  std::int64_t weighted_degree(const Exponents& e) const { return order_.weighted_degree(e); }
  // True iff all terms share one weighted degree (zero counts as homogeneous).
  bool is_homogeneous(const Polynomial& f) const;
  std::int64_t degree(const Polynomial& f) const;  // max weighted degree; -1 for zero

  // Canonical text form in the input grammar, e.g. "x^2*z - 3/2*y + 1".
  std::string format(const Polynomial& f) const;
  std::string format_monomial(const Exponents& e) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace dsg
