#pragma once

// Buchberger engine shared by ideal and module Groebner bases. Ideal
// elements are vectors whose terms all live in component 0.

#include <cstddef>
#include <vector>

#include "dsg/monomial_order.hpp"
#include "dsg/polynomial.hpp"

namespace dsg {

struct GroebnerOptions {
  // Upper bound on single reduction steps across one computation.
  std::size_t max_steps = 20'000'000;
  // Upper bound on the number of basis elements ever created.
  std::size_t max_basis = 100'000;
};

namespace detail {

struct VTerm {
  Exponents exp;
  std::size_t comp = 0;
  Coeff coeff;
};
using Vec = std::vector<VTerm>;

class Engine {
 public:
  Engine(const PolyRing& ring, ModuleOrder order, bool ideal) : R_(ring), order_(order), ideal_(ideal) {}

  const PolyRing& ring() const { return R_; }
  const ModuleOrder& order() const { return order_; }
  bool ideal() const { return ideal_; }

  int compare(const Exponents& a, std::size_t ca, const Exponents& b, std::size_t cb) const;
  int compare(const VTerm& a, const VTerm& b) const { return compare(a.exp, a.comp, b.exp, b.comp); }

  Vec normalize(Vec v) const;  // sort, merge, drop zeros
  Vec monic(Vec v) const;
  // a - c * x^e * b
  Vec sub_mul(const Vec& a, std::size_t a_start, const Vec& b, const Exponents& e, const Coeff& c) const;
  Vec s_vector(const Vec& f, const Vec& g) const;

  // Full reduction against a basis with monic leading terms. `steps` is
  // incremented per reduction step and checked against the cap.
  Vec reduce(Vec f, const std::vector<const Vec*>& basis, std::size_t& steps, std::size_t cap) const;

  // Reduced Groebner basis, sorted by descending leading term.
  std::vector<Vec> groebner(std::vector<Vec> gens, const GroebnerOptions& opts) const;

 private:
  const PolyRing& R_;
  ModuleOrder order_;
  bool ideal_;
};

Vec to_vec(const Polynomial& f, std::size_t comp = 0);
Polynomial to_poly(const PolyRing& R, const Vec& v);

}  // namespace detail
}  // namespace dsg
