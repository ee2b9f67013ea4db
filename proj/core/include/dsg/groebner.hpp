#pragma once

#include <span>
#include <vector>

#include "dsg/detail/engine.hpp"
#include "dsg/polynomial.hpp"

namespace dsg {

/// The reduced Groebner basis of an ideal of a PolyRing, with respect to
/// that ring's order. Elements are monic, sorted by descending leading
/// monomial, and no monomial of any element is divisible by another
/// element's leading monomial.
class GroebnerBasis {
 public:
  const PolyRing& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_.order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_unit() const;
  bool is_zero_ideal() const { return elements_.empty(); }
  std::vector<Exponents> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const GroebnerBasis& other) const;  // ideal inclusion other ⊆ this

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

 private:
  friend GroebnerBasis reduced_groebner(const PolyRing&, std::span<const Polynomial>, const GroebnerOptions&);
  GroebnerBasis(PolyRing ring, std::vector<Polynomial> elements, std::vector<Polynomial> gens);

  PolyRing ring_;
  std::vector<Polynomial> elements_;
  std::vector<Polynomial> generators_;
  std::vector<detail::Vec> vecs_;
};

/// Buchberger's algorithm (normal selection strategy, Gebauer-Moeller
/// pair pruning). Throws CapExceeded when `opts` is exhausted.
GroebnerBasis reduced_groebner(const PolyRing& R, std::span<const Polynomial> gens, const GroebnerOptions& opts = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

Polynomial s_polynomial(const PolyRing& R, const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

/// Generators of (gens) ∩ k[keep], read off an elimination-order basis of
/// the ideal. The result is the reduced basis of the contraction, in the
/// original ring's order.
std::vector<Polynomial> eliminate(const PolyRing& R, std::span<const Polynomial> gens,
                                  std::span<const std::size_t> keep, const GroebnerOptions& opts = {});

}  // namespace dsg
