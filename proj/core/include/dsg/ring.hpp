#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsg/groebner.hpp"
#include "dsg/polynomial.hpp"

namespace dsg {

/// R = k[X1..Xn]/(f1..fc). The reduced basis of the relation ideal and the
/// Krull dimension are computed once, at construction.
class RingPresentation {
 public:
  RingPresentation(PolyRing ambient, std::vector<Polynomial> relations, const GroebnerOptions& opts = {});

  const PolyRing& ambient() const { return ambient_; }
  const Field& field() const { return ambient_.field(); }
  std::size_t nvars() const { return ambient_.nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& relation_basis() const { return basis_; }
  const GroebnerOptions& options() const { return opts_; }

  int dimension() const { return dim_; }
  // h = n - dim R, the height of the relation ideal.
  int codimension() const { return static_cast<int>(nvars()) - dim_; }

  // All relations weighted-homogeneous: the graded reading applies.
  bool is_graded() const;

  Polynomial reduce(const Polynomial& f) const { return basis_.normal_form(f); }
  std::string format(const Polynomial& f) const { return ambient_.format(f); }

 private:
  PolyRing ambient_;
  std::vector<Polynomial> relations_;
  GroebnerOptions opts_;
  GroebnerBasis basis_;
  int dim_ = 0;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

RingPtr make_ring(PolyRing ambient, std::vector<Polynomial> relations, const GroebnerOptions& opts = {});

/// Dimension of k[X]/I read off leading monomials: the largest set of
/// variables no leading monomial is supported in. nullopt for the unit ideal.
std::optional<int> dimension_from_leading(std::size_t nvars, std::span<const Exponents> leading, bool unit);

}  // namespace dsg
