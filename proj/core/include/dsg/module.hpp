#pragma once

#include <span>
#include <vector>

#include "dsg/groebner.hpp"
#include "dsg/matrix.hpp"

namespace dsg {

/// An element of the free module R^m, one polynomial per coordinate.
struct ModuleElement {
  std::vector<Polynomial> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

/// Reduced Groebner basis of a submodule of R^rank.
class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(const PolyRing& R, std::size_t rank, std::span<const ModuleElement> gens,
                      ModuleOrder order = {}, const GroebnerOptions& opts = {});

  std::size_t rank() const { return rank_; }
  const std::vector<ModuleElement>& elements() const { return elements_; }
  ModuleElement normal_form(const ModuleElement& v) const;
  bool contains(const ModuleElement& v) const { return normal_form(v).is_zero(); }

 private:
  PolyRing ring_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<detail::Vec> vecs_;
  std::vector<ModuleElement> elements_;
};

/// Generators of ker(M : R^s -> R^t) for a t x s matrix. Each generator is
/// checked to satisfy M g = 0 before it is returned.
struct SyzygyBasis {
  std::vector<ModuleElement> generators;
};

SyzygyBasis syzygies(const PolyRing& R, const PolyMatrix& M, const GroebnerOptions& opts = {});

/// Kernel of M over the quotient P/(relations): preimage generators in P^s
/// with coordinates reduced modulo the relations; elements of
/// relations * P^s are discarded.
SyzygyBasis syzygies_modulo(const PolyRing& R, const PolyMatrix& M, std::span<const Polynomial> relations,
                            const GroebnerOptions& opts = {});

/// Membership in the submodule of (P/relations)^t spanned by `gens`.
class QuotientSubmodule {
 public:
  QuotientSubmodule(const PolyRing& R, std::size_t rank, std::span<const ModuleElement> gens,
                    std::span<const Polynomial> relations, const GroebnerOptions& opts = {});
  bool contains(const ModuleElement& v) const { return basis_.contains(v); }

 private:
  ModuleGroebnerBasis basis_;
};

ModuleElement apply(const PolyRing& R, const PolyMatrix& M, const ModuleElement& v);
std::vector<ModuleElement> columns(const PolyMatrix& M);
PolyMatrix matrix_from(std::size_t rows, std::span<const ModuleElement> cols);

}  // namespace dsg
