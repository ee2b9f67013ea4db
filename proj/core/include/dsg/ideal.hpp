#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsg/groebner.hpp"
#include "dsg/ring.hpp"

namespace dsg {

/// An ideal of R = P/J, carried by representatives in P. `lifted()` is the
/// reduced basis of generators + J, so V(I) and membership always refer to
/// the quotient ring.
class IdealData {
 public:
  IdealData(RingPtr ring, std::vector<Polynomial> generators);

  static IdealData zero(RingPtr ring) { return IdealData(std::move(ring), {}); }
  static IdealData unit(RingPtr ring);
  static IdealData variables(RingPtr ring, const std::vector<std::size_t>& vars);
  static IdealData maximal(RingPtr ring);  // the irrelevant ideal (X1..Xn)

  const RingPtr& ring_ptr() const { return ring_; }
  const RingPresentation& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& lifted() const { return lifted_; }

  bool is_unit() const { return lifted_.is_unit(); }
  bool is_zero() const;  // I ⊆ J
  bool is_monomial() const;  // lifted basis consists of monomials
  bool is_graded() const;    // lifted basis (hence I + J) weighted-homogeneous

  std::string format() const;  // "(x^2, y)"

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  GroebnerBasis lifted_;
};

bool same_ideal(const IdealData& a, const IdealData& b);
bool contained_in(const IdealData& a, const IdealData& b);  // a ⊆ b in R

IdealData ideal_sum(const IdealData& a, const IdealData& b);
IdealData ideal_product(const IdealData& a, const IdealData& b);
IdealData ideal_power(const IdealData& a, unsigned e);
IdealData ideal_intersection(const IdealData& a, const IdealData& b);
IdealData ideal_colon(const IdealData& a, const IdealData& b);       // (a :_R b)
IdealData ideal_saturation(const IdealData& a, const IdealData& b);  // (a :_R b^∞)

/// f ∈ I + J.
bool membership(const Polynomial& f, const IdealData& I);
/// f ∈ √(I + J), decided by 1 ∈ (I + J + (1 - t f)) in P[t].
bool radical_membership(const Polynomial& f, const IdealData& I);

/// dim R/I; nullopt when I + J is the unit ideal.
std::optional<int> krull_dimension(const IdealData& I);

/// Minimal primes of a monomial ideal (lifted basis of monomials), each as
/// the sorted list of variable indices generating it. Throws
/// UnsupportedError otherwise.
std::vector<std::vector<std::size_t>> monomial_minimal_primes(const IdealData& I);

/// Every listed generator is weighted-homogeneous.
bool is_weighted_homogeneous(const IdealData& I);

/// A tidy generating set of I modulo J: normal forms of basis elements of
/// I + J, pruned greedily in degree order. For graded ideals the result is
/// a minimal generating set.
IdealData minimal_generators(const IdealData& I);

/// The quotient ring R/I presented over the same ambient ring.
RingPtr quotient_ring(const IdealData& I);

/// Re-homes an ideal into a ring over the same ambient ring.
IdealData rehome(const IdealData& I, RingPtr ring);

}  // namespace dsg
