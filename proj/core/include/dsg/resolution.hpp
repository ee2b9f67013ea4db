#pragma once

#include <cstdint>
#include <vector>

#include "dsg/ideal.hpp"
#include "dsg/matrix.hpp"
#include "dsg/module.hpp"

namespace dsg {

/// F_0 <- F_1 <- ... <- F_l over the ambient polynomial ring.
/// maps[i] is the matrix of F_{i+1} -> F_i (rank F_i rows, rank F_{i+1}
/// columns); degrees[i] holds the twists of the basis of F_i.
struct FreeResolution {
  std::vector<PolyMatrix> maps;
  std::vector<std::vector<std::int64_t>> degrees;
  bool minimal = false;
  bool complete = false;  // false when stopped by the length cap

  std::vector<std::size_t> betti() const;
  std::size_t length() const { return maps.size(); }
};

/// Minimal graded free resolution of coker(presentation), where the rows
/// of `presentation` carry the twists `target_degrees`. Kernel generators
/// are pruned in degree order (graded Nakayama) and leftover unit entries
/// are cancelled by pivoting. Throws UnsupportedError on non-homogeneous
/// columns.
FreeResolution minimal_free_resolution(const PolyRing& P, const PolyMatrix& presentation,
                                       std::vector<std::int64_t> target_degrees, std::size_t length_cap,
                                       const GroebnerOptions& opts = {});

/// Resolution of R = P/J as a P-module.
FreeResolution resolve_ring(const RingPresentation& R, std::size_t length_cap = 64);

/// Cancels unit entries: for a unit at (r, c) of map i, basis element c of
/// F_{i+1} and r of F_i split off as an exact summand.
void cancel_unit_entries(const PolyRing& P, FreeResolution& res);

/// Consecutive composites vanish.
bool is_complex(const PolyRing& P, const FreeResolution& res);

int projective_dimension(const RingPresentation& R);

/// depth at the irrelevant ideal, n - pd_P(R). Requires graded relations.
int depth_graded(const RingPresentation& R);

/// min { i <= bound : Ext^i_P(P/(I+J), R) != 0 }. When no Ext up to `bound`
/// is nonzero, `value` is bound + 1 and `lower_bound_only` is set.
struct ExtGrade {
  int value = 0;
  bool lower_bound_only = false;
};
ExtGrade grade_ext_oracle(const IdealData& I, int bound);

}  // namespace dsg
