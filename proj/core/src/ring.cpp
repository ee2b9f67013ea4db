#include "dsg/ring.hpp"

#include <algorithm>

#include "dsg/errors.hpp"

namespace dsg {

std::optional<int> dimension_from_leading(std::size_t nvars, std::span<const Exponents> leading, bool unit) {
  if (unit) return std::nullopt;
  if (nvars > 24) throw UnsupportedError("dimension: too many variables for subset search");
  // Supports of leading monomials as bitmasks; U is independent iff no
  // support is contained in U.
  std::vector<std::uint32_t> supports;
  for (const auto& e : leading) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (e[i] != 0) m |= 1u << i;
    supports.push_back(m);
  }
  int best = 0;
  const std::uint32_t full = nvars == 32 ? ~0u : (1u << nvars) - 1;
  for (std::uint32_t u = 0;; ++u) {
    int size = __builtin_popcount(u);
    if (size > best &&
        std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~u) == 0; }))
      best = size;
    if (u == full) break;
  }
  return best;
}

RingPresentation::RingPresentation(PolyRing ambient, std::vector<Polynomial> relations, const GroebnerOptions& opts)
    : ambient_(std::move(ambient)),
      relations_(std::move(relations)),
      opts_(opts),
      basis_(reduced_groebner(ambient_, relations_, opts_)) {
  if (ambient_.order().kind() != MonomialOrder::Kind::WeightedGrevlex)
    throw DomainError("ring presentations use the weighted grevlex order");
  if (basis_.is_unit()) throw DomainError("the relations generate the unit ideal; the ring is zero");
  auto lm = basis_.leading_monomials();
  dim_ = *dimension_from_leading(nvars(), lm, false);
}

bool RingPresentation::is_graded() const {
  return std::all_of(basis_.elements().begin(), basis_.elements().end(),
                     [&](const Polynomial& f) { return ambient_.is_homogeneous(f); });
}

RingPtr make_ring(PolyRing ambient, std::vector<Polynomial> relations, const GroebnerOptions& opts) {
  return std::make_shared<const RingPresentation>(std::move(ambient), std::move(relations), opts);
}

}  // namespace dsg
