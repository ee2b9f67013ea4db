#include "dsg/monomial_order.hpp"

#include <algorithm>

#include "dsg/errors.hpp"

namespace dsg {

namespace {

void check_weights(const std::vector<std::int32_t>& w) {
  for (auto x : w)
    if (x <= 0) throw DomainError("monomial order weights must be positive");
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(std::vector<std::int32_t> weights) {
  check_weights(weights);
  auto n = weights.size();
  return MonomialOrder(Kind::WeightedGrevlex, std::move(weights), std::vector<bool>(n, false));
}

MonomialOrder MonomialOrder::lex(std::vector<std::int32_t> weights) {
  check_weights(weights);
  auto n = weights.size();
  return MonomialOrder(Kind::Lex, std::move(weights), std::vector<bool>(n, false));
}

MonomialOrder MonomialOrder::elimination(std::vector<std::int32_t> weights, std::vector<bool> eliminate) {
  check_weights(weights);
  if (eliminate.size() != weights.size()) throw DomainError("elimination mask has wrong arity");
  return MonomialOrder(Kind::Elimination, std::move(weights), std::move(eliminate));
}

std::int64_t MonomialOrder::weighted_degree(std::span<const std::int32_t> e) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += std::int64_t{weights_[i]} * e[i];
  return d;
}

int MonomialOrder::compare_grevlex(std::span<const std::int32_t> a, std::span<const std::int32_t> b) const {
  auto da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(std::span<const std::int32_t> a, std::span<const std::int32_t> b) const {
  switch (kind_) {
    case Kind::WeightedGrevlex:
      return compare_grevlex(a, b);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Elimination: {
      std::int64_t ea = 0, eb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!eliminate_[i]) continue;
        ea += std::int64_t{weights_[i]} * a[i];
        eb += std::int64_t{weights_[i]} * b[i];
      }
      if (ea != eb) return ea < eb ? -1 : 1;
      return compare_grevlex(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::WeightedGrevlex: return "weighted-grevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elimination";
  }
  return "?";
}

bool divides(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(std::span<const std::int32_t> b, std::span<const std::int32_t> a) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exponents product(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool coprime(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

std::int64_t total_degree(std::span<const std::int32_t> e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace dsg
