#include "dsg/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "dsg/errors.hpp"

namespace dsg {

std::vector<std::size_t> FreeResolution::betti() const {
  std::vector<std::size_t> b;
  for (const auto& d : degrees) b.push_back(d.size());
  return b;
}

namespace {

// Degree of a column with respect to row twists; nullopt for a zero column.
std::optional<std::int64_t> column_degree(const PolyRing& P, const ModuleElement& v,
                                          const std::vector<std::int64_t>& twists) {
  std::optional<std::int64_t> deg;
  for (std::size_t r = 0; r < v.rank(); ++r)
    for (const auto& t : v.coords[r].terms()) {
      auto d = P.weighted_degree(t.exp) + twists[r];
      if (deg && *deg != d) throw UnsupportedError("resolution: presentation is not weighted-homogeneous");
      deg = d;
    }
  return deg;
}

struct Generators {
  std::vector<ModuleElement> columns;
  std::vector<std::int64_t> degrees;
};

// Greedy minimal generating set: process in degree order, keep what is not
// already spanned by kept elements.
Generators prune(const PolyRing& P, std::vector<ModuleElement> cands, const std::vector<std::int64_t>& twists,
                 const GroebnerOptions& opts) {
  std::vector<std::pair<std::int64_t, ModuleElement>> graded;
  for (auto& c : cands) {
    auto d = column_degree(P, c, twists);
    if (!d) continue;
    graded.emplace_back(*d, std::move(c));
  }
  std::stable_sort(graded.begin(), graded.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Generators out;
  const std::size_t rank = twists.size();
  for (auto& [d, c] : graded) {
    if (!out.columns.empty()) {
      ModuleGroebnerBasis span(P, rank, out.columns, ModuleOrder{}, opts);
      if (span.contains(c)) continue;
    }
    out.columns.push_back(std::move(c));
    out.degrees.push_back(d);
  }
  return out;
}

}  // namespace

void cancel_unit_entries(const PolyRing& P, FreeResolution& res) {
  const auto& F = P.field();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < res.maps.size() && !changed; ++i) {
      auto& d = res.maps[i];
      for (std::size_t r = 0; r < d.rows() && !changed; ++r)
        for (std::size_t c = 0; c < d.cols() && !changed; ++c) {
          if (d(r, c).is_zero() || !d(r, c).is_constant()) continue;
          auto u_inv = F.inv(d(r, c).leading().coeff);
          // d' = d - col_c * row_r / u, then drop row r and column c.
          PolyMatrix nd(d.rows() - 1, d.cols() - 1);
          for (std::size_t a = 0, ra = 0; a < d.rows(); ++a) {
            if (a == r) continue;
            for (std::size_t b = 0, cb = 0; b < d.cols(); ++b) {
              if (b == c) continue;
              auto corr = P.scale(P.mul(d(a, c), d(r, b)), u_inv);
              nd(ra, cb++) = P.sub(d(a, b), corr);
            }
            ++ra;
          }
          d = std::move(nd);
          // Map into F_i loses column r; map out of F_{i+1} loses row c.
          if (i > 0) {
            auto& prev = res.maps[i - 1];
            PolyMatrix np(prev.rows(), prev.cols() - 1);
            for (std::size_t a = 0; a < prev.rows(); ++a)
              for (std::size_t b = 0, cb = 0; b < prev.cols(); ++b)
                if (b != r) np(a, cb++) = prev(a, b);
            prev = std::move(np);
          }
          if (i + 1 < res.maps.size()) {
            auto& next = res.maps[i + 1];
            PolyMatrix nn(next.rows() - 1, next.cols());
            for (std::size_t a = 0, ra = 0; a < next.rows(); ++a) {
              if (a == c) continue;
              for (std::size_t b = 0; b < next.cols(); ++b) nn(ra, b) = next(a, b);
              ++ra;
            }
            next = std::move(nn);
          }
          res.degrees[i].erase(res.degrees[i].begin() + static_cast<std::ptrdiff_t>(r));
          res.degrees[i + 1].erase(res.degrees[i + 1].begin() + static_cast<std::ptrdiff_t>(c));
          changed = true;
        }
    }
  }
  // Trailing zero-rank modules carry no information.
  while (!res.maps.empty() && res.degrees.back().empty()) {
    res.maps.pop_back();
    res.degrees.pop_back();
  }
  for (std::size_t i = 0; i < res.maps.size(); ++i)
    for (std::size_t r = 0; r < res.maps[i].rows(); ++r)
      for (std::size_t c = 0; c < res.maps[i].cols(); ++c) {
        const auto& e = res.maps[i](r, c);
        if (!e.is_zero() && e.is_constant()) return;
      }
  res.minimal = true;
}

FreeResolution minimal_free_resolution(const PolyRing& P, const PolyMatrix& presentation,
                                       std::vector<std::int64_t> target_degrees, std::size_t length_cap,
                                       const GroebnerOptions& opts) {
  if (target_degrees.size() != presentation.rows()) throw DomainError("resolution: twist count mismatch");
  FreeResolution res;
  res.degrees.push_back(target_degrees);
  auto gens = prune(P, columns(presentation), target_degrees, opts);
  res.complete = true;
  while (!gens.columns.empty()) {
    if (res.maps.size() >= length_cap) {
      res.complete = false;
      break;
    }
    const auto rows = res.degrees.back().size();
    res.maps.push_back(matrix_from(rows, gens.columns));
    res.degrees.push_back(gens.degrees);
    auto kernel = syzygies(P, res.maps.back(), opts);
    gens = prune(P, std::move(kernel.generators), res.degrees.back(), opts);
  }
  cancel_unit_entries(P, res);
  return res;
}

FreeResolution resolve_ring(const RingPresentation& R, std::size_t length_cap) {
  const auto& P = R.ambient();
  const auto& rel = R.relation_basis().elements();
  PolyMatrix pres(1, rel.size());
  for (std::size_t c = 0; c < rel.size(); ++c) pres(0, c) = rel[c];
  return minimal_free_resolution(P, pres, {0}, length_cap, R.options());
}

bool is_complex(const PolyRing& P, const FreeResolution& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i)
    if (!is_zero(multiply(P, res.maps[i], res.maps[i + 1]))) return false;
  return true;
}

int projective_dimension(const RingPresentation& R) {
  if (!R.is_graded()) throw UnsupportedError("projective dimension: relations are not weighted-homogeneous");
  auto res = resolve_ring(R, R.nvars() + 1);
  if (!res.complete) throw std::logic_error("resolution longer than the number of variables");
  return static_cast<int>(res.length());
}

int depth_graded(const RingPresentation& R) { return static_cast<int>(R.nvars()) - projective_dimension(R); }

ExtGrade grade_ext_oracle(const IdealData& I, int bound) {
  if (I.is_unit()) throw DomainError("grade of the unit ideal");
  if (bound < static_cast<int>(I.ring().nvars())) throw DomainError("Ext oracle bound must be at least n");
  const auto& R = I.ring();
  const auto& P = R.ambient();
  const auto& K = I.lifted().elements();
  const auto& J = R.relation_basis().elements();

  // Resolution of P/(I+J) over P, far enough to see Ext^bound.
  PolyMatrix pres(1, K.size());
  for (std::size_t c = 0; c < K.size(); ++c) pres(0, c) = K[c];
  FreeResolution F;
  if (I.is_graded()) {
    F = minimal_free_resolution(P, pres, {0}, static_cast<std::size_t>(bound) + 1, R.options());
  } else {
    F.degrees.push_back({0});
    PolyMatrix cur = pres;
    while (cur.cols() > 0 && F.maps.size() <= static_cast<std::size_t>(bound)) {
      F.maps.push_back(cur);
      F.degrees.emplace_back(cur.cols(), 0);
      auto syz = syzygies(P, cur, R.options());
      cur = matrix_from(cur.cols(), syz.generators);
    }
  }
  auto rank = [&](std::size_t i) -> std::size_t { return i < F.degrees.size() ? F.degrees[i].size() : 0; };

  for (int i = 0; i <= bound; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const std::size_t b = rank(ui);
    if (b == 0) continue;
    // Cocycles: kernel over R of the transpose of F_{i+1} -> F_i.
    std::vector<ModuleElement> cocycles;
    if (ui < F.maps.size()) {
      cocycles = syzygies_modulo(P, F.maps[ui].transpose(), J, R.options()).generators;
    } else {
      for (std::size_t k = 0; k < b; ++k) {
        ModuleElement e;
        e.coords.assign(b, P.zero());
        e.coords[k] = P.one();
        cocycles.push_back(std::move(e));
      }
    }
    // Coboundaries: image of the transpose of F_i -> F_{i-1}.
    std::vector<ModuleElement> coboundaries;
    if (i > 0) coboundaries = columns(F.maps[ui - 1].transpose());
    QuotientSubmodule image(P, b, coboundaries, J, R.options());
    for (const auto& z : cocycles)
      if (!image.contains(z)) return ExtGrade{i, false};
  }
  return ExtGrade{bound + 1, true};
}

}  // namespace dsg
