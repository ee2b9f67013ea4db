#include "dsg/module.hpp"

#include <algorithm>
#include <stdexcept>

#include "dsg/errors.hpp"

namespace dsg {

namespace {

detail::Vec to_vec(const detail::Engine& eng, const ModuleElement& v, std::size_t offset = 0) {
  detail::Vec out;
  for (std::size_t c = 0; c < v.coords.size(); ++c)
    for (const auto& t : v.coords[c].terms()) out.push_back(detail::VTerm{t.exp, c + offset, t.coeff});
  return eng.normalize(std::move(out));
}

ModuleElement from_vec(const PolyRing& R, const detail::Vec& v, std::size_t rank, std::size_t offset = 0) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < offset) continue;
    parts.at(t.comp - offset).push_back(Term{t.exp, t.coeff});
  }
  ModuleElement out;
  out.coords.reserve(rank);
  for (auto& p : parts) out.coords.push_back(R.from_terms(std::move(p)));
  return out;
}

}  // namespace

bool ModuleElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& p) { return p.is_zero(); });
}

ModuleGroebnerBasis::ModuleGroebnerBasis(const PolyRing& R, std::size_t rank, std::span<const ModuleElement> gens,
                                         ModuleOrder order, const GroebnerOptions& opts)
    : ring_(R), rank_(rank), order_(order) {
  detail::Engine eng(ring_, order_, false);
  std::vector<detail::Vec> in;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw DomainError("module generator has wrong rank");
    in.push_back(to_vec(eng, g));
  }
  vecs_ = eng.groebner(std::move(in), opts);
  for (const auto& v : vecs_) elements_.push_back(from_vec(ring_, v, rank_));
}

ModuleElement ModuleGroebnerBasis::normal_form(const ModuleElement& v) const {
  if (v.rank() != rank_) throw DomainError("module element has wrong rank");
  detail::Engine eng(ring_, order_, false);
  std::vector<const detail::Vec*> ptrs;
  for (const auto& b : vecs_) ptrs.push_back(&b);
  std::size_t steps = 0;
  auto r = eng.reduce(to_vec(eng, v), ptrs, steps, static_cast<std::size_t>(-1));
  return from_vec(ring_, r, rank_);
}

ModuleElement apply(const PolyRing& R, const PolyMatrix& M, const ModuleElement& v) {
  if (v.rank() != M.cols()) throw DomainError("vector length does not match matrix");
  ModuleElement out;
  out.coords.resize(M.rows());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (!M(r, c).is_zero() && !v.coords[c].is_zero())
        out.coords[r] = R.add(out.coords[r], R.mul(M(r, c), v.coords[c]));
  return out;
}

std::vector<ModuleElement> columns(const PolyMatrix& M) {
  std::vector<ModuleElement> out;
  for (std::size_t c = 0; c < M.cols(); ++c) out.push_back(ModuleElement{M.column(c)});
  return out;
}

PolyMatrix matrix_from(std::size_t rows, std::span<const ModuleElement> cols) {
  PolyMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].rank() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c].coords[r];
  }
  return m;
}

SyzygyBasis syzygies(const PolyRing& R, const PolyMatrix& M, const GroebnerOptions& opts) {
  const std::size_t t = M.rows(), s = M.cols();
  // Augment column i with the unit vector e_{t+i}; an order eliminating the
  // first t components leaves a basis of the kernel in the tail block.
  ModuleOrder order{ModuleOrder::Kind::TermOverPosition, t};
  detail::Engine eng(R, order, false);
  std::vector<detail::Vec> in;
  for (std::size_t c = 0; c < s; ++c) {
    detail::Vec v;
    for (std::size_t r = 0; r < t; ++r)
      for (const auto& term : M(r, c).terms()) v.push_back(detail::VTerm{term.exp, r, term.coeff});
    v.push_back(detail::VTerm{Exponents(R.nvars(), 0), t + c, R.field().one()});
    in.push_back(eng.normalize(std::move(v)));
  }
  auto G = eng.groebner(std::move(in), opts);
  SyzygyBasis out;
  for (const auto& g : G) {
    if (g.front().comp < t) continue;
    auto syz = from_vec(R, g, s, t);
    if (!apply(R, M, syz).is_zero()) throw std::logic_error("syzygy check failed");
    out.generators.push_back(std::move(syz));
  }
  return out;
}

SyzygyBasis syzygies_modulo(const PolyRing& R, const PolyMatrix& M, std::span<const Polynomial> relations,
                            const GroebnerOptions& opts) {
  const std::size_t t = M.rows(), s = M.cols();
  std::vector<Polynomial> rel;
  for (const auto& f : relations)
    if (!f.is_zero()) rel.push_back(f);
  PolyMatrix aug(t, s + t * rel.size());
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < s; ++c) aug(r, c) = M(r, c);
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t k = 0; k < rel.size(); ++k) aug(r, s + r * rel.size() + k) = rel[k];
  auto full = syzygies(R, aug, opts);
  auto J = reduced_groebner(R, rel, opts);
  SyzygyBasis out;
  for (const auto& g : full.generators) {
    ModuleElement v;
    for (std::size_t c = 0; c < s; ++c) v.coords.push_back(J.normal_form(g.coords[c]));
    if (v.is_zero()) continue;
    if (std::find(out.generators.begin(), out.generators.end(), v) == out.generators.end())
      out.generators.push_back(std::move(v));
  }
  return out;
}

QuotientSubmodule::QuotientSubmodule(const PolyRing& R, std::size_t rank, std::span<const ModuleElement> gens,
                                     std::span<const Polynomial> relations, const GroebnerOptions& opts)
    : basis_([&] {
        std::vector<ModuleElement> all(gens.begin(), gens.end());
        for (std::size_t c = 0; c < rank; ++c)
          for (const auto& f : relations) {
            if (f.is_zero()) continue;
            ModuleElement e;
            e.coords.assign(rank, R.zero());
            e.coords[c] = f;
            all.push_back(std::move(e));
          }
        return ModuleGroebnerBasis(R, rank, all, ModuleOrder{}, opts);
      }()) {}

}  // namespace dsg
