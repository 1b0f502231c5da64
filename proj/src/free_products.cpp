#include "coxaut/free_products.hpp"

#include <algorithm>

#include "coxaut/outgroup.hpp"
#include "coxaut/structure.hpp"

namespace coxaut {

int FreeDecomposition::factor_of(Gen g) const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (std::binary_search(factors[i].vertices.begin(), factors[i].vertices.end(), g))
      return static_cast<int>(i);
  throw DomainError("vertex outside every factor");
}

FreeDecomposition decompose(const CoxeterDiagram& d,
                            const std::vector<FactorDirective>& directives) {
  FreeDecomposition dec;
  dec.full = d;
  for (const auto& comp : components_idx(d, {})) {
    Factor f;
    f.vertices = comp;
    f.diagram = d.induced(comp);
    dec.factors.push_back(std::move(f));
  }
  for (const auto& dir : directives) {
    if (dir.index < 1 || dir.index > dec.factors.size())
      throw DomainError("factor directive index out of range");
    auto& f = dec.factors[dir.index - 1];
    if (dir.flag == "strongly_rigid") f.strongly_rigid = true;
    if (dir.flag == "finite") f.finite = true;
  }
  return dec;
}

std::optional<bool> factor_finite(const Factor& f) {
  if (f.diagram.rank() == 1) return true;                               // Z2
  if (f.diagram.rank() == 2 && f.diagram.iedges().size() == 1) return true;  // dihedral
  // Three or more generators of an even large-type group always give an
  // infinite group: some pair has label >= 4 or infinity on each side, so
  // the group contains an infinite dihedral or a triangle group with
  // 1/m + 1/n + 1/p <= 3/4.
  auto rep = validate(f.diagram);
  if (f.diagram.rank() >= 3 && rep.even && rep.large_type) return false;
  return f.finite;
}

void validate_triple(const FreeDecomposition& dec, const TripleAut& t) {
  if (dec.factors.size() != 2)
    throw DomainError("triples require exactly two factors");
  for (char c : t.u1)
    if (dec.factor_of(static_cast<Gen>(c)) != 0)
      throw DomainError("u1 must use letters of the first factor");
  for (char c : t.u2)
    if (dec.factor_of(static_cast<Gen>(c)) != 1)
      throw DomainError("u2 must use letters of the second factor");
}

namespace {

// Letterwise twist without the outer conjugation by w.
Word twist(const FreeDecomposition& dec, const TripleAut& t, const Word& w) {
  Word out;
  for (char c : w) {
    if (dec.factor_of(static_cast<Gen>(c)) == 0) {
      out += inverse(t.u1);
      out.push_back(c);
      out += t.u1;
    } else {
      out += t.u2;
      out.push_back(c);
      out += inverse(t.u2);
    }
  }
  return out;
}

}  // namespace

Word apply_triple(const FreeDecomposition& dec, const TripleAut& t, const Word& w,
                  const Oracle& o) {
  validate_triple(dec, t);
  return o.reduce(t.w + twist(dec, t, w) + inverse(t.w));
}

TripleAut compose_triples(const TripleAut& outer, const TripleAut& inner,
                          const FreeDecomposition& dec, const Oracle& o) {
  validate_triple(dec, outer);
  validate_triple(dec, inner);
  TripleAut r;
  r.w = o.reduce(apply_triple(dec, outer, inner.w, o) + outer.w);
  r.u1 = o.reduce(inner.u1 + outer.u1);
  r.u2 = o.reduce(outer.u2 + inner.u2);
  return r;
}

TripleAut invert_triple(const TripleAut& t, const FreeDecomposition& dec,
                        const Oracle& o) {
  validate_triple(dec, t);
  TripleAut r;
  r.u1 = inverse(t.u1);
  r.u2 = inverse(t.u2);
  r.w = o.reduce(twist(dec, r, inverse(t.w)));
  return r;
}

bool out_finite_freeprod(const FreeDecomposition& dec) {
  if (dec.factors.empty()) throw DomainError("empty decomposition");
  if (dec.factors.size() == 1)
    return is_out_finite(dec.factors[0].diagram).first;
  if (dec.factors.size() >= 3) return false;

  auto f1 = factor_finite(dec.factors[0]);
  auto f2 = factor_finite(dec.factors[1]);
  if ((f1 && !*f1) || (f2 && !*f2)) return false;
  if (f1 && f2) return true;
  throw DomainError(
      "factor finiteness unknown; add a `factor <i> finite` directive");
}

}  // namespace coxaut
