#pragma once

#include <optional>

#include "coxaut/diagram.hpp"
#include "coxaut/oracle.hpp"

namespace coxaut {

// One connected component of a disconnected diagram, with the user-supplied
// assertions about the factor group. Single vertices and single edges are
// recognized as finite on sight.
struct Factor {
  CoxeterDiagram diagram;
  std::vector<Gen> vertices;  // indices into the full diagram
  std::optional<bool> strongly_rigid;
  std::optional<bool> finite;
};

struct FreeDecomposition {
  CoxeterDiagram full;
  std::vector<Factor> factors;  // ordered by least vertex name

  int factor_of(Gen g) const;
};

FreeDecomposition decompose(const CoxeterDiagram& d,
                            const std::vector<FactorDirective>& directives = {});

// Automorphism of a two-factor free product as a triple (w, u1, u2): factor
// one is twisted by u1 on the right, factor two by u2 on the left, and the
// whole image is conjugated by w:
//   x in W1  ->  w u1^-1 x u1 w^-1
//   x in W2  ->  w u2 x u2^-1 w^-1
// This is the parametrization under which composition reads
//   (w', u1', u2') . (w, u1, u2) = (phi'(w) w', u1 u1', u2' u2).
struct TripleAut {
  Word w, u1, u2;

  friend bool operator==(const TripleAut&, const TripleAut&) = default;
};

void validate_triple(const FreeDecomposition& dec, const TripleAut& t);

Word apply_triple(const FreeDecomposition& dec, const TripleAut& t, const Word& w,
                  const Oracle& o);

TripleAut compose_triples(const TripleAut& outer, const TripleAut& inner,
                          const FreeDecomposition& dec, const Oracle& o);

TripleAut invert_triple(const TripleAut& t, const FreeDecomposition& dec,
                        const Oracle& o);

// Finiteness of Out for a free product: two factors are finite iff both
// factor groups are; three or more factors always give an infinite Out; a
// single factor is the connected case. Throws when a factor's finiteness is
// neither evident from its shape nor asserted by a directive.
bool out_finite_freeprod(const FreeDecomposition& dec);

// Resolved finiteness of one factor (shape rule, then directive).
std::optional<bool> factor_finite(const Factor& f);

}  // namespace coxaut
