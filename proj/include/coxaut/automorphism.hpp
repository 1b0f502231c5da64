#pragma once

#include <optional>
#include <random>
#include <vector>

#include "coxaut/oracle.hpp"
#include "coxaut/structure.hpp"

namespace coxaut {

// One of the four geodesic words x_l(k) over an edge [si sj] labeled n:
//   x_1 = (sj si)^((k-1)/2)        x_2 = (sj si)^((k-1)/2) sj
//   x_3 = (si sj)^((n-k-1)/2) si   x_4 = (si sj)^((n-k+1)/2)
// Conjugating sj by any of them sends si * (x sj x^-1) to (si sj)^k.
struct XPart {
  int l = 1;
  int k = 1;

  bool identity() const { return l == 1 && k == 1; }
  friend bool operator==(const XPart&, const XPart&) = default;
};

Word x_word(Gen si, Gen sj, int n, const XPart& x);

// Label of one oriented tree edge. Which fields are meaningful depends on
// the edge's case type:
//   type 1: eps selects 1 or (s1 s2)^(m/2)
//   type 2: eps selects 1 or s; u and v are factor-vertex sequences
//   type 3: u, x, v       type 4: u, x      type 5: x, v      type 6: x
// Factor sequences list vertices t, each denoting (t s)^(m/2 - 1) t around
// the junction vertex of that side; adjacent equal entries are cancelled.
struct EdgeLabel {
  int eps = 0;
  std::vector<Gen> u;
  std::vector<Gen> v;
  XPart x;

  bool identity() const { return eps == 0 && u.empty() && v.empty() && x.identity(); }
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

// An automorphism in tree form: a base word at the basepoint plus one label
// per tree edge. The conjugating word of a unit is the base word times the
// expanded labels along the tree geodesic to it.
struct AutLabeling {
  StructurePtr s;
  Word base;
  std::vector<EdgeLabel> labels;  // indexed like s->tree.edges

  friend bool operator==(const AutLabeling& a, const AutLabeling& b) {
    return a.base == b.base && a.labels == b.labels;
  }
};

// An automorphism as a diagram permutation followed by per-unit conjugation.
// This form plus the word oracle is the ground truth the tree algebra is
// checked against.
struct ConjugatorFamily {
  StructurePtr s;
  DiagramAutomorphism perm;
  std::vector<Word> w;  // per unit
};

// The l values an edge's label may use.
std::vector<int> allowed_l(const TreeEdge& e);

// Exponents 1 <= k < n with gcd(k, n) = 1.
std::vector<int> coprime_exponents(int n);

// Klein four-group product on {1,2,3,4} with 1 as unit.
int klein(int a, int b);

AutLabeling identity_labeling(StructurePtr s);
AutLabeling inner_labeling(StructurePtr s, Word w);

// Throws DomainError when a label does not fit its edge.
void validate_labeling(const AutLabeling& a);

Word expand_label(const CoxeterDiagram& d, const TreeEdge& e, const EdgeLabel& lab);

// Base word times the product of expanded labels along the geodesic from
// the basepoint to the unit.
Word conjugator_for_unit(const AutLabeling& a, int unit);

Word apply(const AutLabeling& a, const Word& w, const Oracle& o);

// Checks that every relator maps to the identity. Note that any
// label-shaped data passes: unit conjugators built from centralizer factors
// and x-words send relators to conjugates of relator powers even when the
// label is invalid, so validation (not this check) rejects bad exponents.
bool is_homomorphism(const AutLabeling& a, const Oracle& o);

// Same check for an arbitrary conjugator family, where it can genuinely
// fail (inconsistent per-unit words break shared-vertex relators).
bool is_homomorphism(const ConjugatorFamily& f, const Oracle& o);

// Edgewise inversion: factor sequences reverse, x(k, l) becomes x(k', l')
// with k k' = 1 (mod n) and l' = l paired 1<->4, 2<->3 when (k k' - 1)/n is
// odd. The base word of the inverse is the label-only application of the
// inverted labels to the reversed base. The result is canonicalized when
// possible and returned raw otherwise.
AutLabeling invert(const AutLabeling& a, const Oracle& o);

// Edgewise composition of outer after inner, canonicalized. Throws
// CanonicalizeError when the result has no representation in the restricted
// label spaces (the family form remains available to callers).
AutLabeling compose_labelings(const AutLabeling& outer, const AutLabeling& inner,
                              const Oracle& o);

// Restores the per-type l restrictions: drops centralizer tails on leaf
// edges and carries leading letters toward the basepoint. The pointwise
// action is unchanged. Throws CanonicalizeError when carrying cannot
// terminate.
AutLabeling canonicalize(const AutLabeling& a);

ConjugatorFamily to_family(const AutLabeling& a, const DiagramAutomorphism& perm,
                           const Oracle& o);
ConjugatorFamily to_family(const AutLabeling& a, const Oracle& o);

Word apply(const ConjugatorFamily& f, const Word& w, const Oracle& o);

ConjugatorFamily compose_general(const ConjugatorFamily& outer,
                                 const ConjugatorFamily& inner, const Oracle& o);

// Pointwise comparison of generator images under the oracle.
bool equal_general(const ConjugatorFamily& a, const ConjugatorFamily& b,
                   const Oracle& o);

// All labelings with trivial base whose factor sequences have length at most
// `bound`; exhaustive (bound ignored) when every edge space is finite.
std::vector<AutLabeling> enumerate_labelings(StructurePtr s, int bound);

// Uniform-ish random labeling for cross-check sampling.
AutLabeling random_labeling(StructurePtr s, int bound, std::mt19937_64& rng);

}  // namespace coxaut
