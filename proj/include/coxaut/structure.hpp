#pragma once

#include <memory>
#include <vector>

#include "coxaut/diagram.hpp"
#include "coxaut/oracle.hpp"
#include "coxaut/word.hpp"

namespace coxaut {

// Subset J of the vertices whose removal disconnects the diagram and whose
// parabolic has a nontrivial centralizer: a cut vertex, or an edge pair.
struct Junction {
  enum class Kind { vertex, edge_pair };
  Kind kind;
  std::vector<Gen> verts;               // sorted, size 1 or 2
  std::vector<std::vector<Gen>> sides;  // components of V minus J
};

// Maximal vertex set sharing one conjugating word under any automorphism:
// a closure of regular circuits, or a singleton off every circuit.
struct Unit {
  std::vector<Gen> verts;  // sorted
  bool singleton() const { return verts.size() == 1; }
};

struct UnitGraphEdge {
  enum class Witness { junction_vertex, junction_pair, bridge };
  int a, b;  // unit indices, a < b
  Witness witness;
  std::vector<Gen> junction;  // junction witness vertices (1 or 2)
  Gen sa = 0, sb = 0;         // bridge endpoints, sa in unit a, sb in unit b
  int n = 0;                  // label of the bridge / of the junction pair edge
  int type = 0;               // case type 1..6 with a as initial point
};

struct UnitGraph {
  std::vector<Unit> units;
  std::vector<UnitGraphEdge> edges;
};

// Tree edge oriented away from the basepoint, with everything the label
// algebra needs precomputed: the case type, the junction or bridge witness,
// and the factor-generator vertex lists for each side.
struct TreeEdge {
  int initial, terminal;
  int type;  // 1..6
  int graph_edge;

  std::vector<Gen> junction;  // types 1, 2
  Gen si = 0, sj = 0;         // bridge endpoints, si in initial unit (types 3-6)
  int n = 0;                  // exponent used by the label (types 1, 3-6)
  int deg_si = 0, deg_sj = 0;

  // Vertices t contributing centralizer factors (t s)^{m/2 - 1} t around the
  // junction vertex (type 2) or around si / sj (types 3-5), restricted to the
  // initial / terminal side.
  std::vector<Gen> u_ids;
  std::vector<Gen> v_ids;
};

struct OrientedTree {
  int basepoint = 0;
  std::vector<TreeEdge> edges;
  std::vector<int> parent_edge;             // per unit; -1 at the basepoint
  std::vector<std::vector<int>> children;   // per unit, edge indices
  std::vector<int> depth;                   // per unit
};

// Everything the automorphism machinery needs about one diagram.
struct StructureData {
  CoxeterDiagram diagram;
  std::vector<std::vector<Gen>> circuits;
  std::vector<Junction> junctions;
  UnitGraph graph;
  OrientedTree tree;

  // Lex-least unit containing each vertex.
  std::vector<int> unit_of_vertex;

  const Unit& unit(int i) const { return graph.units[i]; }
};

using StructurePtr = std::shared_ptr<const StructureData>;

// Generators of the centralizer C(W_J): for J = {s} the vertex itself plus
// (t s)^{m/2 - 1} t for every neighbor t; for an adjacent pair the single
// element (s1 s2)^{m/2}; empty for anything else.
std::vector<Word> centralizer_generators(const CoxeterDiagram& d,
                                         const std::vector<Gen>& J);
std::vector<Word> centralizer_generators(const CoxeterDiagram& d,
                                         const std::vector<std::string>& J);

// The word (t s)^{m/2 - 1} t, an involution commuting with s.
Word centralizer_factor(const CoxeterDiagram& d, Gen t, Gen s);

bool is_junction_set(const CoxeterDiagram& d, const std::vector<Gen>& J);
std::vector<Junction> junctions(const CoxeterDiagram& d);

// Chordless simple cycles; each reported once, as the vertex sequence
// starting at its least vertex with the smaller second vertex, sorted.
std::vector<std::vector<Gen>> regular_circuits(const CoxeterDiagram& d);

// Units from a given circuit ordering (the result must not depend on the
// order; tests shuffle it). Circuits merge when their pairwise intersection
// is nonempty and not a junction.
std::vector<Unit> units_from_circuits(const CoxeterDiagram& d,
                                      const std::vector<std::vector<Gen>>& circuits);
std::vector<Unit> units(const CoxeterDiagram& d);

UnitGraph unit_graph(const CoxeterDiagram& d, std::vector<Unit> units);

// Spanning tree normalized so each single-vertex junction is crossed by
// exactly one tree edge, rooted at the lex-least unit that is not a
// degree-1 singleton, edges oriented away from the root.
OrientedTree modified_spanning_tree(const CoxeterDiagram& d, const UnitGraph& g);

// Full pipeline; requires a validated diagram.
StructurePtr analyze_structure(const CoxeterDiagram& d);

// Case type 1..6 for an edge traversed initial -> terminal.
int case_type(const UnitGraph& g, const UnitGraphEdge& e, bool a_is_initial);

}  // namespace coxaut
