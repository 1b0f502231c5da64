#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxaut/errors.hpp"
#include "coxaut/word.hpp"

namespace coxaut {

// Edge of a Coxeter diagram with its finite exponent. Vertex names are kept
// sorted so that u < v.
struct DiagramEdge {
  std::string u, v;
  int label = 0;

  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
  friend auto operator<=>(const DiagramEdge&, const DiagramEdge&) = default;
};

// Edge-labeled undirected graph on generator names. An absent edge means the
// exponent is infinite. Immutable after construction; vertex indices follow
// the lexicographic order of the names, and every deterministic ordering in
// this library derives from that.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;

  // Sorts vertices, checks for self-loops and duplicate edges.
  static CoxeterDiagram build(std::vector<std::string> vertices,
                              std::vector<DiagramEdge> edges);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }
  Gen index_of(const std::string& name) const;
  const std::string& name_of(Gen g) const { return names_.at(g); }

  // Exponent m_uv, or 0 when the vertices are not adjacent (m = infinity).
  int label(Gen a, Gen b) const { return labels_[a][b]; }
  bool adjacent(Gen a, Gen b) const { return labels_[a][b] != 0; }
  const std::vector<Gen>& neighbors(Gen g) const { return adj_[g]; }
  int degree(Gen g) const { return static_cast<int>(adj_[g].size()); }

  struct IEdge {
    Gen a, b;  // a < b
    int m;
    friend bool operator==(const IEdge&, const IEdge&) = default;
  };
  const std::vector<IEdge>& iedges() const { return iedges_; }
  std::vector<DiagramEdge> edges() const;

  // Induced subdiagram on the given vertex indices.
  CoxeterDiagram induced(const std::vector<Gen>& verts) const;

  // Vertices lexicographically, then edges lexicographically.
  std::string serialize() const;

  Word word_from_names(const std::string& space_separated) const;
  std::string word_to_names(const Word& w) const;

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

 private:
  std::vector<std::string> names_;
  std::map<std::string, Gen> index_;
  std::vector<std::vector<int>> labels_;
  std::vector<std::vector<Gen>> adj_;
  std::vector<IEdge> iedges_;
};

// `factor <index> strongly_rigid|finite` directive from a diagram file;
// indices are 1-based positions in the canonical component order.
struct FactorDirective {
  std::size_t index = 0;
  std::string flag;
};

struct DiagramFile {
  CoxeterDiagram diagram;
  std::vector<FactorDirective> factors;
};

// Text format, one directive per line:
//   edge <u> <v> <label>
//   vertex <name>
//   factor <index> strongly_rigid|finite
//   # comment
// Odd labels and labels < 4 parse fine and are reported by validate();
// malformed lines and duplicate edges are fatal.
DiagramFile parse_diagram_file(const std::string& text);
CoxeterDiagram parse_diagram(const std::string& text);

struct ValidationReport {
  bool even = true;
  bool large_type = true;
  bool connected = true;
  bool nvb = true;
  std::vector<DiagramEdge> odd_label_edges;
  std::vector<DiagramEdge> small_label_edges;
  // First vertex of each connected component, when disconnected.
  std::vector<std::string> component_reps;
  // Vertices whose removal leaves three or more components.
  std::vector<std::string> branching_vertices;

  bool valid() const { return even && large_type && connected && nvb; }
};

ValidationReport validate(const CoxeterDiagram& d);

// Throws DomainError unless the diagram is even, large-type, connected, NVB.
void require_valid(const CoxeterDiagram& d, const std::string& who);

// Connected components of the subgraph on V minus `removed`. Each component
// is sorted; components are ordered by their first vertex.
std::vector<std::vector<Gen>> components_idx(const CoxeterDiagram& d,
                                             const std::vector<Gen>& removed);
std::vector<std::vector<std::string>> components(const CoxeterDiagram& d,
                                                 const std::vector<std::string>& removed);

std::vector<Gen> cut_vertices_idx(const CoxeterDiagram& d);
std::vector<std::string> cut_vertices(const CoxeterDiagram& d);

std::vector<CoxeterDiagram::IEdge> bridges_idx(const CoxeterDiagram& d);
std::vector<DiagramEdge> bridges(const CoxeterDiagram& d);

// Label-preserving vertex permutation; image[i] is the image of generator i.
struct DiagramAutomorphism {
  std::vector<Gen> image;

  Gen operator()(Gen g) const { return image[g]; }
  bool is_identity() const;

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
};

// All label-preserving permutations, identity first, then sorted by image
// vector. Found by backtracking.
std::vector<DiagramAutomorphism> diagram_automorphisms(const CoxeterDiagram& d);

DiagramAutomorphism compose(const DiagramAutomorphism& outer,
                            const DiagramAutomorphism& inner);
DiagramAutomorphism inverse_perm(const DiagramAutomorphism& p);
DiagramAutomorphism identity_perm(const CoxeterDiagram& d);

}  // namespace coxaut
