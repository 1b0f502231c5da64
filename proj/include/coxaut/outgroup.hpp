#pragma once

#include <optional>
#include <string>

#include "coxaut/automorphism.hpp"
#include "coxaut/structure.hpp"

namespace coxaut {

// Size of one tree edge's label space; count is meaningful when finite.
struct SpaceSize {
  bool finite = true;
  long long count = 1;
};

struct EdgeFactor {
  int edge = 0;  // tree edge index
  int type = 0;
  SpaceSize space;
};

struct OutReport {
  bool finite = false;
  std::optional<std::string> witness;  // cut vertex of degree > 2 when infinite

  long long order = 0;  // diag_order times the label-space product
  long long labeling_count = 0;
  long long diag_order = 1;
  std::vector<EdgeFactor> factorization;
  std::string structure;

  // Path diagrams: the closed form delta * 2^(r-2) * prod phi(n_i).
  bool is_path = false;
  long long delta = 1;
  long long path_formula_value = 0;
  bool path_formula_agrees = true;

  // Diagrams without cut vertices: the reported 2^k |Diag| value, where k
  // counts units; its disagreement with the per-edge count is a known
  // discrepancy and is reported, not asserted.
  std::optional<long long> paper_2k_value;

  // Infinite case: the finite-index subgroup generated by one involution per
  // factor vertex, grouped per tree edge.
  struct FGenerators {
    int edge = 0;
    std::vector<std::string> factors;
  };
  std::vector<FGenerators> f_generators;
  std::string f_structure;

  std::vector<std::string> discrepancies;
};

long long euler_phi(int n);

// Out(W) is infinite exactly when some cut vertex of degree > 2 exists.
std::pair<bool, std::optional<Gen>> is_out_finite(const CoxeterDiagram& d);

SpaceSize label_space_size(const TreeEdge& e);

// Requires is_out_finite; fills order, factorization and the closed forms.
OutReport out_order(const StructureData& s);

// Works for both finite and infinite cases; extends out_order with the
// structure string and the finite-index generators.
OutReport structure_report(const StructureData& s);

}  // namespace coxaut
