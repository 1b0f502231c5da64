#pragma once

#include <string>

#include "coxaut/diagram.hpp"

namespace coxaut::fixtures {

inline CoxeterDiagram triangle(int m = 4) {
  auto s = std::to_string(m);
  return parse_diagram("edge a b " + s + "\nedge b c " + s + "\nedge c a " + s);
}

// Labels given left to right along the path a-b-c-...
inline CoxeterDiagram path(std::vector<int> labels) {
  std::string names = "abcdefgh";
  std::string text;
  for (std::size_t i = 0; i < labels.size(); ++i)
    text += "edge " + std::string(1, names[i]) + " " + std::string(1, names[i + 1]) +
            " " + std::to_string(labels[i]) + "\n";
  return parse_diagram(text);
}

// Two triangles abc, bcd sharing the edge [bc]; one edge-pair junction.
inline CoxeterDiagram two_triangles() {
  return parse_diagram(
      "edge a b 4\nedge a c 4\nedge b c 4\nedge b d 4\nedge c d 4");
}

// Triangle abc with a pendant vertex d attached at a; cut vertex of degree 3.
inline CoxeterDiagram triangle_pendant() {
  return parse_diagram("edge a b 4\nedge a c 4\nedge b c 4\nedge a d 4");
}

// Two triangles sharing only the vertex s (single-vertex junction).
inline CoxeterDiagram bowtie() {
  return parse_diagram(
      "edge a s 4\nedge b s 4\nedge a b 4\nedge c s 4\nedge d s 4\nedge c d 4");
}

// Star: center x with three pendant vertices; violates NVB.
inline CoxeterDiagram star3() {
  return parse_diagram("edge x p1 4\nedge x p2 4\nedge x p3 4");
}

// Single edge labeled n (dihedral group); used for word-level identities.
inline CoxeterDiagram dihedral(int n) {
  return parse_diagram("edge s t " + std::to_string(n));
}

// Four triangles glued along the edges [s t] and [s u]; two units on each
// side of the cut vertex s, exercising the one-crossing tree modification.
inline CoxeterDiagram four_triangles() {
  return parse_diagram(
      "edge s t 4\nedge a s 4\nedge a t 4\nedge b s 4\nedge b t 4\n"
      "edge s u 4\nedge c s 4\nedge c u 4\nedge d s 4\nedge d u 4");
}

// Path m-n-a-p-q whose lexicographically least eligible basepoint {a} sits
// between two interior vertices; with the label 8 on [a p] this is the shape
// where carrying cannot terminate.
inline CoxeterDiagram awkward_path() {
  return parse_diagram("edge m n 4\nedge n a 4\nedge a p 8\nedge p q 4");
}

}  // namespace coxaut::fixtures
