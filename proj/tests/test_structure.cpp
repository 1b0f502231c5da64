#include <algorithm>
#include <random>

#include "coxaut/structure.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace coxaut;

namespace {

std::vector<Gen> idx(const CoxeterDiagram& d, const std::vector<std::string>& names) {
  std::vector<Gen> out;
  for (const auto& n : names) out.push_back(d.index_of(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Gen>> unit_sets(const std::vector<Unit>& us) {
  std::vector<std::vector<Gen>> out;
  for (const auto& u : us) out.push_back(u.verts);
  return out;
}

}  // namespace

TEST_CASE("centralizer generators match the two nontrivial cases") {
  auto tt = fixtures::two_triangles();
  auto pair_gens = centralizer_generators(tt, std::vector<std::string>{"b", "c"});
  REQUIRE(pair_gens.size() == 1);
  CHECK(tt.word_to_names(pair_gens[0]) == "b c b c");

  auto tri = fixtures::triangle();
  auto vert_gens = centralizer_generators(tri, std::vector<std::string>{"a"});
  REQUIRE(vert_gens.size() == 3);
  CHECK(tri.word_to_names(vert_gens[0]) == "a");
  CHECK(tri.word_to_names(vert_gens[1]) == "b a b");
  CHECK(tri.word_to_names(vert_gens[2]) == "c a c");

  // Any other subset has a trivial centralizer.
  auto sq = parse_diagram("edge a b 4\nedge b c 4\nedge c d 4\nedge d a 4");
  CHECK(centralizer_generators(sq, std::vector<std::string>{"a", "b", "c"}).empty());
  CHECK(centralizer_generators(sq, std::vector<std::string>{"a", "c"}).empty());
}

TEST_CASE("centralizer generators commute with J under the oracle") {
  for (const auto& d : {fixtures::triangle(), fixtures::two_triangles(),
                        fixtures::triangle_pendant(), fixtures::path({4, 6})}) {
    Oracle o(d);
    for (Gen s = 0; s < d.rank(); ++s)
      for (const Word& g : centralizer_generators(d, std::vector<Gen>{s}))
        CHECK(o.commute(g, Word(1, static_cast<char>(s))));
    for (const auto& e : d.iedges())
      for (const Word& g : centralizer_generators(d, std::vector<Gen>{e.a, e.b})) {
        CHECK(o.commute(g, Word(1, static_cast<char>(e.a))));
        CHECK(o.commute(g, Word(1, static_cast<char>(e.b))));
      }
  }
}

TEST_CASE("junction enumeration") {
  // The cut vertex a, plus the triangle edges [a b] and [a c] whose removal
  // strands the opposite corner and the pendant separately.
  auto tp = fixtures::triangle_pendant();
  auto js = junctions(tp);
  REQUIRE(js.size() == 3);
  CHECK(js[0].kind == Junction::Kind::vertex);
  CHECK(js[0].verts == idx(tp, {"a"}));
  REQUIRE(js[0].sides.size() == 2);
  CHECK(js[0].sides[0] == idx(tp, {"b", "c"}));
  CHECK(js[0].sides[1] == idx(tp, {"d"}));
  CHECK(js[1].kind == Junction::Kind::edge_pair);
  CHECK(js[1].verts == idx(tp, {"a", "b"}));
  CHECK(js[2].verts == idx(tp, {"a", "c"}));

  auto tt = fixtures::two_triangles();
  auto jt = junctions(tt);
  REQUIRE(jt.size() == 1);
  CHECK(jt[0].kind == Junction::Kind::edge_pair);
  CHECK(jt[0].verts == idx(tt, {"b", "c"}));
  CHECK(jt[0].sides[0] == idx(tt, {"a"}));
  CHECK(jt[0].sides[1] == idx(tt, {"d"}));

  CHECK(junctions(fixtures::triangle()).empty());
}

TEST_CASE("regular circuits are the chordless cycles") {
  CHECK(regular_circuits(fixtures::triangle()).size() == 1);
  CHECK(regular_circuits(fixtures::path({4, 6})).empty());

  auto tt = fixtures::two_triangles();
  auto cs = regular_circuits(tt);
  REQUIRE(cs.size() == 2);  // the 4-cycle a-b-d-c has chord [b c]
  std::vector<std::vector<Gen>> sets;
  for (auto c : cs) {
    std::sort(c.begin(), c.end());
    sets.push_back(c);
  }
  std::sort(sets.begin(), sets.end());
  CHECK(sets[0] == idx(tt, {"a", "b", "c"}));
  CHECK(sets[1] == idx(tt, {"b", "c", "d"}));

  // A chordless square is one circuit.
  auto sq = parse_diagram("edge a b 4\nedge b c 4\nedge c d 4\nedge d a 4");
  CHECK(regular_circuits(sq).size() == 1);
}

TEST_CASE("units: closures of circuits plus off-circuit singletons") {
  auto tt = fixtures::two_triangles();
  CHECK(unit_sets(units(tt)) ==
        std::vector<std::vector<Gen>>{idx(tt, {"a", "b", "c"}), idx(tt, {"b", "c", "d"})});

  auto tp = fixtures::triangle_pendant();
  CHECK(unit_sets(units(tp)) ==
        std::vector<std::vector<Gen>>{idx(tp, {"a", "b", "c"}), idx(tp, {"d"})});

  auto p = fixtures::path({4, 6});
  CHECK(unit_sets(units(p)) ==
        std::vector<std::vector<Gen>>{{p.index_of("a")}, {p.index_of("b")}, {p.index_of("c")}});
}

TEST_CASE("units cover the vertex set and merging is order-independent") {
  std::mt19937_64 rng(4242);
  for (const auto& d : {fixtures::two_triangles(), fixtures::triangle_pendant(),
                        fixtures::bowtie(), fixtures::four_triangles(),
                        fixtures::path({4, 4, 4})}) {
    auto reference = units(d);

    std::vector<bool> covered(d.rank(), false);
    for (const auto& u : reference)
      for (Gen v : u.verts) covered[v] = true;
    CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));

    auto circuits = regular_circuits(d);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(circuits.begin(), circuits.end(), rng);
      CHECK(unit_sets(units_from_circuits(d, circuits)) == unit_sets(reference));
    }
  }
}

TEST_CASE("unit graph adjacency and case types") {
  auto tt = fixtures::two_triangles();
  auto g = unit_graph(tt, units(tt));
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].witness == UnitGraphEdge::Witness::junction_pair);
  CHECK(g.edges[0].type == 1);

  auto tp = fixtures::triangle_pendant();
  auto gp = unit_graph(tp, units(tp));
  REQUIRE(gp.edges.size() == 1);
  CHECK(gp.edges[0].witness == UnitGraphEdge::Witness::bridge);
  CHECK(gp.edges[0].type == 4);

  auto p = fixtures::path({4, 6});
  auto gq = unit_graph(p, units(p));
  REQUIRE(gq.edges.size() == 2);
  CHECK(gq.edges[0].type == 6);
  CHECK(gq.edges[1].type == 6);
}

TEST_CASE("unit graph is connected for every corpus diagram") {
  for (const auto& d : {fixtures::triangle(), fixtures::two_triangles(),
                        fixtures::triangle_pendant(), fixtures::bowtie(),
                        fixtures::four_triangles(), fixtures::path({4, 6, 8})}) {
    auto s = analyze_structure(d);  // throws if the unit graph is disconnected
    CHECK(s->tree.edges.size() + 1 == s->graph.units.size());
  }
}

TEST_CASE("oriented tree basepoints and orientation") {
  auto p = fixtures::path({4, 6});
  auto sp = analyze_structure(p);
  CHECK(sp->unit(sp->tree.basepoint).verts == std::vector<Gen>{p.index_of("b")});
  REQUIRE(sp->tree.edges.size() == 2);
  for (const auto& e : sp->tree.edges) {
    CHECK(e.initial == sp->tree.basepoint);
    CHECK(e.type == 6);
  }

  auto tt = fixtures::two_triangles();
  auto st = analyze_structure(tt);
  CHECK(st->unit(st->tree.basepoint).verts == idx(tt, {"a", "b", "c"}));
  REQUIRE(st->tree.edges.size() == 1);
  CHECK(st->tree.edges[0].type == 1);

  auto tp = fixtures::triangle_pendant();
  auto stp = analyze_structure(tp);
  CHECK(stp->unit(stp->tree.basepoint).verts == idx(tp, {"a", "b", "c"}));
  REQUIRE(stp->tree.edges.size() == 1);
  CHECK(stp->tree.edges[0].type == 4);
  CHECK(stp->tree.edges[0].u_ids == idx(tp, {"b", "c"}));
}

TEST_CASE("single-edge diagram has no valid basepoint") {
  auto d = fixtures::dihedral(4);
  CHECK_THROWS_AS(analyze_structure(d), DomainError);
  CHECK_THROWS_AS(analyze_structure(parse_diagram("")), DomainError);
}

TEST_CASE("tree crosses each single-vertex junction exactly once") {
  for (const auto& d : {fixtures::bowtie(), fixtures::four_triangles(),
                        fixtures::triangle_pendant(), fixtures::path({4, 4, 4})}) {
    auto s = analyze_structure(d);
    // spanning and acyclic
    CHECK(s->tree.edges.size() + 1 == s->graph.units.size());

    for (Gen v = 0; v < d.rank(); ++v) {
      if (!is_junction_set(d, {v})) continue;
      auto comps = components_idx(d, {v});
      auto on_side = [&](const Unit& u, const std::vector<Gen>& comp) {
        if (u.singleton()) return false;
        if (!std::binary_search(u.verts.begin(), u.verts.end(), v)) return false;
        for (Gen x : u.verts)
          if (x != v && std::binary_search(comp.begin(), comp.end(), x)) return true;
        return false;
      };
      bool side1 = false, side2 = false;
      for (const auto& u : s->graph.units) {
        side1 |= on_side(u, comps[0]);
        side2 |= on_side(u, comps[1]);
      }
      if (!side1 || !side2) continue;

      int crossings = 0;
      for (const auto& e : s->tree.edges)
        if (e.type == 2 && e.junction == std::vector<Gen>{v}) ++crossings;
      CHECK(crossings == 1);
    }
  }
}

TEST_CASE("four-triangle diagram tree exercises the modification") {
  auto d = fixtures::four_triangles();
  auto s = analyze_structure(d);
  REQUIRE(s->graph.units.size() == 4);
  // Three tree edges: exactly one of type 2 crossing s, two of type 1.
  int t1 = 0, t2 = 0;
  for (const auto& e : s->tree.edges) {
    if (e.type == 1) ++t1;
    if (e.type == 2) ++t2;
  }
  CHECK(t1 == 2);
  CHECK(t2 == 1);
}

TEST_CASE("type 2 tree edges carry side-separated factor vertices") {
  auto d = fixtures::bowtie();
  auto s = analyze_structure(d);
  REQUIRE(s->tree.edges.size() == 1);
  const auto& e = s->tree.edges[0];
  CHECK(e.type == 2);
  CHECK(e.junction == idx(d, {"s"}));
  CHECK(e.u_ids == idx(d, {"a", "b"}));
  CHECK(e.v_ids == idx(d, {"c", "d"}));
}
