#include "coxaut/structure.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>

namespace coxaut {

Word centralizer_factor(const CoxeterDiagram& d, Gen t, Gen s) {
  int m = d.label(t, s);
  if (m == 0) throw DomainError("centralizer factor needs adjacent vertices");
  Word w;
  for (int i = 0; i < m / 2 - 1; ++i) {
    w.push_back(static_cast<char>(t));
    w.push_back(static_cast<char>(s));
  }
  w.push_back(static_cast<char>(t));
  return w;
}

std::vector<Word> centralizer_generators(const CoxeterDiagram& d,
                                         const std::vector<Gen>& J) {
  for (Gen g : J)
    if (g >= d.rank()) throw DomainError("centralizer: vertex out of range");

  std::vector<Word> out;
  if (J.size() == 1) {
    Gen s = J[0];
    out.push_back(Word(1, static_cast<char>(s)));
    for (Gen t : d.neighbors(s)) out.push_back(centralizer_factor(d, t, s));
    return out;
  }
  if (J.size() == 2 && d.adjacent(J[0], J[1])) {
    Gen a = std::min(J[0], J[1]), b = std::max(J[0], J[1]);
    int m = d.label(a, b);
    Word w;
    for (int i = 0; i < m / 2; ++i) {
      w.push_back(static_cast<char>(a));
      w.push_back(static_cast<char>(b));
    }
    out.push_back(w);
    return out;
  }
  return out;  // trivial centralizer
}

std::vector<Word> centralizer_generators(const CoxeterDiagram& d,
                                         const std::vector<std::string>& J) {
  std::vector<Gen> idx;
  for (const auto& name : J) idx.push_back(d.index_of(name));
  return centralizer_generators(d, idx);
}

bool is_junction_set(const CoxeterDiagram& d, const std::vector<Gen>& J) {
  std::size_t base = components_idx(d, {}).size();
  if (J.size() == 1) return components_idx(d, J).size() > base;
  if (J.size() == 2 && d.adjacent(J[0], J[1]))
    return components_idx(d, J).size() > base;
  return false;
}

std::vector<Junction> junctions(const CoxeterDiagram& d) {
  require_valid(d, "junctions");
  std::vector<Junction> out;
  for (Gen s : cut_vertices_idx(d))
    out.push_back({Junction::Kind::vertex, {s}, components_idx(d, {s})});
  for (const auto& e : d.iedges()) {
    std::vector<Gen> J{e.a, e.b};
    auto comps = components_idx(d, J);
    if (comps.size() > 1)
      out.push_back({Junction::Kind::edge_pair, J, std::move(comps)});
  }
  return out;
}

namespace {

void extend_circuit(const CoxeterDiagram& d, std::vector<Gen>& path,
                    std::vector<bool>& inpath,
                    std::vector<std::vector<Gen>>& out) {
  Gen s = path[0];
  Gen last = path.back();
  for (Gen u : d.neighbors(last)) {
    if (u <= s || inpath[u]) continue;
    // A chord to any interior vertex rules u out entirely.
    bool chord = false;
    for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
      if (d.adjacent(u, path[i])) chord = true;
    if (chord) continue;

    // At the second position the adjacency to s is the path edge itself;
    // later it closes the cycle, and extending past would leave a chord.
    if (path.size() >= 2 && d.adjacent(u, s)) {
      if (path[1] < u) {
        auto cyc = path;
        cyc.push_back(u);
        out.push_back(std::move(cyc));
      }
      continue;
    }
    path.push_back(u);
    inpath[u] = true;
    extend_circuit(d, path, inpath, out);
    inpath[u] = false;
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Gen>> regular_circuits(const CoxeterDiagram& d) {
  std::vector<std::vector<Gen>> out;
  std::vector<bool> inpath(d.rank(), false);
  for (Gen s = 0; s < d.rank(); ++s) {
    std::vector<Gen> path{s};
    inpath[s] = true;
    extend_circuit(d, path, inpath, out);
    inpath[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Gen> sorted_intersection(const std::vector<Gen>& a,
                                     const std::vector<Gen>& b) {
  std::vector<Gen> sa = a, sb = b, out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(out));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<Unit> units_from_circuits(const CoxeterDiagram& d,
                                      const std::vector<std::vector<Gen>>& circuits) {
  UnionFind uf(circuits.size());
  for (std::size_t i = 0; i < circuits.size(); ++i)
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      auto both = sorted_intersection(circuits[i], circuits[j]);
      if (!both.empty() && !is_junction_set(d, both))
        uf.unite(static_cast<int>(i), static_cast<int>(j));
    }

  std::map<int, std::set<Gen>> classes;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    auto& verts = classes[uf.find(static_cast<int>(i))];
    verts.insert(circuits[i].begin(), circuits[i].end());
  }

  std::set<std::vector<Gen>> sets;
  std::vector<bool> on_circuit(d.rank(), false);
  for (const auto& [root, verts] : classes) {
    sets.insert(std::vector<Gen>(verts.begin(), verts.end()));
    for (Gen g : verts) on_circuit[g] = true;
  }
  for (Gen g = 0; g < d.rank(); ++g)
    if (!on_circuit[g]) sets.insert({g});

  std::vector<Unit> out;
  for (auto& s : sets) out.push_back({s});
  return out;
}

std::vector<Unit> units(const CoxeterDiagram& d) {
  require_valid(d, "units");
  return units_from_circuits(d, regular_circuits(d));
}

namespace {

// Index of the component of V minus J containing all of `verts`.
int side_of(const std::vector<std::vector<Gen>>& comps,
            const std::vector<Gen>& verts) {
  int side = -1;
  for (Gen v : verts) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (std::binary_search(comps[c].begin(), comps[c].end(), v)) {
        if (side == -1) side = static_cast<int>(c);
        if (side != static_cast<int>(c)) return -2;  // straddles components
        break;
      }
    }
  }
  return side;
}

std::vector<Gen> difference(const std::vector<Gen>& a, const std::vector<Gen>& b) {
  std::vector<Gen> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

int case_type(const UnitGraph& g, const UnitGraphEdge& e, bool a_is_initial) {
  const Unit& ui = g.units[a_is_initial ? e.a : e.b];
  const Unit& uj = g.units[a_is_initial ? e.b : e.a];
  switch (e.witness) {
    case UnitGraphEdge::Witness::junction_pair:
      return 1;
    case UnitGraphEdge::Witness::junction_vertex:
      return 2;
    case UnitGraphEdge::Witness::bridge:
      if (!ui.singleton() && !uj.singleton()) return 3;
      if (!ui.singleton() && uj.singleton()) return 4;
      if (ui.singleton() && !uj.singleton()) return 5;
      return 6;
  }
  return 0;
}

UnitGraph unit_graph(const CoxeterDiagram& d, std::vector<Unit> in_units) {
  UnitGraph g;
  g.units = std::move(in_units);

  std::set<std::pair<Gen, Gen>> bridge_set;
  for (const auto& e : bridges_idx(d)) bridge_set.insert({e.a, e.b});

  for (std::size_t a = 0; a < g.units.size(); ++a) {
    for (std::size_t b = a + 1; b < g.units.size(); ++b) {
      const auto& A = g.units[a].verts;
      const auto& B = g.units[b].verts;
      auto J = sorted_intersection(A, B);

      if (!J.empty()) {
        if (!is_junction_set(d, J)) continue;
        auto comps = components_idx(d, J);
        int sa = side_of(comps, difference(A, J));
        int sb = side_of(comps, difference(B, J));
        if (sa < 0 || sb < 0 || sa == sb) continue;
        UnitGraphEdge e;
        e.a = static_cast<int>(a);
        e.b = static_cast<int>(b);
        e.witness = J.size() == 2 ? UnitGraphEdge::Witness::junction_pair
                                  : UnitGraphEdge::Witness::junction_vertex;
        e.junction = J;
        if (J.size() == 2) e.n = d.label(J[0], J[1]);
        e.type = case_type(g, e, true);
        g.edges.push_back(std::move(e));
      } else {
        // Bridge adjacency: a unique connecting edge that disconnects V.
        std::vector<std::pair<Gen, Gen>> cross;
        for (Gen x : A)
          for (Gen y : B)
            if (d.adjacent(x, y)) cross.push_back({x, y});
        if (cross.size() != 1) continue;
        auto [x, y] = cross[0];
        if (!bridge_set.count({std::min(x, y), std::max(x, y)})) continue;
        UnitGraphEdge e;
        e.a = static_cast<int>(a);
        e.b = static_cast<int>(b);
        e.witness = UnitGraphEdge::Witness::bridge;
        e.sa = x;
        e.sb = y;
        e.n = d.label(x, y);
        e.type = case_type(g, e, true);
        g.edges.push_back(std::move(e));
      }
    }
  }
  return g;
}

namespace {

// Units containing s whose body lies in the given component of V minus {s}.
std::vector<int> units_on_side(const UnitGraph& g, Gen s,
                               const std::vector<Gen>& comp) {
  std::vector<int> out;
  for (std::size_t u = 0; u < g.units.size(); ++u) {
    const auto& verts = g.units[u].verts;
    if (!std::binary_search(verts.begin(), verts.end(), s)) continue;
    if (verts.size() == 1) continue;
    bool inside = false;
    for (Gen v : verts)
      if (v != s && std::binary_search(comp.begin(), comp.end(), v)) {
        inside = true;
        break;
      }
    if (inside) out.push_back(static_cast<int>(u));
  }
  return out;
}

struct TreeState {
  std::set<int> edges;  // indices into graph.edges

  bool connected_without(const UnitGraph& g, int dropped, int from, int to) const {
    std::vector<std::vector<int>> adj(g.units.size());
    for (int ei : edges) {
      if (ei == dropped) continue;
      adj[g.edges[ei].a].push_back(g.edges[ei].b);
      adj[g.edges[ei].b].push_back(g.edges[ei].a);
    }
    std::vector<bool> seen(g.units.size(), false);
    std::deque<int> q{from};
    seen[from] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (v == to) return true;
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          q.push_back(u);
        }
    }
    return false;
  }
};

}  // namespace

OrientedTree modified_spanning_tree(const CoxeterDiagram& d, const UnitGraph& g) {
  std::size_t nu = g.units.size();

  // Initial spanning tree: scan edges in their sorted order.
  TreeState tree;
  {
    UnionFind uf(nu);
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
      if (uf.unite(g.edges[ei].a, g.edges[ei].b)) tree.edges.insert(static_cast<int>(ei));
    int root = uf.find(0);
    for (std::size_t u = 0; u < nu; ++u)
      if (uf.find(static_cast<int>(u)) != root)
        throw DomainError("unit graph is not connected");
  }

  // One-crossing normalization per single-vertex junction.
  for (Gen s = 0; s < d.rank(); ++s) {
    if (!is_junction_set(d, {s})) continue;
    auto comps = components_idx(d, {s});
    if (comps.size() != 2) continue;
    auto side1 = units_on_side(g, s, comps[0]);
    auto side2 = units_on_side(g, s, comps[1]);
    if (side1.empty() || side2.empty()) continue;

    auto crossings = [&]() {
      std::vector<int> out;
      for (int ei : tree.edges) {
        const auto& e = g.edges[ei];
        if (e.witness == UnitGraphEdge::Witness::junction_vertex &&
            e.junction.size() == 1 && e.junction[0] == s)
          out.push_back(ei);
      }
      return out;
    };

    auto cross = crossings();
    while (cross.size() > 1) {
      int keep = cross.front();  // edges are index-sorted, so this is lex-least
      int drop = cross.back();
      tree.edges.erase(drop);

      // Reconnect within one side: same-side units containing s form a
      // connected subgraph via pair junctions through s.
      const auto& dropped = g.edges[drop];
      const auto& kept = g.edges[keep];
      for (int side_pick : {0, 1}) {
        const auto& comp = comps[side_pick];
        auto side_units = units_on_side(g, s, comp);
        auto on_side = [&](int u) {
          return std::find(side_units.begin(), side_units.end(), u) != side_units.end();
        };
        int from = on_side(dropped.a) ? dropped.a : dropped.b;
        int to = on_side(kept.a) ? kept.a : kept.b;
        if (tree.connected_without(g, -1, from, to)) continue;

        // BFS from `from` to `to` inside the side subgraph.
        std::vector<int> prev_edge(nu, -1), prev_unit(nu, -1);
        std::deque<int> q{from};
        std::vector<bool> seen(nu, false);
        seen[from] = true;
        while (!q.empty()) {
          int v = q.front();
          q.pop_front();
          if (v == to) break;
          for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
            const auto& e = g.edges[ei];
            if (e.witness != UnitGraphEdge::Witness::junction_pair) continue;
            if (std::find(e.junction.begin(), e.junction.end(), s) == e.junction.end())
              continue;
            int other = -1;
            if (e.a == v && on_side(e.b)) other = e.b;
            if (e.b == v && on_side(e.a)) other = e.a;
            if (other < 0 || seen[other]) continue;
            seen[other] = true;
            prev_edge[other] = static_cast<int>(ei);
            prev_unit[other] = v;
            q.push_back(other);
          }
        }
        if (!seen[to])
          throw DomainError("tree normalization: side subgraph not connected");
        // Add path edges that join distinct tree components.
        for (int v = to; v != from; v = prev_unit[v]) {
          int ei = prev_edge[v];
          if (!tree.edges.count(ei) &&
              !tree.connected_without(g, -1, g.edges[ei].a, g.edges[ei].b))
            tree.edges.insert(ei);
        }
      }
      cross = crossings();
    }
  }

  // Basepoint: lex-least unit that is not a singleton of a degree-1 vertex.
  int basepoint = -1;
  for (std::size_t u = 0; u < nu; ++u) {
    const auto& unit = g.units[u];
    if (unit.singleton() && d.degree(unit.verts[0]) == 1) continue;
    basepoint = static_cast<int>(u);
    break;
  }
  if (basepoint < 0)
    throw DomainError(
        "no valid basepoint: every unit is a degree-1 singleton (single-edge "
        "diagram)");

  // Orient away from the basepoint and attach label context.
  OrientedTree t;
  t.basepoint = basepoint;
  t.parent_edge.assign(nu, -1);
  t.children.assign(nu, {});
  t.depth.assign(nu, 0);

  std::vector<bool> seen(nu, false);
  seen[basepoint] = true;
  std::deque<int> q{basepoint};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int ei : tree.edges) {
      const auto& e = g.edges[ei];
      int other = -1;
      bool a_is_initial = false;
      if (e.a == u) {
        other = e.b;
        a_is_initial = true;
      } else if (e.b == u) {
        other = e.a;
      }
      if (other < 0 || seen[other]) continue;
      seen[other] = true;

      TreeEdge te;
      te.initial = u;
      te.terminal = other;
      te.graph_edge = ei;
      te.type = case_type(g, e, a_is_initial);

      const auto& init_unit = g.units[u].verts;
      const auto& term_unit = g.units[other].verts;

      if (e.witness != UnitGraphEdge::Witness::bridge) {
        te.junction = e.junction;
        te.n = e.n;
        if (te.type == 2) {
          Gen s = e.junction[0];
          auto comps = components_idx(d, {s});
          int side_i = side_of(comps, difference(init_unit, {s}));
          int side_j = side_of(comps, difference(term_unit, {s}));
          assert(side_i >= 0 && side_j >= 0 && side_i != side_j);
          for (Gen nb : d.neighbors(s)) {
            const auto& ci = comps[side_i];
            const auto& cj = comps[side_j];
            if (std::binary_search(ci.begin(), ci.end(), nb)) te.u_ids.push_back(nb);
            if (std::binary_search(cj.begin(), cj.end(), nb)) te.v_ids.push_back(nb);
          }
        }
      } else {
        te.si = a_is_initial ? e.sa : e.sb;
        te.sj = a_is_initial ? e.sb : e.sa;
        te.n = e.n;
        te.deg_si = d.degree(te.si);
        te.deg_sj = d.degree(te.sj);
        if (te.type == 3 || te.type == 4) {
          auto comps = components_idx(d, {te.si});
          int side = side_of(comps, difference(init_unit, {te.si}));
          assert(side >= 0);
          const auto& c = comps[side];
          for (Gen nb : d.neighbors(te.si))
            if (std::binary_search(c.begin(), c.end(), nb)) te.u_ids.push_back(nb);
        }
        if (te.type == 3 || te.type == 5) {
          auto comps = components_idx(d, {te.sj});
          int side = side_of(comps, difference(term_unit, {te.sj}));
          assert(side >= 0);
          const auto& c = comps[side];
          for (Gen nb : d.neighbors(te.sj))
            if (std::binary_search(c.begin(), c.end(), nb)) te.v_ids.push_back(nb);
        }
      }

      int edge_index = static_cast<int>(t.edges.size());
      t.edges.push_back(std::move(te));
      t.parent_edge[other] = edge_index;
      t.children[u].push_back(edge_index);
      t.depth[other] = t.depth[u] + 1;
      q.push_back(other);
    }
  }

  for (std::size_t u = 0; u < nu; ++u)
    if (!seen[u]) throw DomainError("spanning tree failed to reach every unit");
  return t;
}

StructurePtr analyze_structure(const CoxeterDiagram& d) {
  if (d.rank() == 0) throw DomainError("analyze: empty diagram");
  require_valid(d, "analyze");
  auto data = std::make_shared<StructureData>();
  data->diagram = d;
  data->circuits = regular_circuits(d);
  data->junctions = junctions(d);
  data->graph = unit_graph(d, units_from_circuits(d, data->circuits));
  data->tree = modified_spanning_tree(d, data->graph);

  data->unit_of_vertex.assign(d.rank(), -1);
  for (std::size_t u = 0; u < data->graph.units.size(); ++u)
    for (Gen v : data->graph.units[u].verts)
      if (data->unit_of_vertex[v] < 0) data->unit_of_vertex[v] = static_cast<int>(u);
  return data;
}

}  // namespace coxaut
