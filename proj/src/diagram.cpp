#include "coxaut/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coxaut {

CoxeterDiagram CoxeterDiagram::build(std::vector<std::string> vertices,
                                     std::vector<DiagramEdge> edges) {
  std::set<std::string> vset(vertices.begin(), vertices.end());
  for (auto& e : edges) {
    if (e.u == e.v) throw DomainError("self-loop at vertex " + e.u);
    if (e.u > e.v) std::swap(e.u, e.v);
    vset.insert(e.u);
    vset.insert(e.v);
  }

  CoxeterDiagram d;
  d.names_.assign(vset.begin(), vset.end());
  if (d.names_.size() > 120)
    throw DomainError("diagram too large (at most 120 vertices supported)");
  for (std::size_t i = 0; i < d.names_.size(); ++i)
    d.index_[d.names_[i]] = static_cast<Gen>(i);

  std::size_t n = d.names_.size();
  d.labels_.assign(n, std::vector<int>(n, 0));
  for (const auto& e : edges) {
    Gen a = d.index_[e.u], b = d.index_[e.v];
    if (d.labels_[a][b] != 0)
      throw DomainError("duplicate edge " + e.u + " " + e.v);
    d.labels_[a][b] = d.labels_[b][a] = e.label;
  }

  d.adj_.assign(n, {});
  for (Gen a = 0; a < n; ++a)
    for (Gen b = 0; b < n; ++b)
      if (d.labels_[a][b] != 0) d.adj_[a].push_back(b);
  for (Gen a = 0; a < n; ++a)
    for (Gen b = a + 1; b < n; ++b)
      if (d.labels_[a][b] != 0) d.iedges_.push_back({a, b, d.labels_[a][b]});
  return d;
}

Gen CoxeterDiagram::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("unknown vertex: " + name);
  return it->second;
}

std::vector<DiagramEdge> CoxeterDiagram::edges() const {
  std::vector<DiagramEdge> out;
  out.reserve(iedges_.size());
  for (const auto& e : iedges_) out.push_back({names_[e.a], names_[e.b], e.m});
  return out;
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<Gen>& verts) const {
  std::vector<std::string> vn;
  std::set<Gen> keep(verts.begin(), verts.end());
  for (Gen g : verts) vn.push_back(names_[g]);
  std::vector<DiagramEdge> es;
  for (const auto& e : iedges_)
    if (keep.count(e.a) && keep.count(e.b))
      es.push_back({names_[e.a], names_[e.b], e.m});
  return build(std::move(vn), std::move(es));
}

std::string CoxeterDiagram::serialize() const {
  std::ostringstream os;
  for (const auto& v : names_) os << "vertex " << v << "\n";
  for (const auto& e : iedges_)
    os << "edge " << names_[e.a] << " " << names_[e.b] << " " << e.m << "\n";
  return os.str();
}

Word CoxeterDiagram::word_from_names(const std::string& text) const {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1" && !has_vertex("1")) continue;  // "1" denotes the identity
    w.push_back(static_cast<char>(index_of(tok)));
  }
  return w;
}

std::string CoxeterDiagram::word_to_names(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names_.at(static_cast<Gen>(w[i]));
  }
  return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

DiagramFile parse_diagram_file(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<DiagramEdge> edges;
  std::vector<FactorDirective> factors;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    auto bad = [&](const std::string& why) {
      throw DomainError("line " + std::to_string(lineno) + ": " + why);
    };
    if (kw == "vertex") {
      if (toks.size() != 2) bad("expected: vertex <name>");
      vertices.push_back(toks[1]);
    } else if (kw == "edge") {
      if (toks.size() != 4) bad("expected: edge <u> <v> <label>");
      int m = 0;
      try {
        std::size_t pos = 0;
        m = std::stoi(toks[3], &pos);
        if (pos != toks[3].size()) bad("label is not an integer: " + toks[3]);
      } catch (const std::exception&) {
        bad("label is not an integer: " + toks[3]);
      }
      if (m < 1) bad("label must be positive");
      edges.push_back({toks[1], toks[2], m});
    } else if (kw == "factor") {
      if (toks.size() != 3) bad("expected: factor <index> strongly_rigid|finite");
      if (toks[2] != "strongly_rigid" && toks[2] != "finite")
        bad("unknown factor flag: " + toks[2]);
      std::size_t idx = 0;
      try {
        idx = std::stoul(toks[1]);
      } catch (const std::exception&) {
        bad("factor index is not an integer: " + toks[1]);
      }
      if (idx == 0) bad("factor indices are 1-based");
      factors.push_back({idx, toks[2]});
    } else {
      bad("unknown directive: " + kw);
    }
  }
  return {CoxeterDiagram::build(std::move(vertices), std::move(edges)),
          std::move(factors)};
}

CoxeterDiagram parse_diagram(const std::string& text) {
  return parse_diagram_file(text).diagram;
}

std::vector<std::vector<Gen>> components_idx(const CoxeterDiagram& d,
                                             const std::vector<Gen>& removed) {
  std::size_t n = d.rank();
  std::vector<bool> gone(n, false), seen(n, false);
  for (Gen g : removed) gone[g] = true;

  std::vector<std::vector<Gen>> comps;
  for (Gen s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    std::vector<Gen> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Gen v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Gen u : d.neighbors(v))
        if (!gone[u] && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<std::vector<std::string>> components(const CoxeterDiagram& d,
                                                 const std::vector<std::string>& removed) {
  std::vector<Gen> rm;
  for (const auto& name : removed) rm.push_back(d.index_of(name));
  std::vector<std::vector<std::string>> out;
  for (const auto& comp : components_idx(d, rm)) {
    std::vector<std::string> c;
    for (Gen g : comp) c.push_back(d.name_of(g));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Gen> cut_vertices_idx(const CoxeterDiagram& d) {
  std::vector<Gen> out;
  std::size_t base = components_idx(d, {}).size();
  for (Gen v = 0; v < d.rank(); ++v)
    if (components_idx(d, {v}).size() > base) out.push_back(v);
  return out;
}

std::vector<std::string> cut_vertices(const CoxeterDiagram& d) {
  std::vector<std::string> out;
  for (Gen v : cut_vertices_idx(d)) out.push_back(d.name_of(v));
  return out;
}

namespace {

// Components when one edge (not vertex) is removed.
std::size_t component_count_without_edge(const CoxeterDiagram& d, Gen a, Gen b) {
  std::size_t n = d.rank();
  std::vector<bool> seen(n, false);
  std::size_t comps = 0;
  for (Gen s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<Gen> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Gen v = stack.back();
      stack.pop_back();
      for (Gen u : d.neighbors(v)) {
        if ((v == a && u == b) || (v == b && u == a)) continue;
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return comps;
}

}  // namespace

std::vector<CoxeterDiagram::IEdge> bridges_idx(const CoxeterDiagram& d) {
  std::vector<CoxeterDiagram::IEdge> out;
  std::size_t base = components_idx(d, {}).size();
  for (const auto& e : d.iedges())
    if (component_count_without_edge(d, e.a, e.b) > base) out.push_back(e);
  return out;
}

std::vector<DiagramEdge> bridges(const CoxeterDiagram& d) {
  std::vector<DiagramEdge> out;
  for (const auto& e : bridges_idx(d))
    out.push_back({d.name_of(e.a), d.name_of(e.b), e.m});
  return out;
}

ValidationReport validate(const CoxeterDiagram& d) {
  ValidationReport r;
  for (const auto& e : d.edges()) {
    if (e.label % 2 != 0) {
      r.even = false;
      r.odd_label_edges.push_back(e);
    }
    if (e.label < 4) {
      r.large_type = false;
      r.small_label_edges.push_back(e);
    }
  }
  auto comps = components_idx(d, {});
  if (comps.size() > 1) {
    r.connected = false;
    for (const auto& c : comps) r.component_reps.push_back(d.name_of(c.front()));
  }
  for (Gen v = 0; v < d.rank(); ++v) {
    if (components_idx(d, {v}).size() >= comps.size() + 2) {
      r.nvb = false;
      r.branching_vertices.push_back(d.name_of(v));
    }
  }
  return r;
}

void require_valid(const CoxeterDiagram& d, const std::string& who) {
  auto r = validate(d);
  if (!r.valid()) {
    std::string why;
    if (!r.even) why += " not-even";
    if (!r.large_type) why += " not-large-type";
    if (!r.connected) why += " disconnected";
    if (!r.nvb) why += " vertex-branching";
    throw DomainError(who + ": diagram fails validation:" + why);
  }
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

namespace {

void search_automorphisms(const CoxeterDiagram& d, std::vector<Gen>& img,
                          std::vector<bool>& used, std::size_t pos,
                          std::vector<DiagramAutomorphism>& out) {
  std::size_t n = d.rank();
  if (pos == n) {
    out.push_back({img});
    return;
  }
  for (Gen cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (d.degree(static_cast<Gen>(pos)) != d.degree(cand)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < pos && ok; ++j)
      if (d.label(static_cast<Gen>(pos), static_cast<Gen>(j)) !=
          d.label(cand, img[j]))
        ok = false;
    if (!ok) continue;
    img[pos] = cand;
    used[cand] = true;
    search_automorphisms(d, img, used, pos + 1, out);
    used[cand] = false;
  }
}

}  // namespace

std::vector<DiagramAutomorphism> diagram_automorphisms(const CoxeterDiagram& d) {
  std::vector<Gen> img(d.rank(), 0);
  std::vector<bool> used(d.rank(), false);
  std::vector<DiagramAutomorphism> out;
  search_automorphisms(d, img, used, 0, out);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.image < b.image; });
  return out;  // identity has the lexicographically least image vector
}

DiagramAutomorphism compose(const DiagramAutomorphism& outer,
                            const DiagramAutomorphism& inner) {
  std::vector<Gen> img(inner.image.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = outer.image[inner.image[i]];
  return {img};
}

DiagramAutomorphism inverse_perm(const DiagramAutomorphism& p) {
  std::vector<Gen> img(p.image.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[p.image[i]] = static_cast<Gen>(i);
  return {img};
}

DiagramAutomorphism identity_perm(const CoxeterDiagram& d) {
  std::vector<Gen> img(d.rank());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Gen>(i);
  return {img};
}

}  // namespace coxaut
