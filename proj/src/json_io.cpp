#include "coxaut/json_io.hpp"

#include <algorithm>

namespace coxaut {

namespace {

Json names_json(const CoxeterDiagram& d, const std::vector<Gen>& verts) {
  Json out = Json::array();
  for (Gen v : verts) out.push_back(d.name_of(v));
  return out;
}

}  // namespace

Json word_json(const CoxeterDiagram& d, const Word& w) {
  return d.word_to_names(w);
}

Json validation_json(const CoxeterDiagram& d, const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid();
  j["even"] = r.even;
  j["large_type"] = r.large_type;
  j["connected"] = r.connected;
  j["nvb"] = r.nvb;
  Json w;
  w["odd_label_edges"] = Json::array();
  for (const auto& e : r.odd_label_edges)
    w["odd_label_edges"].push_back({e.u, e.v, e.label});
  w["small_label_edges"] = Json::array();
  for (const auto& e : r.small_label_edges)
    w["small_label_edges"].push_back({e.u, e.v, e.label});
  w["component_reps"] = r.component_reps;
  w["branching_vertices"] = r.branching_vertices;
  j["witnesses"] = std::move(w);
  j["vertices"] = d.names();
  return j;
}

Json structure_json(const StructureData& s) {
  const auto& d = s.diagram;
  Json j;

  j["units"] = Json::array();
  for (const auto& u : s.graph.units) j["units"].push_back(names_json(d, u.verts));

  j["junctions"] = Json::array();
  for (const auto& x : s.junctions) {
    Json jj;
    jj["kind"] = x.kind == Junction::Kind::vertex ? "vertex" : "edge_pair";
    jj["vertices"] = names_json(d, x.verts);
    jj["sides"] = Json::array();
    for (const auto& side : x.sides) jj["sides"].push_back(names_json(d, side));
    j["junctions"].push_back(std::move(jj));
  }

  j["circuits"] = Json::array();
  for (const auto& c : s.circuits) j["circuits"].push_back(names_json(d, c));

  Json edges = Json::array();
  for (const auto& e : s.graph.edges) {
    Json je;
    je["units"] = {e.a, e.b};
    switch (e.witness) {
      case UnitGraphEdge::Witness::junction_pair:
      case UnitGraphEdge::Witness::junction_vertex:
        je["witness"] = "junction";
        je["junction"] = names_json(d, e.junction);
        break;
      case UnitGraphEdge::Witness::bridge:
        je["witness"] = "bridge";
        je["bridge"] = {d.name_of(e.sa), d.name_of(e.sb), e.n};
        break;
    }
    je["type"] = e.type;
    edges.push_back(std::move(je));
  }
  j["unit_graph"] = {{"edges", std::move(edges)}};

  Json t;
  t["basepoint"] = s.tree.basepoint;
  t["edges"] = Json::array();
  for (const auto& e : s.tree.edges) {
    Json je;
    je["initial"] = e.initial;
    je["terminal"] = e.terminal;
    je["type"] = e.type;
    if (!e.junction.empty()) je["junction"] = names_json(d, e.junction);
    if (e.type >= 3) {
      je["bridge"] = {d.name_of(e.si), d.name_of(e.sj)};
      je["n"] = e.n;
    } else if (e.type == 1) {
      je["n"] = e.n;
    }
    if (!e.u_ids.empty()) je["u_ids"] = names_json(d, e.u_ids);
    if (!e.v_ids.empty()) je["v_ids"] = names_json(d, e.v_ids);
    t["edges"].push_back(std::move(je));
  }
  j["tree"] = std::move(t);
  return j;
}

Json out_report_json(const OutReport& r) {
  Json j;
  j["finite"] = r.finite;
  if (r.witness) j["witness"] = *r.witness;
  if (r.finite) {
    j["order"] = r.order;
    j["labeling_count"] = r.labeling_count;
  }
  j["diag_order"] = r.diag_order;
  j["factorization"] = Json::array();
  for (const auto& f : r.factorization) {
    Json jf;
    jf["edge"] = f.edge;
    jf["type"] = f.type;
    if (f.space.finite)
      jf["count"] = f.space.count;
    else
      jf["count"] = "infinite";
    j["factorization"].push_back(std::move(jf));
  }
  if (!r.structure.empty()) j["structure"] = r.structure;
  if (r.is_path) {
    Json p;
    p["delta"] = r.delta;
    p["value"] = r.path_formula_value;
    p["agrees"] = r.path_formula_agrees;
    j["path_formula"] = std::move(p);
  }
  if (r.paper_2k_value) j["paper_2k_value"] = *r.paper_2k_value;
  if (!r.f_generators.empty()) {
    Json fg = Json::array();
    for (const auto& g : r.f_generators)
      fg.push_back({{"edge", g.edge}, {"factors", g.factors}});
    j["f_generators"] = std::move(fg);
    j["f_structure"] = r.f_structure;
  }
  j["discrepancies"] = r.discrepancies;
  return j;
}

Json decomposition_json(const FreeDecomposition& dec) {
  Json j;
  j["factor_count"] = dec.factors.size();
  j["factors"] = Json::array();
  for (const auto& f : dec.factors) {
    Json jf;
    jf["vertices"] = names_json(dec.full, f.vertices);
    jf["edges"] = Json::array();
    for (const auto& e : f.diagram.edges()) jf["edges"].push_back({e.u, e.v, e.label});
    auto fin = factor_finite(f);
    jf["finite"] = fin ? Json(*fin) : Json(nullptr);
    jf["strongly_rigid"] =
        f.strongly_rigid ? Json(*f.strongly_rigid) : Json(nullptr);
    j["factors"].push_back(std::move(jf));
  }
  return j;
}

Json triple_json(const FreeDecomposition& dec, const TripleAut& t) {
  Json j;
  j["w"] = dec.full.word_to_names(t.w);
  j["u1"] = dec.full.word_to_names(t.u1);
  j["u2"] = dec.full.word_to_names(t.u2);
  return j;
}

TripleAut parse_triple(const FreeDecomposition& dec, const Json& j) {
  TripleAut t;
  if (j.contains("w")) t.w = dec.full.word_from_names(j["w"].get<std::string>());
  if (j.contains("u1")) t.u1 = dec.full.word_from_names(j["u1"].get<std::string>());
  if (j.contains("u2")) t.u2 = dec.full.word_from_names(j["u2"].get<std::string>());
  validate_triple(dec, t);
  return t;
}

Json labeling_json(const AutLabeling& a) {
  return labeling_json(a, identity_perm(a.s->diagram));
}

Json labeling_json(const AutLabeling& a, const DiagramAutomorphism& perm) {
  const auto& d = a.s->diagram;
  const auto& tree = a.s->tree;
  Json j;
  j["base"] = d.word_to_names(a.base);
  if (!perm.is_identity()) {
    Json p;
    for (Gen g = 0; g < d.rank(); ++g) p[d.name_of(g)] = d.name_of(perm(g));
    j["pi"] = std::move(p);
  }
  j["labels"] = Json::array();
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const auto& lab = a.labels[i];
    if (lab.identity()) continue;
    Json je;
    je["edge"] = {tree.edges[i].initial, tree.edges[i].terminal};
    je["type"] = tree.edges[i].type;
    if (lab.eps) je["epsilon"] = 1;
    if (!lab.u.empty()) je["u"] = names_json(d, lab.u);
    if (!lab.v.empty()) je["v"] = names_json(d, lab.v);
    if (!lab.x.identity()) je["x"] = {{"l", lab.x.l}, {"k", lab.x.k}};
    j["labels"].push_back(std::move(je));
  }
  return j;
}

AutLabeling parse_labeling(StructurePtr s, const Json& j, DiagramAutomorphism* perm) {
  const auto& d = s->diagram;
  const auto& tree = s->tree;
  AutLabeling a = identity_labeling(s);

  if (perm) {
    *perm = identity_perm(d);
    if (j.contains("pi")) {
      std::vector<Gen> img(d.rank());
      std::vector<bool> hit(d.rank(), false);
      for (auto it = j["pi"].
           begin(); it != j["pi"].end(); ++it) {
        Gen from = d.index_of(it.key());
        Gen to = d.index_of(it.value().get<std::string>());
        img[from] = to;
        hit[from] = true;
      }
      for (Gen g = 0; g < d.rank(); ++g)
        if (!hit[g]) throw DomainError("pi must map every generator");
      *perm = DiagramAutomorphism{img};
      auto auts = diagram_automorphisms(d);
      if (std::find(auts.begin(), auts.end(), *perm) == auts.end())
        throw DomainError("pi is not a diagram automorphism");
    }
  }

  if (j.contains("base")) a.base = d.word_from_names(j["base"].get<std::string>());

  if (j.contains("labels")) {
    for (const auto& je : j["labels"]) {
      if (!je.contains("edge")) throw DomainError("label record without edge");
      int from = je["edge"][0].get<int>();
      int to = je["edge"][1].get<int>();
      int idx = -1;
      for (std::size_t i = 0; i < tree.edges.size(); ++i)
        if (tree.edges[i].initial == from && tree.edges[i].terminal == to)
          idx = static_cast<int>(i);
      if (idx < 0)
        throw DomainError("no tree edge [" + std::to_string(from) + " " +
                          std::to_string(to) + "]");
      EdgeLabel& lab = a.labels[idx];
      if (je.contains("epsilon")) lab.eps = je["epsilon"].get<int>();
      if (je.contains("u"))
        for (const auto& t : je["u"]) lab.u.push_back(d.index_of(t.get<std::string>()));
      if (je.contains("v"))
        for (const auto& t : je["v"]) lab.v.push_back(d.index_of(t.get<std::string>()));
      if (je.contains("x")) lab.x = {je["x"]["l"].get<int>(), je["x"]["k"].get<int>()};
    }
  }
  validate_labeling(a);
  return a;
}

}  // namespace coxaut
