#include "coxaut/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "coxaut/json_io.hpp"

namespace coxaut {

namespace {

struct Options {
  std::string input;
  std::string aut_file;
  std::string aut2_file;
  std::string word;
  std::string format = "json";
  long long budget = Oracle::kDefaultBudget;
  int bound = 3;
  unsigned long long seed = 20240901;
  bool assert_paper = false;
  int pairs = 25;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void render_text(const Json& j, std::ostream& out, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_text(it.value(), out, prefix.empty() ? it.key() : prefix + "." + it.key());
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << " = []\n";
    std::size_t i = 0;
    for (const auto& v : j) render_text(v, out, prefix + "[" + std::to_string(i++) + "]");
  } else {
    out << prefix << " = " << j.dump() << "\n";
  }
}

void emit(const Json& j, const Options& opt, std::ostream& out) {
  if (opt.format == "text")
    render_text(j, out, "");
  else
    out << j.dump(2) << "\n";
}

ValidationReport require_valid_input(const CoxeterDiagram& d) {
  auto rep = validate(d);
  if (!rep.valid()) throw DomainError("diagram fails validation");
  return rep;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  auto d = parse_diagram(read_file(opt.input));
  auto rep = validate(d);
  emit(validation_json(d, rep), opt, out);
  return rep.valid() ? 0 : 1;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  auto d = parse_diagram(read_file(opt.input));
  require_valid_input(d);
  emit(structure_json(*analyze_structure(d)), opt, out);
  return 0;
}

int cmd_aut_count(const Options& opt, std::ostream& out) {
  auto d = parse_diagram(read_file(opt.input));
  require_valid_input(d);
  auto s = analyze_structure(d);

  Json j;
  bool finite = true;
  long long product = 1;
  Json edges = Json::array();
  for (std::size_t i = 0; i < s->tree.edges.size(); ++i) {
    auto sz = label_space_size(s->tree.edges[i]);
    Json je;
    je["edge"] = {s->tree.edges[i].initial, s->tree.edges[i].terminal};
    je["type"] = s->tree.edges[i].type;
    je["count"] = sz.finite ? Json(sz.count) : Json("infinite");
    edges.push_back(std::move(je));
    finite &= sz.finite;
    if (sz.finite) product *= sz.count;
  }
  j["edges"] = std::move(edges);
  j["finite"] = finite;
  if (finite) {
    j["exhaustive_count"] = product;
    j["enumerated"] = enumerate_labelings(s, 0).size();
  } else {
    j["bound"] = opt.bound;
    j["bounded_count"] = enumerate_labelings(s, opt.bound).size();
  }
  emit(j, opt, out);
  return 0;
}

int cmd_out(const Options& opt, std::ostream& out) {
  auto d = parse_diagram(read_file(opt.input));
  require_valid_input(d);
  auto s = analyze_structure(d);
  auto r = structure_report(*s);
  emit(out_report_json(r), opt, out);
  if (opt.assert_paper) {
    // The 2^k unit-count claim and the product-vs-semidirect wording are
    // known discrepancies and stay exempt; the path closed form must hold.
    if (r.is_path && !r.path_formula_agrees) return 3;
  }
  return 0;
}

int cmd_apply(const Options& opt, std::ostream& out) {
  auto d = parse_diagram(read_file(opt.input));
  require_valid_input(d);
  auto s = analyze_structure(d);
  Oracle o(d, opt.budget);

  DiagramAutomorphism perm = identity_perm(d);
  auto a = parse_labeling(s, Json::parse(read_file(opt.aut_file)), &perm);
  Word w = d.word_from_names(opt.word);
  Word img = perm.is_identity() ? apply(a, w, o) : apply(to_family(a, perm, o), w, o);

  Json j;
  j["word"] = d.word_to_names(w);
  j["image"] = d.word_to_names(img);
  emit(j, opt, out);
  return 0;
}

int cmd_invert(const Options& opt, std::ostream& out) {
  auto d = parse_diagram(read_file(opt.input));
  require_valid_input(d);
  auto s = analyze_structure(d);
  Oracle o(d, opt.budget);
  auto a = parse_labeling(s, Json::parse(read_file(opt.aut_file)), nullptr);
  emit(labeling_json(invert(a, o)), opt, out);
  return 0;
}

int cmd_compose(const Options& opt, std::ostream& out) {
  auto d = parse_diagram(read_file(opt.input));
  require_valid_input(d);
  auto s = analyze_structure(d);
  Oracle o(d, opt.budget);
  auto outer = parse_labeling(s, Json::parse(read_file(opt.aut_file)), nullptr);
  auto inner = parse_labeling(s, Json::parse(read_file(opt.aut2_file)), nullptr);

  Json j;
  try {
    auto c = compose_labelings(outer, inner, o);
    j["canonical"] = labeling_json(c);
  } catch (const CanonicalizeError& e) {
    j["canonical"] = nullptr;
    j["canonicalize_error"] = e.what();
    Json imgs;
    auto fam = compose_general(to_family(outer, o), to_family(inner, o), o);
    for (Gen g = 0; g < d.rank(); ++g)
      imgs[d.name_of(g)] =
          d.word_to_names(apply(fam, Word(1, static_cast<char>(g)), o));
    j["generator_images"] = std::move(imgs);
  }
  emit(j, opt, out);
  return 0;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
  auto df = parse_diagram_file(read_file(opt.input));
  auto dec = decompose(df.diagram, df.factors);
  Json j = decomposition_json(dec);
  try {
    j["out_finite"] = out_finite_freeprod(dec);
  } catch (const DomainError& e) {
    j["out_finite"] = nullptr;
    j["note"] = e.what();
  }
  if (dec.factors.size() >= 2)
    j["caveats"] = Json::array(
        {"finite factors require a further quotient by their centralizers"});
  emit(j, opt, out);
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  auto d = parse_diagram(read_file(opt.input));
  require_valid_input(d);
  auto s = analyze_structure(d);
  Oracle o(d, opt.budget);
  std::mt19937_64 rng(opt.seed);
  bool mismatch = false;

  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) mismatch = true;
  };

  {  // oracle sanity: w w^-1 dies, relators die
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      Word w;
      int len = static_cast<int>(rng() % 13);
      for (int k = 0; k < len; ++k)
        w.push_back(static_cast<char>(rng() % d.rank()));
      ok = o.is_identity(w + inverse(w));
    }
    for (const auto& r : o.relators().all())
      if (!o.is_identity(r)) ok = false;
    report("word oracle: inverses and relators reduce to 1", ok);
  }

  {  // centralizers commute with their junctions
    bool ok = true;
    for (const auto& J : junctions(d))
      for (const auto& g : centralizer_generators(d, J.verts))
        for (Gen v : J.verts)
          if (!o.commute(g, Word(1, static_cast<char>(v)))) ok = false;
    report("centralizer generators commute with their junction", ok);
  }

  {  // unit decomposition is order-independent
    auto circuits = s->circuits;
    auto reference = units_from_circuits(d, circuits);
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(circuits.begin(), circuits.end(), rng);
      auto again = units_from_circuits(d, circuits);
      if (again.size() != reference.size()) ok = false;
      for (std::size_t i = 0; ok && i < again.size(); ++i)
        if (again[i].verts != reference[i].verts) ok = false;
    }
    report("unit decomposition independent of circuit order", ok);
  }

  {  // each single-vertex junction crossed exactly once
    bool ok = true;
    for (const auto& J : junctions(d)) {
      if (J.kind != Junction::Kind::vertex) continue;
      int crossings = 0;
      for (const auto& e : s->tree.edges)
        if (e.type == 2 && e.junction == J.verts) ++crossings;
      if (crossings > 1) ok = false;
    }
    report("spanning tree crosses single-vertex junctions at most once", ok);
  }

  {  // enumerated labelings are homomorphisms with two-sided inverses
    bool ok = true;
    auto ls = enumerate_labelings(s, std::min(opt.bound, 2));
    std::size_t cap = std::min<std::size_t>(ls.size(), 40);
    auto fid = to_family(identity_labeling(s), o);
    for (std::size_t i = 0; i < cap && ok; ++i) {
      if (!is_homomorphism(ls[i], o)) ok = false;
      auto inv = invert(ls[i], o);
      auto fa = to_family(ls[i], o);
      auto fb = to_family(inv, o);
      if (!equal_general(compose_general(fa, fb, o), fid, o)) ok = false;
      if (!equal_general(compose_general(fb, fa, o), fid, o)) ok = false;
    }
    report("labelings are homomorphisms with verified inverses", ok);
  }

  {  // geodesic conjugator identities on every edge label of the diagram
    bool ok = true;
    std::set<int> ns;
    for (const auto& e : d.iedges()) ns.insert(e.m);
    for (int n : ns) {
      Gen si = 0, sj = 0;
      for (const auto& e : d.iedges())
        if (e.m == n) {
          si = e.a;
          sj = e.b;
        }
      Word siw(1, static_cast<char>(si)), sjw(1, static_cast<char>(sj));
      for (int k : coprime_exponents(n)) {
        Word ref = x_word(si, sj, n, {1, k});
        Word conj = ref + sjw + inverse(ref);
        for (int l = 2; l <= 4; ++l) {
          Word x = x_word(si, sj, n, {l, k});
          if (!o.equal(x + sjw + inverse(x), conj)) ok = false;
        }
        if (!o.equal(x_word(si, sj, n, {3, k}), siw + x_word(si, sj, n, {1, n - k})))
          ok = false;
      }
    }
    report("conjugator words: index-independence and factoring", ok);
  }

  {  // formula composition against family composition
    bool ok = true;
    for (int i = 0; i < opt.pairs && ok; ++i) {
      auto a = random_labeling(s, 2, rng);
      auto b = random_labeling(s, 2, rng);
      try {
        auto composed = compose_labelings(b, a, o);
        auto fam = compose_general(to_family(b, o), to_family(a, o), o);
        if (!equal_general(to_family(composed, o), fam, o)) ok = false;
      } catch (const CanonicalizeError&) {
        // surfaced separately; the family route remains the ground truth
      }
    }
    report("label composition formulas match the conjugator families", ok);
  }

  return mismatch ? 3 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Automorphism structure of even large-type NVB Coxeter groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--budget", opt.budget, "braid-orbit word budget");
  app.add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "diagram file")->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "validate a diagram");
  add_input(validate_cmd);
  auto* analyze_cmd =
      app.add_subcommand("analyze", "units, junctions, unit graph, tree");
  add_input(analyze_cmd);
  auto* count_cmd =
      app.add_subcommand("aut-count", "label space sizes and counts");
  add_input(count_cmd);
  count_cmd->add_option("--bound", opt.bound, "factor sequence bound");
  auto* out_cmd = app.add_subcommand("out", "finiteness and order of Out(W)");
  add_input(out_cmd);
  out_cmd->add_flag("--assert-paper-formulas", opt.assert_paper,
                    "exit 3 on closed-form disagreement");
  auto* apply_cmd = app.add_subcommand("apply", "apply an automorphism to a word");
  add_input(apply_cmd);
  apply_cmd->add_option("--aut", opt.aut_file, "labeling file")->required();
  apply_cmd->add_option("--word", opt.word, "word, e.g. \"a b a\"")->required();
  auto* invert_cmd = app.add_subcommand("invert", "invert a labeling");
  add_input(invert_cmd);
  invert_cmd->add_option("--aut", opt.aut_file, "labeling file")->required();
  auto* compose_cmd =
      app.add_subcommand("compose", "compose two labelings (first is outer)");
  add_input(compose_cmd);
  compose_cmd->add_option("--aut", opt.aut_file, "outer labeling")->required();
  compose_cmd->add_option("--aut2", opt.aut2_file, "inner labeling")->required();
  auto* verify_cmd =
      app.add_subcommand("verify", "run the oracle cross-check suite");
  add_input(verify_cmd);
  verify_cmd->add_option("--seed", opt.seed, "seed for sampled checks");
  verify_cmd->add_option("--pairs", opt.pairs, "composition pairs to sample");
  verify_cmd->add_option("--bound", opt.bound, "factor sequence bound");
  auto* decompose_cmd =
      app.add_subcommand("decompose", "free-product decomposition");
  add_input(decompose_cmd);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt, out);
    if (*analyze_cmd) return cmd_analyze(opt, out);
    if (*count_cmd) return cmd_aut_count(opt, out);
    if (*out_cmd) return cmd_out(opt, out);
    if (*apply_cmd) return cmd_apply(opt, out);
    if (*invert_cmd) return cmd_invert(opt, out);
    if (*compose_cmd) return cmd_compose(opt, out);
    if (*verify_cmd) return cmd_verify(opt, out);
    if (*decompose_cmd) return cmd_decompose(opt, out);
  } catch (const OrbitBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace coxaut
