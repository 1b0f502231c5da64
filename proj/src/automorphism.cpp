#include "coxaut/automorphism.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace coxaut {

Word x_word(Gen si, Gen sj, int n, const XPart& x) {
  auto rep = [&](Gen first, Gen second, int times) {
    Word w;
    for (int i = 0; i < times; ++i) {
      w.push_back(static_cast<char>(first));
      w.push_back(static_cast<char>(second));
    }
    return w;
  };
  switch (x.l) {
    case 1:
      return rep(sj, si, (x.k - 1) / 2);
    case 2: {
      Word w = rep(sj, si, (x.k - 1) / 2);
      w.push_back(static_cast<char>(sj));
      return w;
    }
    case 3: {
      Word w = rep(si, sj, (n - x.k - 1) / 2);
      w.push_back(static_cast<char>(si));
      return w;
    }
    case 4:
      return rep(si, sj, (n - x.k + 1) / 2);
  }
  throw DomainError("x_word: l must be in 1..4");
}

int klein(int a, int b) {
  if (a == b) return 1;
  if (a == 1) return b;
  if (b == 1) return a;
  return 9 - a - b;  // distinct non-units multiply to the third
}

std::vector<int> coprime_exponents(int n) {
  std::vector<int> out;
  for (int k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

std::vector<int> allowed_l(const TreeEdge& e) {
  switch (e.type) {
    case 3:
      return {1, 2, 3, 4};
    case 4:
      return e.deg_sj == 1 ? std::vector<int>{1} : std::vector<int>{1, 2, 3, 4};
    case 5:
      return {1, 2};
    case 6:
      return e.deg_sj == 1 ? std::vector<int>{1} : std::vector<int>{1, 2};
    default:
      return {};
  }
}

AutLabeling identity_labeling(StructurePtr s) {
  AutLabeling a;
  a.labels.resize(s->tree.edges.size());
  a.s = std::move(s);
  return a;
}

AutLabeling inner_labeling(StructurePtr s, Word w) {
  AutLabeling a = identity_labeling(std::move(s));
  a.base = std::move(w);
  return a;
}

namespace {

bool has_x(int type) { return type >= 3; }

void check(bool ok, const std::string& msg) {
  if (!ok) throw DomainError("labeling: " + msg);
}

void validate_sequence(const std::vector<Gen>& seq, const std::vector<Gen>& ids,
                       const std::string& side) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    check(std::find(ids.begin(), ids.end(), seq[i]) != ids.end(),
          side + " factor vertex not on the prescribed side");
    if (i) check(seq[i] != seq[i - 1], side + " sequence repeats a factor");
  }
}

}  // namespace

void validate_labeling(const AutLabeling& a) {
  const auto& tree = a.s->tree;
  check(a.labels.size() == tree.edges.size(), "one label per tree edge required");
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const TreeEdge& e = tree.edges[i];
    const EdgeLabel& lab = a.labels[i];
    check(lab.eps == 0 || lab.eps == 1, "epsilon must be 0 or 1");
    if (!has_x(e.type))
      check(lab.x.identity(), "types 1 and 2 carry no x component");
    if (e.type != 1 && e.type != 2)
      check(lab.eps == 0, "epsilon applies to types 1 and 2 only");
    if (e.type == 1) check(lab.u.empty() && lab.v.empty(), "type 1 has no factors");
    if (e.type == 2 || e.type == 3 || e.type == 4)
      validate_sequence(lab.u, e.u_ids, "u");
    else
      check(lab.u.empty(), "u applies to types 2, 3, 4 only");
    if (e.type == 2 || e.type == 3 || e.type == 5)
      validate_sequence(lab.v, e.v_ids, "v");
    else
      check(lab.v.empty(), "v applies to types 2, 3, 5 only");
    if (has_x(e.type)) {
      check(lab.x.k >= 1 && lab.x.k < e.n && std::gcd(lab.x.k, e.n) == 1,
            "exponent k must be coprime to n in [1, n-1]");
      auto al = allowed_l(e);
      check(std::find(al.begin(), al.end(), lab.x.l) != al.end(),
            "l outside the edge's allowed set");
    }
  }
}

Word expand_label(const CoxeterDiagram& d, const TreeEdge& e, const EdgeLabel& lab) {
  Word w;
  auto factors = [&](const std::vector<Gen>& seq, Gen around) {
    for (Gen t : seq) w += centralizer_factor(d, t, around);
  };
  switch (e.type) {
    case 1:
      if (lab.eps) {
        Gen a = e.junction[0], b = e.junction[1];
        for (int i = 0; i < e.n / 2; ++i) {
          w.push_back(static_cast<char>(a));
          w.push_back(static_cast<char>(b));
        }
      }
      break;
    case 2: {
      Gen s = e.junction[0];
      if (lab.eps) w.push_back(static_cast<char>(s));
      factors(lab.u, s);
      factors(lab.v, s);
      break;
    }
    case 3:
      factors(lab.u, e.si);
      w += x_word(e.si, e.sj, e.n, lab.x);
      factors(lab.v, e.sj);
      break;
    case 4:
      factors(lab.u, e.si);
      w += x_word(e.si, e.sj, e.n, lab.x);
      break;
    case 5:
      w += x_word(e.si, e.sj, e.n, lab.x);
      factors(lab.v, e.sj);
      break;
    case 6:
      w += x_word(e.si, e.sj, e.n, lab.x);
      break;
    default:
      throw DomainError("expand_label: bad case type");
  }
  return w;
}

Word conjugator_for_unit(const AutLabeling& a, int unit) {
  const auto& tree = a.s->tree;
  std::vector<int> chain;
  for (int u = unit; tree.parent_edge[u] >= 0;) {
    int ei = tree.parent_edge[u];
    chain.push_back(ei);
    u = tree.edges[ei].initial;
  }
  Word w = a.base;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    w += expand_label(a.s->diagram, tree.edges[*it], a.labels[*it]);
  return w;
}

namespace {

std::vector<Word> reduced_conjugators(const AutLabeling& a, const Oracle& o) {
  std::vector<Word> out(a.s->graph.units.size());
  for (std::size_t u = 0; u < out.size(); ++u)
    out[u] = o.reduce(conjugator_for_unit(a, static_cast<int>(u)));
  return out;
}

Word image_of_letter(const std::vector<Word>& conj, const std::vector<int>& unit_of,
                     Gen t) {
  const Word& w = conj[unit_of[t]];
  Word out = w;
  out.push_back(static_cast<char>(t));
  out += inverse(w);
  return out;
}

}  // namespace

Word apply(const AutLabeling& a, const Word& w, const Oracle& o) {
  auto conj = reduced_conjugators(a, o);
  Word out;
  for (char c : w)
    out += image_of_letter(conj, a.s->unit_of_vertex, static_cast<Gen>(c));
  return o.reduce(out);
}

namespace {

bool relators_die(const CoxeterDiagram& d, const std::vector<Word>& img,
                  const Oracle& o) {
  for (Gen g = 0; g < d.rank(); ++g)
    if (!o.is_identity(img[g] + img[g])) return false;
  for (const auto& e : d.iedges()) {
    Word p = o.reduce(img[e.a] + img[e.b]);
    Word q = p;
    for (int i = 1; i < e.m; ++i) q = o.reduce(q + p);
    if (!q.empty()) return false;
  }
  return true;
}

}  // namespace

bool is_homomorphism(const AutLabeling& a, const Oracle& o) {
  const auto& d = a.s->diagram;
  auto conj = reduced_conjugators(a, o);
  std::vector<Word> img(d.rank());
  for (Gen g = 0; g < d.rank(); ++g)
    img[g] = o.reduce(image_of_letter(conj, a.s->unit_of_vertex, g));
  return relators_die(d, img, o);
}

bool is_homomorphism(const ConjugatorFamily& f, const Oracle& o) {
  const auto& d = f.s->diagram;
  std::vector<Word> img(d.rank());
  for (Gen g = 0; g < d.rank(); ++g)
    img[g] = o.reduce(image_of_letter(f.w, f.s->unit_of_vertex, f.perm(g)));
  return relators_die(d, img, o);
}

namespace {

std::vector<Gen> cancel_factors(std::vector<Gen> seq) {
  std::vector<Gen> out;
  for (Gen g : seq) {
    if (!out.empty() && out.back() == g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

std::vector<Gen> concat_cancel(const std::vector<Gen>& a, const std::vector<Gen>& b) {
  std::vector<Gen> seq = a;
  seq.insert(seq.end(), b.begin(), b.end());
  return cancel_factors(std::move(seq));
}

int inverse_exponent(int k, int n) {
  for (int c = 1; c < n; ++c)
    if ((static_cast<long long>(c) * k) % n == 1) return c;
  throw DomainError("no inverse exponent; k not coprime to n");
}

XPart invert_x(const XPart& x, int n) {
  int kp = inverse_exponent(x.k, n);
  long long carry = (static_cast<long long>(x.k) * kp - 1) / n;
  int lp = (carry % 2 != 0) ? klein(x.l, 4) : x.l;
  return {lp, kp};
}

XPart compose_x(const XPart& inner, const XPart& outer, int n) {
  long long kk = static_cast<long long>(inner.k) * outer.k;
  int k2 = static_cast<int>(kk % n);
  long long carry = kk / n;
  int l2 = klein(inner.l, outer.l);
  if (carry % 2 != 0) l2 = klein(l2, 4);
  return {l2, k2};
}

void require_same_tree(const AutLabeling& a, const AutLabeling& b) {
  if (a.s.get() != b.s.get())
    throw DomainError("labelings must share one structure analysis");
}

// A factor vertex may live in a unit other than the edge's own endpoint; its
// image is then conjugated by the labels along the tree path between them.
// When those labels are pair-junction involutions through the same center,
// the conjugation rewrites as a wrapping factor sequence; anything else has
// no expression in the label spaces.
std::optional<std::vector<Gen>> conjugating_chain(const AutLabeling& lab,
                                                  int from_unit, int to_unit,
                                                  Gen center) {
  const auto& tree = lab.s->tree;
  std::vector<int> up_from, up_to;
  int x = from_unit, y = to_unit;
  while (tree.depth[x] > tree.depth[y]) {
    up_from.push_back(tree.parent_edge[x]);
    x = tree.edges[tree.parent_edge[x]].initial;
  }
  while (tree.depth[y] > tree.depth[x]) {
    up_to.push_back(tree.parent_edge[y]);
    y = tree.edges[tree.parent_edge[y]].initial;
  }
  while (x != y) {
    up_from.push_back(tree.parent_edge[x]);
    x = tree.edges[tree.parent_edge[x]].initial;
    up_to.push_back(tree.parent_edge[y]);
    y = tree.edges[tree.parent_edge[y]].initial;
  }
  std::vector<int> path = up_from;
  path.insert(path.end(), up_to.rbegin(), up_to.rend());

  std::vector<Gen> ids;
  for (int ei : path) {
    const TreeEdge& e = tree.edges[ei];
    if (e.type != 1) return std::nullopt;
    if (std::find(e.junction.begin(), e.junction.end(), center) == e.junction.end())
      return std::nullopt;
    if (lab.labels[ei].eps)
      ids.push_back(e.junction[0] == center ? e.junction[1] : e.junction[0]);
  }
  return ids;
}

std::optional<std::vector<Gen>> wrap_factors(const AutLabeling& lab, int anchor,
                                             Gen center,
                                             const std::vector<Gen>& seq) {
  std::vector<Gen> out;
  for (Gen t : seq) {
    int ut = lab.s->unit_of_vertex[t];
    std::optional<std::vector<Gen>> chain;
    if (ut == anchor)
      chain.emplace();
    else
      chain = conjugating_chain(lab, anchor, ut, center);
    if (!chain) return std::nullopt;
    out.insert(out.end(), chain->begin(), chain->end());
    out.push_back(t);
    out.insert(out.end(), chain->rbegin(), chain->rend());
  }
  return cancel_factors(std::move(out));
}

Gen u_center(const TreeEdge& e) { return e.type == 2 ? e.junction[0] : e.si; }
Gen v_center(const TreeEdge& e) { return e.type == 2 ? e.junction[0] : e.sj; }

bool droppable_leaf(const StructureData& s, const TreeEdge& e) {
  // The terminal centralizer can absorb the tail only when nothing deeper
  // depends on this conjugator.
  return s.graph.units[e.terminal].singleton() && s.tree.children[e.terminal].empty();
}

}  // namespace

AutLabeling canonicalize(const AutLabeling& a) {
  AutLabeling c = a;
  const auto& tree = c.s->tree;

  std::vector<int> order(tree.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int dx = tree.depth[tree.edges[x].terminal];
    int dy = tree.depth[tree.edges[y].terminal];
    return dx != dy ? dx > dy : x < y;
  });

  auto violates = [&](int ei) {
    const TreeEdge& e = tree.edges[ei];
    if (!has_x(e.type)) return false;
    auto al = allowed_l(e);
    return std::find(al.begin(), al.end(), c.labels[ei].x.l) == al.end();
  };
  // Left-multiplication by si: 1<->3, 2<->4, k -> n-k.
  auto flip_leading = [&](int ei) {
    auto& x = c.labels[ei].x;
    x.l = (x.l <= 2) ? x.l + 2 : x.l - 2;
    x.k = tree.edges[ei].n - x.k;
  };

  bool basepoint_flipped = false;

  for (int ei : order) {
    if (!violates(ei)) continue;
    const TreeEdge& e = tree.edges[ei];
    if (droppable_leaf(*c.s, e)) {
      c.labels[ei].x.l = 1;  // tail lies in the terminal vertex centralizer
      continue;
    }
    // Only a leading letter can move; l must be 3 or 4 here.
    if (c.labels[ei].x.l < 3)
      throw CanonicalizeError("label l=2 on an l=1 edge with dependents");
    int parent = tree.parent_edge[e.initial];
    if (parent >= 0) {
      flip_leading(ei);
      auto& px = c.labels[parent].x;
      px.l = klein(px.l, 2);  // absorb the trailing letter
      continue;
    }
    // The initial unit is the basepoint; it must be a singleton for a
    // type 5/6 edge. Push the letter into the base word, which flips every
    // branch leaving the basepoint.
    if (basepoint_flipped)
      throw CanonicalizeError(
          "carrying revisits the basepoint; the labeling has no canonical "
          "form on this tree");
    basepoint_flipped = true;
    c.base.push_back(static_cast<char>(e.si));  // the basepoint vertex
    for (int child : tree.children[e.initial]) flip_leading(child);
    for (int child : tree.children[e.initial]) {
      if (!violates(child)) continue;
      if (droppable_leaf(*c.s, tree.edges[child]))
        c.labels[child].x.l = 1;
      else
        throw CanonicalizeError(
            "carrying cannot terminate: basepoint branch cannot absorb the "
            "carried letter");
    }
  }

  validate_labeling(c);
  return c;
}

AutLabeling invert(const AutLabeling& a, const Oracle& o) {
  AutLabeling inv;
  inv.s = a.s;
  inv.labels.resize(a.labels.size());
  const auto& tree = a.s->tree;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    inv.labels[i].eps = a.labels[i].eps;
    if (has_x(tree.edges[i].type))
      inv.labels[i].x = invert_x(a.labels[i].x, tree.edges[i].n);
  }
  // Factor sequences invert by reversal after the same wrapping the
  // composition applies, so that composing with the original cancels; the
  // pair-junction labels involved agree between a and its inverse.
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    const TreeEdge& e = tree.edges[i];
    if (!a.labels[i].u.empty()) {
      auto wrapped = wrap_factors(inv, e.initial, u_center(e), a.labels[i].u);
      auto seq = wrapped ? *wrapped : a.labels[i].u;
      inv.labels[i].u.assign(seq.rbegin(), seq.rend());
    }
    if (!a.labels[i].v.empty()) {
      auto wrapped = wrap_factors(inv, e.terminal, v_center(e), a.labels[i].v);
      auto seq = wrapped ? *wrapped : a.labels[i].v;
      inv.labels[i].v.assign(seq.rbegin(), seq.rend());
    }
  }
  // Base of the inverse: label-only application of the inverted labels to
  // the reversed base word.
  inv.base = apply(inv, inverse(a.base), o);
  try {
    return canonicalize(inv);
  } catch (const CanonicalizeError&) {
    return inv;  // still acts correctly; only the normal form is unavailable
  }
}

AutLabeling compose_labelings(const AutLabeling& outer, const AutLabeling& inner,
                              const Oracle& o) {
  require_same_tree(outer, inner);
  const auto& tree = outer.s->tree;

  AutLabeling out;
  out.s = outer.s;
  out.labels.resize(tree.edges.size());
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const TreeEdge& e = tree.edges[i];
    const EdgeLabel& li = inner.labels[i];
    const EdgeLabel& lo = outer.labels[i];
    EdgeLabel& r = out.labels[i];
    r.eps = li.eps ^ lo.eps;
    if (!li.u.empty()) {
      auto wrapped = wrap_factors(outer, e.initial, u_center(e), li.u);
      if (!wrapped)
        throw CanonicalizeError("composed label leaves the label spaces");
      r.u = concat_cancel(*wrapped, lo.u);
    } else {
      r.u = lo.u;
    }
    if (!li.v.empty()) {
      auto wrapped = wrap_factors(outer, e.terminal, v_center(e), li.v);
      if (!wrapped)
        throw CanonicalizeError("composed label leaves the label spaces");
      r.v = concat_cancel(lo.v, *wrapped);
    } else {
      r.v = lo.v;
    }
    if (has_x(e.type)) r.x = compose_x(li.x, lo.x, e.n);
  }
  out.base = o.reduce(apply(outer, inner.base, o) + outer.base);
  return canonicalize(out);
}

ConjugatorFamily to_family(const AutLabeling& a, const DiagramAutomorphism& perm,
                           const Oracle& o) {
  ConjugatorFamily f;
  f.s = a.s;
  f.perm = perm;
  f.w = reduced_conjugators(a, o);
  return f;
}

ConjugatorFamily to_family(const AutLabeling& a, const Oracle& o) {
  return to_family(a, identity_perm(a.s->diagram), o);
}

Word apply(const ConjugatorFamily& f, const Word& w, const Oracle& o) {
  Word out;
  for (char c : w) {
    Gen t = f.perm(static_cast<Gen>(c));
    out += image_of_letter(f.w, f.s->unit_of_vertex, t);
  }
  return o.reduce(out);
}

namespace {

// Index of the unit the permutation maps `unit` onto.
int unit_image(const StructureData& s, const DiagramAutomorphism& perm, int unit) {
  std::vector<Gen> img;
  for (Gen v : s.graph.units[unit].verts) img.push_back(perm(v));
  std::sort(img.begin(), img.end());
  for (std::size_t u = 0; u < s.graph.units.size(); ++u)
    if (s.graph.units[u].verts == img) return static_cast<int>(u);
  throw DomainError("diagram automorphism does not permute the units");
}

}  // namespace

ConjugatorFamily compose_general(const ConjugatorFamily& outer,
                                 const ConjugatorFamily& inner, const Oracle& o) {
  if (outer.s.get() != inner.s.get())
    throw DomainError("families must share one structure analysis");
  ConjugatorFamily f;
  f.s = outer.s;
  f.perm = compose(outer.perm, inner.perm);
  f.w.resize(outer.w.size());
  auto perm_inv = inverse_perm(outer.perm);
  for (std::size_t u = 0; u < f.w.size(); ++u) {
    int pre = unit_image(*outer.s, perm_inv, static_cast<int>(u));
    f.w[u] = o.reduce(apply(outer, inner.w[pre], o) + outer.w[u]);
  }
  return f;
}

bool equal_general(const ConjugatorFamily& a, const ConjugatorFamily& b,
                   const Oracle& o) {
  if (a.s.get() != b.s.get()) return false;
  for (Gen g = 0; g < a.s->diagram.rank(); ++g) {
    Gen ta = a.perm(g), tb = b.perm(g);
    Word ia = image_of_letter(a.w, a.s->unit_of_vertex, ta);
    Word ib = image_of_letter(b.w, b.s->unit_of_vertex, tb);
    if (!o.equal(ia, ib)) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<Gen>> factor_sequences(const std::vector<Gen>& ids, int bound) {
  std::vector<std::vector<Gen>> out{{}};
  if (ids.empty()) return out;
  int max_len = ids.size() == 1 ? 1 : bound;
  std::vector<std::vector<Gen>> level{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Gen>> next;
    for (const auto& seq : level)
      for (Gen t : ids) {
        if (!seq.empty() && seq.back() == t) continue;
        auto s2 = seq;
        s2.push_back(t);
        next.push_back(std::move(s2));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<EdgeLabel> edge_label_space(const TreeEdge& e, int bound) {
  std::vector<EdgeLabel> out;
  switch (e.type) {
    case 1: {
      out.emplace_back();
      EdgeLabel twist;
      twist.eps = 1;
      out.push_back(std::move(twist));
      break;
    }
    case 2:
      for (int eps : {0, 1})
        for (const auto& u : factor_sequences(e.u_ids, bound))
          for (const auto& v : factor_sequences(e.v_ids, bound))
            out.push_back({eps, u, v, {}});
      break;
    default: {
      auto us = (e.type == 3 || e.type == 4) ? factor_sequences(e.u_ids, bound)
                                             : std::vector<std::vector<Gen>>{{}};
      auto vs = (e.type == 3 || e.type == 5) ? factor_sequences(e.v_ids, bound)
                                             : std::vector<std::vector<Gen>>{{}};
      for (const auto& u : us)
        for (int k : coprime_exponents(e.n))
          for (int l : allowed_l(e))
            for (const auto& v : vs) out.push_back({0, u, v, {l, k}});
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<AutLabeling> enumerate_labelings(StructurePtr s, int bound) {
  const auto& tree = s->tree;
  std::vector<std::vector<EdgeLabel>> spaces;
  for (const auto& e : tree.edges) spaces.push_back(edge_label_space(e, bound));

  std::vector<AutLabeling> out;
  AutLabeling cur = identity_labeling(s);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == spaces.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& lab : spaces[i]) {
      cur.labels[i] = lab;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

AutLabeling random_labeling(StructurePtr s, int bound, std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto rand_seq = [&](const std::vector<Gen>& ids) {
    std::vector<Gen> seq;
    if (ids.empty()) return seq;
    int len = pick(0, ids.size() == 1 ? 1 : bound);
    for (int i = 0; i < len; ++i) {
      Gen t;
      do {
        t = ids[pick(0, static_cast<int>(ids.size()) - 1)];
      } while (!seq.empty() && seq.back() == t);
      seq.push_back(t);
    }
    return seq;
  };

  AutLabeling a = identity_labeling(s);
  const auto& tree = s->tree;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const TreeEdge& e = tree.edges[i];
    EdgeLabel& lab = a.labels[i];
    switch (e.type) {
      case 1:
        lab.eps = pick(0, 1);
        break;
      case 2:
        lab.eps = pick(0, 1);
        lab.u = rand_seq(e.u_ids);
        lab.v = rand_seq(e.v_ids);
        break;
      default: {
        if (e.type == 3 || e.type == 4) lab.u = rand_seq(e.u_ids);
        if (e.type == 3 || e.type == 5) lab.v = rand_seq(e.v_ids);
        auto ks = coprime_exponents(e.n);
        auto ls = allowed_l(e);
        lab.x = {ls[pick(0, static_cast<int>(ls.size()) - 1)],
                 ks[pick(0, static_cast<int>(ks.size()) - 1)]};
        break;
      }
    }
  }
  return a;
}

}  // namespace coxaut
