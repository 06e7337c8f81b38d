#include "bqo/embed.hpp"

#include <algorithm>
#include <cstdint>

#include "bqo/error.hpp"
#include "bqo/order.hpp"

namespace bqo {

// ---------------------------------------------------------------------------
// Subsequence embedding.

std::optional<EmbedWitness> le_higman(const QoSpec& label_spec,
                                      std::span<const Element> s,
                                      std::span<const Element> t) {
  EmbedWitness w;
  size_t j = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    while (j < t.size() && !leq(label_spec, s[i], t[j])) ++j;
    if (j == t.size()) return std::nullopt;
    w.emplace_back(int(i), int(j));
    ++j;
  }
  return w;
}

std::pair<int, int> higman_prefix_stats(const QoSpec& label_spec,
                                        std::span<const Element> s,
                                        std::span<const Element> t) {
  // Greedy leftmost matches exactly the longest embeddable prefix, and the
  // positions it picks are pointwise least, so the last one determines the
  // least end.
  int m = 0, n = 0;
  size_t j = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    while (j < t.size() && !leq(label_spec, s[i], t[j])) ++j;
    if (j == t.size()) break;
    ++m;
    n = int(j) + 1;
    ++j;
  }
  return {m, n};
}

// ---------------------------------------------------------------------------
// Trees. Nodes are flattened in DFS preorder; parent[i] < i for i > 0.

namespace {

struct FlatTree {
  std::vector<const Element*> node;   // subtree rooted at each node
  std::vector<const Element*> label;
  std::vector<int> parent;            // -1 for the root
  std::vector<std::vector<int>> children;
  std::vector<std::vector<bool>> strict_anc;  // strict_anc[a][d]
};

void flatten_into(const Element& t, int parent, FlatTree& out) {
  int id = int(out.node.size());
  out.node.push_back(&t);
  out.label.push_back(&t.kids[0]);
  out.parent.push_back(parent);
  out.children.emplace_back();
  if (parent >= 0) out.children[size_t(parent)].push_back(id);
  for (size_t i = 1; i < t.kids.size(); ++i) flatten_into(t.kids[i], id, out);
}

FlatTree flatten(const Element& t) {
  if (t.kind != Element::Kind::Tree) throw InputError("tree embedding: not a tree");
  FlatTree f;
  flatten_into(t, -1, f);
  const size_t n = f.node.size();
  f.strict_anc.assign(n, std::vector<bool>(n, false));
  for (size_t d = 0; d < n; ++d)
    for (int a = f.parent[d]; a >= 0; a = f.parent[size_t(a)])
      f.strict_anc[size_t(a)][d] = true;
  return f;
}

struct InjSearch {
  const QoSpec* labels;
  const FlatTree* s;
  const FlatTree* t;
  std::vector<std::vector<int>> cand;  // per source node, label-compatible targets
  std::vector<int> img;
  uint64_t used = 0;

  bool dfs(size_t ui) {
    if (ui == s->node.size()) return true;
    int pi = s->parent[ui] >= 0 ? img[size_t(s->parent[ui])] : -1;
    for (int v : cand[ui]) {
      if (used & (1ull << v)) continue;
      if (pi >= 0 && !t->strict_anc[size_t(pi)][size_t(v)]) continue;
      img[ui] = v;
      used |= 1ull << v;
      if (dfs(ui + 1)) return true;
      used &= ~(1ull << v);
    }
    return false;
  }
};

}  // namespace

std::optional<EmbedWitness> le_tree_inj(const QoSpec& label_spec,
                                        const Element& s, const Element& t) {
  FlatTree fs = flatten(s), ft = flatten(t);
  if (fs.node.size() > ft.node.size()) return std::nullopt;
  if (ft.node.size() > 63) throw InputError("tree embedding: target too large");
  // Deterministic witness: candidates ordered by (subtree encoding, index).
  std::vector<std::pair<std::string, int>> keyed;
  for (size_t v = 0; v < ft.node.size(); ++v)
    keyed.emplace_back(canonical_encode(*ft.node[v]), int(v));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return encoding_less(a.first, b.first);
    return a.second < b.second;
  });
  InjSearch srch;
  srch.labels = &label_spec;
  srch.s = &fs;
  srch.t = &ft;
  srch.cand.resize(fs.node.size());
  for (size_t u = 0; u < fs.node.size(); ++u)
    for (const auto& [_, v] : keyed)
      if (leq(label_spec, *fs.label[u], *ft.label[size_t(v)]))
        srch.cand[u].push_back(v);
  srch.img.assign(fs.node.size(), -1);
  if (!srch.dfs(0)) return std::nullopt;
  EmbedWitness w;
  for (size_t u = 0; u < fs.node.size(); ++u) w.emplace_back(int(u), srch.img[u]);
  return w;
}

std::optional<EmbedWitness> le_tree_mono(const QoSpec& label_spec,
                                         const Element& s, const Element& t) {
  FlatTree fs = flatten(s), ft = flatten(t);
  const size_t ns = fs.node.size(), nt = ft.node.size();
  // emb[u][v]: u's subtree maps with f(u) = v.
  // exs[u][v]: u's subtree maps with f(u) somewhere in v's subtree (v incl.).
  std::vector<std::vector<char>> emb(ns, std::vector<char>(nt, 0));
  std::vector<std::vector<char>> exs(ns, std::vector<char>(nt, 0));
  for (size_t ui = ns; ui-- > 0;) {      // children before parents (reverse preorder)
    for (size_t vi = nt; vi-- > 0;) {
      bool ok = leq(label_spec, *fs.label[ui], *ft.label[vi]);
      for (int c : fs.children[ui])
        ok = ok && exs[size_t(c)][vi];
      emb[ui][vi] = ok;
      bool ex = ok;
      for (int w : ft.children[vi]) ex = ex || exs[ui][size_t(w)];
      exs[ui][vi] = ex;
    }
  }
  if (!exs[0][0]) return std::nullopt;
  // Deterministic reconstruction: least eligible target by (encoding, index).
  std::vector<std::pair<std::string, int>> key;
  for (size_t v = 0; v < nt; ++v) key.emplace_back(canonical_encode(*ft.node[v]), int(v));
  auto pick_in_subtree = [&](size_t u, int v_root) {
    int best = -1;
    std::vector<int> stack{v_root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (emb[u][size_t(v)]) {
        if (best < 0 || encoding_less(key[size_t(v)].first, key[size_t(best)].first) ||
            (key[size_t(v)].first == key[size_t(best)].first && v < best))
          best = v;
      }
      for (int w : ft.children[size_t(v)]) stack.push_back(w);
    }
    return best;
  };
  EmbedWitness w(ns);
  std::vector<int> img(ns, -1);
  img[0] = pick_in_subtree(0, 0);
  w[0] = {0, img[0]};
  for (size_t u = 1; u < ns; ++u) {
    img[u] = pick_in_subtree(u, img[size_t(fs.parent[u])]);
    w[u] = {int(u), img[u]};
  }
  return w;
}

// ---------------------------------------------------------------------------
// Finite sets: domination injection via augmenting paths.

namespace {

bool try_augment(const std::vector<std::vector<char>>& adj, int u,
                 std::vector<char>& seen, std::vector<int>& match_t) {
  for (size_t v = 0; v < adj[size_t(u)].size(); ++v) {
    if (!adj[size_t(u)][v] || seen[v]) continue;
    seen[v] = 1;
    if (match_t[v] < 0 || try_augment(adj, match_t[v], seen, match_t)) {
      match_t[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

bool le_finset(const QoSpec& label_spec, const Element& s, const Element& t) {
  if (s.kind != Element::Kind::Set || t.kind != Element::Kind::Set)
    throw InputError("set embedding: not sets");
  const size_t ns = s.kids.size(), nt = t.kids.size();
  if (ns > nt) return false;
  std::vector<std::vector<char>> adj(ns, std::vector<char>(nt, 0));
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < nt; ++j)
      adj[i][j] = leq(label_spec, s.kids[i], t.kids[j]);
  std::vector<int> match_t(nt, -1);
  for (size_t i = 0; i < ns; ++i) {
    std::vector<char> seen(nt, 0);
    if (!try_augment(adj, int(i), seen, match_t)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: exhaustive enumeration of candidate maps. Deliberately
// plain — no greedy choices, no DP tables, no matching; label comparisons
// recurse through the oracle itself.

namespace {

constexpr size_t kGuard = 8;

bool brute_incr(const QoSpec& of, const std::vector<Element>& s,
                const std::vector<Element>& t, size_t si, size_t tj) {
  if (si == s.size()) return true;
  if (s.size() - si > t.size() - tj) return false;
  for (size_t j = tj; j < t.size(); ++j)
    if (brute_force_leq(of, s[si], t[j]) && brute_incr(of, s, t, si + 1, j + 1))
      return true;
  return false;
}

bool brute_tree_assign(const QoSpec& of, const FlatTree& fs, const FlatTree& ft,
                       std::vector<int>& img, size_t ui, bool injective) {
  if (ui == fs.node.size()) return true;
  for (size_t v = 0; v < ft.node.size(); ++v) {
    if (injective) {
      bool used = false;
      for (size_t u = 0; u < ui; ++u) used = used || img[u] == int(v);
      if (used) continue;
    }
    int p = fs.parent[ui];
    if (p >= 0) {
      bool anc = ft.strict_anc[size_t(img[size_t(p)])][v];
      bool anc_or_eq = anc || img[size_t(p)] == int(v);
      if (injective ? !anc : !anc_or_eq) continue;
    }
    if (!brute_force_leq(of, *fs.label[ui], *ft.label[v])) continue;
    img[ui] = int(v);
    if (brute_tree_assign(of, fs, ft, img, ui + 1, injective)) return true;
    img[ui] = -1;
  }
  return false;
}

bool brute_injection(const QoSpec& of, const std::vector<Element>& s,
                     const std::vector<Element>& t, std::vector<char>& used,
                     size_t si) {
  if (si == s.size()) return true;
  for (size_t j = 0; j < t.size(); ++j) {
    if (used[j]) continue;
    if (!brute_force_leq(of, s[si], t[j])) continue;
    used[j] = 1;
    if (brute_injection(of, s, t, used, si + 1)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

bool brute_force_leq(const QoSpec& spec, const Element& x, const Element& y) {
  switch (spec.kind) {
    case QoSpec::Kind::Finite:
      return spec.table[size_t(x.atom)][size_t(y.atom)];
    case QoSpec::Kind::Union: {
      if (x.kind != y.kind) return false;
      const QoSpec& side = x.kind == Element::Kind::Left ? *spec.left : *spec.right;
      return brute_force_leq(side, x.kids[0], y.kids[0]);
    }
    case QoSpec::Kind::Product:
      return brute_force_leq(*spec.left, x.kids[0], y.kids[0]) &&
             brute_force_leq(*spec.right, x.kids[1], y.kids[1]);
    case QoSpec::Kind::Seq:
    case QoSpec::Kind::LinOrd: {
      if (x.kids.size() > kGuard || y.kids.size() > kGuard)
        throw InputError("brute force: sequence length guard exceeded");
      return brute_incr(*spec.of, x.kids, y.kids, 0, 0);
    }
    case QoSpec::Kind::Tree1:
    case QoSpec::Kind::TreeM: {
      FlatTree fs = flatten(x), ft = flatten(y);
      if (fs.node.size() > kGuard || ft.node.size() > kGuard)
        throw InputError("brute force: tree node guard exceeded");
      const bool injective = spec.kind == QoSpec::Kind::Tree1;
      if (injective && fs.node.size() > ft.node.size()) return false;
      std::vector<int> img(fs.node.size(), -1);
      return brute_tree_assign(*spec.of, fs, ft, img, 0, injective);
    }
    case QoSpec::Kind::FinSet: {
      if (x.kids.size() > kGuard || y.kids.size() > kGuard)
        throw InputError("brute force: set size guard exceeded");
      if (x.kids.size() > y.kids.size()) return false;
      std::vector<char> used(y.kids.size(), 0);
      return brute_injection(*spec.of, x.kids, y.kids, used, 0);
    }
  }
  throw InputError("brute force: unsupported spec kind");
}

}  // namespace bqo
