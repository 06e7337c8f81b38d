#include "bqo/order.hpp"

#include <algorithm>
#include <map>

#include "bqo/embed.hpp"
#include "bqo/error.hpp"

namespace bqo {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InputError(std::string("leq: element shape mismatch: ") + what);
}

}  // namespace

bool leq(const QoSpec& spec, const Element& x, const Element& y) {
  switch (spec.kind) {
    case QoSpec::Kind::Finite:
      require(x.kind == Element::Kind::Atom && y.kind == Element::Kind::Atom,
              "expected atoms");
      require(size_t(x.atom) < spec.names.size() &&
                  size_t(y.atom) < spec.names.size(),
              "atom index out of range");
      return spec.table[size_t(x.atom)][size_t(y.atom)];
    case QoSpec::Kind::Union: {
      require((x.kind == Element::Kind::Left || x.kind == Element::Kind::Right) &&
                  (y.kind == Element::Kind::Left || y.kind == Element::Kind::Right),
              "expected tagged elements");
      if (x.kind != y.kind) return false;  // cross pairs incomparable
      const QoSpec& side = x.kind == Element::Kind::Left ? *spec.left : *spec.right;
      return leq(side, x.kids[0], y.kids[0]);
    }
    case QoSpec::Kind::Product:
      require(x.kind == Element::Kind::Pair && y.kind == Element::Kind::Pair,
              "expected pairs");
      return leq(*spec.left, x.kids[0], y.kids[0]) &&
             leq(*spec.right, x.kids[1], y.kids[1]);
    case QoSpec::Kind::Seq:
    case QoSpec::Kind::LinOrd:
      require(x.kind == Element::Kind::Seq && y.kind == Element::Kind::Seq,
              "expected sequences");
      return le_higman(*spec.of, x.kids, y.kids).has_value();
    case QoSpec::Kind::Tree1:
      require(x.kind == Element::Kind::Tree && y.kind == Element::Kind::Tree,
              "expected trees");
      return le_tree_inj(*spec.of, x, y).has_value();
    case QoSpec::Kind::TreeM:
      require(x.kind == Element::Kind::Tree && y.kind == Element::Kind::Tree,
              "expected trees");
      return le_tree_mono(*spec.of, x, y).has_value();
    case QoSpec::Kind::FinSet:
      require(x.kind == Element::Kind::Set && y.kind == Element::Kind::Set,
              "expected sets");
      return le_finset(*spec.of, x, y);
  }
  throw InputError("leq: unsupported spec kind");
}

namespace {

// Generates all tuples (as element vectors) from the pool with total size in
// [1, budget]; calls emit on each. Pool entries are reused (multisets with
// order), so this walks sequences.
void gen_tuples(const std::vector<Element>& pool,
                const std::vector<int>& sizes, int budget,
                std::vector<Element>& cur,
                const std::function<void(const std::vector<Element>&)>& emit) {
  if (!cur.empty()) emit(cur);
  for (size_t i = 0; i < pool.size(); ++i) {
    if (sizes[i] > budget) continue;
    cur.push_back(pool[i]);
    gen_tuples(pool, sizes, budget - sizes[i], cur, emit);
    cur.pop_back();
  }
}

// Strictly increasing (by canonical order) member lists for sets.
void gen_subsets(const std::vector<Element>& pool,
                 const std::vector<int>& sizes, size_t from, int budget,
                 std::vector<Element>& cur,
                 const std::function<void(const std::vector<Element>&)>& emit) {
  if (!cur.empty()) emit(cur);
  for (size_t i = from; i < pool.size(); ++i) {
    if (sizes[i] > budget) continue;
    cur.push_back(pool[i]);
    gen_subsets(pool, sizes, i + 1, budget - sizes[i], cur, emit);
    cur.pop_back();
  }
}

void gen_trees(const QoSpec& spec, const std::vector<Element>& labels,
               const std::vector<int>& label_sizes, int budget,
               std::vector<Element>& out);

// All ordered children lists with total size <= budget, each child a tree.
void gen_child_lists(const std::vector<Element>& trees,
                     const std::vector<int>& tree_sizes, int budget,
                     std::vector<Element>& cur,
                     const std::function<void(const std::vector<Element>&)>& emit) {
  emit(cur);
  for (size_t i = 0; i < trees.size(); ++i) {
    if (tree_sizes[i] > budget) continue;
    cur.push_back(trees[i]);
    gen_child_lists(trees, tree_sizes, budget - tree_sizes[i], cur, emit);
    cur.pop_back();
  }
}

void gen_trees(const QoSpec& spec, const std::vector<Element>& labels,
               const std::vector<int>& label_sizes, int budget,
               std::vector<Element>& out) {
  (void)spec;
  // Fixpoint by depth: each round re-draws children from everything built
  // so far, until nothing new appears. Deduplicated by encoding.
  std::map<std::string, Element> all;
  std::vector<Element> trees;
  std::vector<int> tree_sizes;
  size_t prev = SIZE_MAX;
  while (all.size() != prev) {
    prev = all.size();
    for (size_t li = 0; li < labels.size(); ++li) {
      int rest = budget - label_sizes[li];
      if (rest < 0) continue;
      std::vector<Element> cur;
      gen_child_lists(trees, tree_sizes, rest, cur,
                      [&](const std::vector<Element>& children) {
                        Element t = el_tree(labels[li], std::vector<Element>(children));
                        if (element_size(t) <= budget)
                          all.try_emplace(canonical_encode(t), std::move(t));
                      });
    }
    trees.clear();
    tree_sizes.clear();
    for (const auto& [_, t] : all) {
      trees.push_back(t);
      tree_sizes.push_back(element_size(t));
    }
  }
  out = std::move(trees);
}

}  // namespace

std::vector<Element> enumerate_elements(const QoSpec& spec, int bound) {
  std::vector<Element> out;
  if (bound < 1) return out;
  switch (spec.kind) {
    case QoSpec::Kind::Finite: {
      for (size_t i = 0; i < spec.names.size(); ++i) out.push_back(el_atom(int(i)));
      break;
    }
    case QoSpec::Kind::Union: {
      for (auto& e : enumerate_elements(*spec.left, bound)) out.push_back(el_left(std::move(e)));
      for (auto& e : enumerate_elements(*spec.right, bound)) out.push_back(el_right(std::move(e)));
      break;
    }
    case QoSpec::Kind::Product: {
      auto ls = enumerate_elements(*spec.left, bound - 1);
      auto rs = enumerate_elements(*spec.right, bound - 1);
      for (const auto& l : ls) {
        int sl = element_size(l);
        for (const auto& r : rs)
          if (sl + element_size(r) <= bound) out.push_back(el_pair(l, r));
      }
      break;
    }
    case QoSpec::Kind::Seq:
    case QoSpec::Kind::LinOrd: {
      auto pool = enumerate_elements(*spec.of, bound);
      std::vector<int> sizes;
      for (const auto& e : pool) sizes.push_back(element_size(e));
      out.push_back(el_seq({}));
      std::vector<Element> cur;
      gen_tuples(pool, sizes, bound, cur,
                 [&](const std::vector<Element>& members) {
                   out.push_back(el_seq(std::vector<Element>(members)));
                 });
      break;
    }
    case QoSpec::Kind::FinSet: {
      auto pool = enumerate_elements(*spec.of, bound);
      std::sort(pool.begin(), pool.end(), element_less);
      std::vector<int> sizes;
      for (const auto& e : pool) sizes.push_back(element_size(e));
      out.push_back(el_set({}));
      std::vector<Element> cur;
      gen_subsets(pool, sizes, 0, bound, cur,
                  [&](const std::vector<Element>& members) {
                    out.push_back(el_set(std::vector<Element>(members)));
                  });
      break;
    }
    case QoSpec::Kind::Tree1:
    case QoSpec::Kind::TreeM: {
      auto labels = enumerate_elements(*spec.of, bound);
      std::vector<int> label_sizes;
      for (const auto& e : labels) label_sizes.push_back(element_size(e));
      gen_trees(spec, labels, label_sizes, bound, out);
      break;
    }
  }
  std::sort(out.begin(), out.end(), element_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bqo
