#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bqo/element.hpp"
#include "bqo/spec.hpp"

namespace bqo {

// Index pairs (source position/node -> target position/node). Tree nodes are
// numbered in DFS preorder of the element as written.
using EmbedWitness = std::vector<std::pair<int, int>>;

// Subsequence embedding with label domination: a strictly increasing h with
// s[i] <= t[h(i)] for every i. Greedy leftmost matching is complete here and
// returns the pointwise-least witness.
std::optional<EmbedWitness> le_higman(const QoSpec& label_spec,
                                      std::span<const Element> s,
                                      std::span<const Element> t);

// Largest m with s[0..m) embeddable into t, plus the least end position n
// such that s[0..m) embeds into t[0..n). Both fall out of one greedy pass
// (m = matched count, n = one past the last matched position, 0 when m = 0).
std::pair<int, int> higman_prefix_stats(const QoSpec& label_spec,
                                        std::span<const Element> s,
                                        std::span<const Element> t);

// Injective embedding of rooted trees: strict ancestor order preserved,
// labels dominated. Deterministic backtracking; target candidates are tried
// in (canonical encoding of subtree, preorder index) order, so the witness
// is reproducible.
std::optional<EmbedWitness> le_tree_inj(const QoSpec& label_spec,
                                        const Element& s, const Element& t);

// Order-preserving (not necessarily injective) tree embedding, decided by a
// dynamic program over (source node, target node) pairs.
std::optional<EmbedWitness> le_tree_mono(const QoSpec& label_spec,
                                         const Element& s, const Element& t);

// Domination injection between finite sets, decided by bipartite matching.
bool le_finset(const QoSpec& label_spec, const Element& s, const Element& t);

// Independent oracle: decides the same relation as leq() by exhaustive
// enumeration of candidate maps (all strictly increasing maps, all
// (injective) node assignments, all injections), with label comparisons
// recursing through brute_force_leq itself. Sizes are guarded (<= 8
// positions/nodes/members per level); throws InputError beyond that.
bool brute_force_leq(const QoSpec& spec, const Element& x, const Element& y);

}  // namespace bqo
