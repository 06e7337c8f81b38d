#pragma once

#include "bqo/element.hpp"
#include "bqo/spec.hpp"
#include "bqo/upseq.hpp"
#include "json.hpp"

namespace bqo {

// A proper 3-coloring of the shift graph on UP bad sequences, computed
// compositionally over the spec. The trace records every branch taken, in
// order; replaying the same input reproduces both color and trace.
struct ColorResult {
  int color = 0;
  nlohmann::ordered_json trace;  // array of {"branch":...} entries
};

// Requires is_bad(spec, x); throws InputError otherwise. May throw
// PipelineBug from branches the constructions make unreachable (audits
// treat those as findings).
ColorResult color(const QoSpec& spec, const UpSeq& x);

nlohmann::ordered_json color_to_json(const ColorResult& r);

// Sequence element produced by the tree linearization: DFS from the root,
// siblings ordered by the canonical encoding of their subtrees.
Element linearize_tree(const Element& tree);

}  // namespace bqo
