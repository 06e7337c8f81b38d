#pragma once

#include <vector>

#include "bqo/element.hpp"
#include "bqo/spec.hpp"

namespace bqo {

// The quasi-order relation of a composed spec. Dispatches on kind: finite
// table lookup; disjoint union (same tag, cross pairs incomparable);
// componentwise product; subsequence embedding with label domination for
// seq/linord; label-dominating tree embeddings (injective ancestor-preserving
// for tree1, order-preserving for treem); domination injection for finset.
// Throws InputError on top-level shape mismatch.
bool leq(const QoSpec& spec, const Element& x, const Element& y);

// All elements of the carrier with element_size <= bound, sorted by
// canonical encoding (length-lex), no duplicates.
std::vector<Element> enumerate_elements(const QoSpec& spec, int bound);

}  // namespace bqo
