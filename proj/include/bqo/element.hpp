#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bqo/spec.hpp"
#include "json.hpp"

namespace bqo {

// One point of a composite carrier. The same node type represents every
// shape; `kind` says which fields are meaningful:
//   Atom         atom = index into the finite spec's names, kids empty
//   Left/Right   kids = {payload}
//   Pair         kids = {first, second}
//   Seq          kids = the members, in order (also used for linord)
//   Tree         kids[0] = label, kids[1..] = child trees
//   Set          kids = the members, sorted by canonical encoding, distinct
struct Element {
  enum class Kind : uint8_t { Atom, Left, Right, Pair, Seq, Tree, Set };

  Kind kind = Kind::Atom;
  int atom = 0;
  std::vector<Element> kids;

  bool operator==(const Element&) const = default;
};

// Factories.
Element el_atom(int index);
Element el_atom(const QoSpec& finite_spec, const std::string& name);
Element el_left(Element payload);
Element el_right(Element payload);
Element el_pair(Element first, Element second);
Element el_seq(std::vector<Element> members);
Element el_tree(Element label, std::vector<Element> children);
Element el_set(std::vector<Element> members);  // sorts; throws on duplicates

// Injective, prefix-free byte encoding. Length-lex order on encodings is the
// total order used everywhere ties must break deterministically.
std::string canonical_encode(const Element& e);
bool encoding_less(const std::string& a, const std::string& b);
bool element_less(const Element& a, const Element& b);

// Size used for bounded enumeration: atoms count 1, union tags are
// transparent, pairs add, an empty sequence/set counts 1 and a nonempty one
// adds its members, a tree adds its label and children.
int element_size(const Element& e);

int tree_node_count(const Element& e);

// Shape check against a spec (full recursion).
bool valid_for(const QoSpec& spec, const Element& e);

// JSON wire format (atoms as bare name strings, hence spec-directed):
//   "a" | {"L":E} | {"R":E} | {"pair":[E,E]} | {"seq":[E,...]}
//   | {"tree":{"label":E,"children":[T,...]}} | {"set":[E,...]}
Element element_from_json(const QoSpec& spec, const nlohmann::ordered_json& j);
nlohmann::ordered_json element_to_json(const QoSpec& spec, const Element& e);

}  // namespace bqo
