#include "bqo/element.hpp"

#include <algorithm>

#include "bqo/error.hpp"

namespace bqo {

using nlohmann::ordered_json;

Element el_atom(int index) {
  Element e;
  e.kind = Element::Kind::Atom;
  e.atom = index;
  return e;
}

Element el_atom(const QoSpec& finite_spec, const std::string& name) {
  return el_atom(atom_index(finite_spec, name));
}

Element el_left(Element payload) {
  Element e;
  e.kind = Element::Kind::Left;
  e.kids.push_back(std::move(payload));
  return e;
}

Element el_right(Element payload) {
  Element e;
  e.kind = Element::Kind::Right;
  e.kids.push_back(std::move(payload));
  return e;
}

Element el_pair(Element first, Element second) {
  Element e;
  e.kind = Element::Kind::Pair;
  e.kids.push_back(std::move(first));
  e.kids.push_back(std::move(second));
  return e;
}

Element el_seq(std::vector<Element> members) {
  Element e;
  e.kind = Element::Kind::Seq;
  e.kids = std::move(members);
  return e;
}

Element el_tree(Element label, std::vector<Element> children) {
  Element e;
  e.kind = Element::Kind::Tree;
  e.kids.push_back(std::move(label));
  for (auto& c : children) {
    if (c.kind != Element::Kind::Tree)
      throw InputError("tree element: children must be trees");
    e.kids.push_back(std::move(c));
  }
  return e;
}

Element el_set(std::vector<Element> members) {
  std::sort(members.begin(), members.end(), element_less);
  for (size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i] == members[i + 1])
      throw InputError("set element: duplicate member");
  Element e;
  e.kind = Element::Kind::Set;
  e.kids = std::move(members);
  return e;
}

namespace {

void put_varint(std::string& out, size_t v) {
  while (v >= 0x80) {
    out.push_back(char(0x80 | (v & 0x7F)));
    v >>= 7;
  }
  out.push_back(char(v));
}

void encode_into(const Element& e, std::string& out) {
  switch (e.kind) {
    case Element::Kind::Atom:
      out.push_back('A');
      put_varint(out, size_t(e.atom));
      return;
    case Element::Kind::Left:
      out.push_back('L');
      encode_into(e.kids[0], out);
      return;
    case Element::Kind::Right:
      out.push_back('R');
      encode_into(e.kids[0], out);
      return;
    case Element::Kind::Pair:
      out.push_back('P');
      encode_into(e.kids[0], out);
      encode_into(e.kids[1], out);
      return;
    case Element::Kind::Seq:
      out.push_back('S');
      put_varint(out, e.kids.size());
      for (const auto& k : e.kids) encode_into(k, out);
      return;
    case Element::Kind::Tree:
      out.push_back('T');
      put_varint(out, e.kids.size() - 1);
      for (const auto& k : e.kids) encode_into(k, out);
      return;
    case Element::Kind::Set:
      out.push_back('M');
      put_varint(out, e.kids.size());
      for (const auto& k : e.kids) encode_into(k, out);
      return;
  }
}

}  // namespace

std::string canonical_encode(const Element& e) {
  std::string out;
  encode_into(e, out);
  return out;
}

bool encoding_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool element_less(const Element& a, const Element& b) {
  return encoding_less(canonical_encode(a), canonical_encode(b));
}

int element_size(const Element& e) {
  switch (e.kind) {
    case Element::Kind::Atom:
      return 1;
    case Element::Kind::Left:
    case Element::Kind::Right:
      return element_size(e.kids[0]);
    case Element::Kind::Pair:
      return element_size(e.kids[0]) + element_size(e.kids[1]);
    case Element::Kind::Seq:
    case Element::Kind::Set: {
      if (e.kids.empty()) return 1;
      int s = 0;
      for (const auto& k : e.kids) s += element_size(k);
      return s;
    }
    case Element::Kind::Tree: {
      int s = 0;
      for (const auto& k : e.kids) s += element_size(k);
      return s;
    }
  }
  return 0;
}

int tree_node_count(const Element& e) {
  if (e.kind != Element::Kind::Tree) throw InputError("not a tree element");
  int n = 1;
  for (size_t i = 1; i < e.kids.size(); ++i) n += tree_node_count(e.kids[i]);
  return n;
}

bool valid_for(const QoSpec& spec, const Element& e) {
  switch (spec.kind) {
    case QoSpec::Kind::Finite:
      return e.kind == Element::Kind::Atom && e.atom >= 0 &&
             size_t(e.atom) < spec.names.size();
    case QoSpec::Kind::Union:
      if (e.kind == Element::Kind::Left) return valid_for(*spec.left, e.kids[0]);
      if (e.kind == Element::Kind::Right) return valid_for(*spec.right, e.kids[0]);
      return false;
    case QoSpec::Kind::Product:
      return e.kind == Element::Kind::Pair &&
             valid_for(*spec.left, e.kids[0]) &&
             valid_for(*spec.right, e.kids[1]);
    case QoSpec::Kind::Seq:
    case QoSpec::Kind::LinOrd: {
      if (e.kind != Element::Kind::Seq) return false;
      for (const auto& k : e.kids)
        if (!valid_for(*spec.of, k)) return false;
      return true;
    }
    case QoSpec::Kind::Tree1:
    case QoSpec::Kind::TreeM: {
      if (e.kind != Element::Kind::Tree) return false;
      if (!valid_for(*spec.of, e.kids[0])) return false;
      for (size_t i = 1; i < e.kids.size(); ++i)
        if (!valid_for(spec, e.kids[i])) return false;
      return true;
    }
    case QoSpec::Kind::FinSet: {
      if (e.kind != Element::Kind::Set) return false;
      for (const auto& k : e.kids)
        if (!valid_for(*spec.of, k)) return false;
      for (size_t i = 0; i + 1 < e.kids.size(); ++i) {
        if (!element_less(e.kids[i], e.kids[i + 1])) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

Element tree_from_json(const QoSpec& tree_spec, const ordered_json& j) {
  if (!j.is_object() || !j.contains("label") || !j.contains("children"))
    throw InputError("element: tree node needs 'label' and 'children'");
  Element label = element_from_json(*tree_spec.of, j["label"]);
  if (!j["children"].is_array())
    throw InputError("element: tree 'children' must be an array");
  std::vector<Element> children;
  for (const auto& c : j["children"]) children.push_back(tree_from_json(tree_spec, c));
  return el_tree(std::move(label), std::move(children));
}

ordered_json tree_to_json(const QoSpec& tree_spec, const Element& e) {
  ordered_json j;
  j["label"] = element_to_json(*tree_spec.of, e.kids[0]);
  j["children"] = ordered_json::array();
  for (size_t i = 1; i < e.kids.size(); ++i)
    j["children"].push_back(tree_to_json(tree_spec, e.kids[i]));
  return j;
}

}  // namespace

Element element_from_json(const QoSpec& spec, const ordered_json& j) {
  switch (spec.kind) {
    case QoSpec::Kind::Finite: {
      if (!j.is_string())
        throw InputError("element: expected an atom name string");
      return el_atom(spec, j.get<std::string>());
    }
    case QoSpec::Kind::Union: {
      if (j.is_object() && j.contains("L"))
        return el_left(element_from_json(*spec.left, j["L"]));
      if (j.is_object() && j.contains("R"))
        return el_right(element_from_json(*spec.right, j["R"]));
      throw InputError("element: expected {\"L\":...} or {\"R\":...}");
    }
    case QoSpec::Kind::Product: {
      if (!j.is_object() || !j.contains("pair") || !j["pair"].is_array() ||
          j["pair"].size() != 2)
        throw InputError("element: expected {\"pair\":[x,y]}");
      return el_pair(element_from_json(*spec.left, j["pair"][0]),
                     element_from_json(*spec.right, j["pair"][1]));
    }
    case QoSpec::Kind::Seq:
    case QoSpec::Kind::LinOrd: {
      if (!j.is_object() || !j.contains("seq") || !j["seq"].is_array())
        throw InputError("element: expected {\"seq\":[...]}");
      std::vector<Element> members;
      for (const auto& m : j["seq"])
        members.push_back(element_from_json(*spec.of, m));
      return el_seq(std::move(members));
    }
    case QoSpec::Kind::Tree1:
    case QoSpec::Kind::TreeM: {
      if (!j.is_object() || !j.contains("tree"))
        throw InputError("element: expected {\"tree\":{...}}");
      return tree_from_json(spec, j["tree"]);
    }
    case QoSpec::Kind::FinSet: {
      if (!j.is_object() || !j.contains("set") || !j["set"].is_array())
        throw InputError("element: expected {\"set\":[...]}");
      std::vector<Element> members;
      for (const auto& m : j["set"])
        members.push_back(element_from_json(*spec.of, m));
      return el_set(std::move(members));
    }
  }
  throw InputError("element: unsupported spec kind");
}

ordered_json element_to_json(const QoSpec& spec, const Element& e) {
  switch (spec.kind) {
    case QoSpec::Kind::Finite:
      return ordered_json(spec.names.at(size_t(e.atom)));
    case QoSpec::Kind::Union: {
      ordered_json j;
      if (e.kind == Element::Kind::Left)
        j["L"] = element_to_json(*spec.left, e.kids[0]);
      else
        j["R"] = element_to_json(*spec.right, e.kids[0]);
      return j;
    }
    case QoSpec::Kind::Product: {
      ordered_json j;
      j["pair"] = ordered_json::array(
          {element_to_json(*spec.left, e.kids[0]),
           element_to_json(*spec.right, e.kids[1])});
      return j;
    }
    case QoSpec::Kind::Seq:
    case QoSpec::Kind::LinOrd: {
      ordered_json j;
      j["seq"] = ordered_json::array();
      for (const auto& m : e.kids) j["seq"].push_back(element_to_json(*spec.of, m));
      return j;
    }
    case QoSpec::Kind::Tree1:
    case QoSpec::Kind::TreeM: {
      ordered_json j;
      j["tree"] = tree_to_json(spec, e);
      return j;
    }
    case QoSpec::Kind::FinSet: {
      ordered_json j;
      j["set"] = ordered_json::array();
      for (const auto& m : e.kids) j["set"].push_back(element_to_json(*spec.of, m));
      return j;
    }
  }
  throw InputError("element: unsupported spec kind");
}

}  // namespace bqo
