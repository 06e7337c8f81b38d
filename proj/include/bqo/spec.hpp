#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace bqo {

// A composable quasi-order description. Leaves are finite relation tables;
// the other kinds wrap one or two operand orders. Instances are immutable
// after construction and shared by pointer.
struct QoSpec {
  enum class Kind { Finite, Union, Product, Seq, Tree1, TreeM, FinSet, LinOrd };

  Kind kind = Kind::Finite;

  // Finite only.
  std::vector<std::string> names;
  std::vector<std::vector<bool>> table;  // table[i][j] == (names[i] <= names[j])

  // Union / Product.
  std::shared_ptr<const QoSpec> left, right;

  // Seq / Tree1 / TreeM / FinSet / LinOrd.
  std::shared_ptr<const QoSpec> of;
};

using SpecPtr = std::shared_ptr<const QoSpec>;

// Both kinds carry sequence-shaped elements and the same relation.
inline bool seq_like(QoSpec::Kind k) {
  return k == QoSpec::Kind::Seq || k == QoSpec::Kind::LinOrd;
}

// Constructors used by tests and by the colorer when it re-wraps operands.
SpecPtr make_finite_spec(std::vector<std::string> names,
                         std::vector<std::vector<bool>> table);
SpecPtr make_union_spec(SpecPtr l, SpecPtr r);
SpecPtr make_product_spec(SpecPtr l, SpecPtr r);
SpecPtr make_seq_spec(SpecPtr of);
SpecPtr make_tree1_spec(SpecPtr of);
SpecPtr make_treem_spec(SpecPtr of);
SpecPtr make_finset_spec(SpecPtr of);
SpecPtr make_linord_spec(SpecPtr of);

// Parses and validates a spec document. For finite tables, reflexivity and
// transitivity are checked exhaustively; failures name the offending pair or
// triple. For linord, the operand's table must be total. Throws InputError.
SpecPtr parse_spec(const nlohmann::ordered_json& j);
SpecPtr parse_spec_text(const std::string& text);
SpecPtr load_spec_file(const std::string& path);

// Compact human-readable summary, e.g. "seq(finite{a,b})".
std::string spec_to_string(const QoSpec& spec);

// Atom index for a name in a finite spec; throws InputError when absent.
int atom_index(const QoSpec& spec, const std::string& name);

}  // namespace bqo
