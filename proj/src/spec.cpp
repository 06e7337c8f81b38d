#include "bqo/spec.hpp"

#include <fstream>
#include <sstream>

#include "bqo/error.hpp"

namespace bqo {

using nlohmann::ordered_json;

namespace {

SpecPtr wrap1(QoSpec::Kind k, SpecPtr of) {
  auto s = std::make_shared<QoSpec>();
  s->kind = k;
  s->of = std::move(of);
  return s;
}

SpecPtr wrap2(QoSpec::Kind k, SpecPtr l, SpecPtr r) {
  auto s = std::make_shared<QoSpec>();
  s->kind = k;
  s->left = std::move(l);
  s->right = std::move(r);
  return s;
}

void validate_finite(const QoSpec& s) {
  const size_t n = s.names.size();
  if (n == 0) throw InputError("finite spec: names must be nonempty");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (s.names[i] == s.names[j])
        throw InputError("finite spec: duplicate name '" + s.names[i] + "'");
  if (s.table.size() != n)
    throw InputError("finite spec: leq table must have one row per name");
  for (const auto& row : s.table)
    if (row.size() != n)
      throw InputError("finite spec: leq table rows must match name count");
  for (size_t i = 0; i < n; ++i)
    if (!s.table[i][i])
      throw InputError("finite spec: not reflexive at '" + s.names[i] + "'");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (s.table[i][j] && s.table[j][k] && !s.table[i][k])
          throw InputError("finite spec: not transitive on ('" + s.names[i] +
                           "','" + s.names[j] + "','" + s.names[k] + "')");
}

// linord requires a total operand order.
void validate_total(const QoSpec& of) {
  if (of.kind != QoSpec::Kind::Finite)
    throw InputError("linord: operand must be a finite spec");
  const size_t n = of.names.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!of.table[i][j] && !of.table[j][i])
        throw InputError("linord: operand order is not total on ('" +
                         of.names[i] + "','" + of.names[j] + "')");
}

}  // namespace

SpecPtr make_finite_spec(std::vector<std::string> names,
                         std::vector<std::vector<bool>> table) {
  auto s = std::make_shared<QoSpec>();
  s->kind = QoSpec::Kind::Finite;
  s->names = std::move(names);
  s->table = std::move(table);
  validate_finite(*s);
  return s;
}

SpecPtr make_union_spec(SpecPtr l, SpecPtr r) {
  return wrap2(QoSpec::Kind::Union, std::move(l), std::move(r));
}
SpecPtr make_product_spec(SpecPtr l, SpecPtr r) {
  return wrap2(QoSpec::Kind::Product, std::move(l), std::move(r));
}
SpecPtr make_seq_spec(SpecPtr of) {
  return wrap1(QoSpec::Kind::Seq, std::move(of));
}
SpecPtr make_tree1_spec(SpecPtr of) {
  return wrap1(QoSpec::Kind::Tree1, std::move(of));
}
SpecPtr make_treem_spec(SpecPtr of) {
  return wrap1(QoSpec::Kind::TreeM, std::move(of));
}
SpecPtr make_finset_spec(SpecPtr of) {
  return wrap1(QoSpec::Kind::FinSet, std::move(of));
}
SpecPtr make_linord_spec(SpecPtr of) {
  validate_total(*of);
  return wrap1(QoSpec::Kind::LinOrd, std::move(of));
}

SpecPtr parse_spec(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("spec: expected an object with a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "finite") {
    if (!j.contains("names") || !j["names"].is_array())
      throw InputError("finite spec: missing 'names' array");
    if (!j.contains("leq") || !j["leq"].is_array())
      throw InputError("finite spec: missing 'leq' table");
    std::vector<std::string> names;
    for (const auto& v : j["names"]) {
      if (!v.is_string()) throw InputError("finite spec: names must be strings");
      names.push_back(v.get<std::string>());
    }
    std::vector<std::vector<bool>> table;
    for (const auto& row : j["leq"]) {
      if (!row.is_array()) throw InputError("finite spec: leq rows must be arrays");
      std::vector<bool> r;
      for (const auto& v : row) {
        if (!v.is_boolean()) throw InputError("finite spec: leq entries must be booleans");
        r.push_back(v.get<bool>());
      }
      table.push_back(std::move(r));
    }
    return make_finite_spec(std::move(names), std::move(table));
  }
  if (kind == "union" || kind == "product") {
    if (!j.contains("left") || !j.contains("right"))
      throw InputError(kind + " spec: needs 'left' and 'right'");
    auto l = parse_spec(j["left"]);
    auto r = parse_spec(j["right"]);
    return kind == "union" ? make_union_spec(l, r) : make_product_spec(l, r);
  }
  if (kind == "seq" || kind == "tree1" || kind == "treem" ||
      kind == "finset" || kind == "linord") {
    if (!j.contains("of")) throw InputError(kind + " spec: needs 'of'");
    auto of = parse_spec(j["of"]);
    if (kind == "seq") return make_seq_spec(of);
    if (kind == "tree1") return make_tree1_spec(of);
    if (kind == "treem") return make_treem_spec(of);
    if (kind == "finset") return make_finset_spec(of);
    return make_linord_spec(of);
  }
  throw InputError("spec: unknown kind '" + kind + "'");
}

SpecPtr parse_spec_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("spec: invalid JSON: ") + e.what());
  }
  return parse_spec(j);
}

SpecPtr load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("spec: cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

std::string spec_to_string(const QoSpec& spec) {
  switch (spec.kind) {
    case QoSpec::Kind::Finite: {
      std::string s = "finite{";
      for (size_t i = 0; i < spec.names.size(); ++i) {
        if (i) s += ",";
        s += spec.names[i];
      }
      return s + "}";
    }
    case QoSpec::Kind::Union:
      return "union(" + spec_to_string(*spec.left) + "," +
             spec_to_string(*spec.right) + ")";
    case QoSpec::Kind::Product:
      return "product(" + spec_to_string(*spec.left) + "," +
             spec_to_string(*spec.right) + ")";
    case QoSpec::Kind::Seq:
      return "seq(" + spec_to_string(*spec.of) + ")";
    case QoSpec::Kind::Tree1:
      return "tree1(" + spec_to_string(*spec.of) + ")";
    case QoSpec::Kind::TreeM:
      return "treem(" + spec_to_string(*spec.of) + ")";
    case QoSpec::Kind::FinSet:
      return "finset(" + spec_to_string(*spec.of) + ")";
    case QoSpec::Kind::LinOrd:
      return "linord(" + spec_to_string(*spec.of) + ")";
  }
  return "?";
}

int atom_index(const QoSpec& spec, const std::string& name) {
  if (spec.kind != QoSpec::Kind::Finite)
    throw InputError("atom lookup on a non-finite spec");
  for (size_t i = 0; i < spec.names.size(); ++i)
    if (spec.names[i] == name) return int(i);
  throw InputError("unknown atom '" + name + "'");
}

}  // namespace bqo
