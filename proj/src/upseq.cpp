#include "bqo/upseq.hpp"

#include "bqo/order.hpp"

namespace bqo {

using nlohmann::ordered_json;

BitWord phi_pattern(const UpSeq& x, const Relation& phi) {
  auto value_at = [&](size_t k) -> uint8_t {
    std::vector<Element> window;
    window.reserve(phi.arity);
    for (size_t i = 0; i < phi.arity; ++i) window.push_back(x.at(k + i));
    return phi.eval(window) ? 1 : 0;
  };
  std::vector<uint8_t> pre, per;
  for (size_t k = 0; k < x.pre.size(); ++k) pre.push_back(value_at(k));
  for (size_t k = x.pre.size(); k < x.pre.size() + x.per.size(); ++k)
    per.push_back(value_at(k));
  return make_up(std::move(pre), std::move(per));
}

std::optional<size_t> entry_time(const UpSeq& x,
                                 const std::function<bool(const UpSeq&)>& member) {
  UpSeq cur = x;
  const size_t limit = x.state_count();
  for (size_t k = 0; k <= limit; ++k) {
    if (member(cur)) return k;
    cur = shift(cur);
  }
  return std::nullopt;
}

bool is_bad(const QoSpec& spec, const UpSeq& x) {
  for (size_t k = 0; k <= x.state_count(); ++k)
    if (leq(spec, x.at(k), x.at(k + 1))) return false;
  return true;
}

bool in_b(const QoSpec& spec, const UpSeq& x) {
  if (!seq_like(spec.kind))
    throw InputError("in_b: spec must carry sequence elements");
  for (size_t k = 0; k <= x.state_count(); ++k)
    if (x.at(k).kids.size() > x.at(k + 1).kids.size()) return false;
  return true;
}

std::string up_key(const UpSeq& x) {
  std::string key;
  key += char('0' + x.pre.size() % 10);  // sizes are single-digit at our bounds
  key += char('0' + x.pre.size() / 10);
  for (const auto& e : x.pre) {
    std::string enc = canonical_encode(e);
    key += char(enc.size());
    key += enc;
  }
  key += '|';
  for (const auto& e : x.per) {
    std::string enc = canonical_encode(e);
    key += char(enc.size());
    key += enc;
  }
  return key;
}

UpSeq up_from_json(const QoSpec& spec, const ordered_json& j) {
  if (!j.is_object() || !j.contains("pre") || !j.contains("per") ||
      !j["pre"].is_array() || !j["per"].is_array())
    throw InputError("up word: expected {\"pre\":[...],\"per\":[...]}");
  std::vector<Element> pre, per;
  for (const auto& e : j["pre"]) pre.push_back(element_from_json(spec, e));
  for (const auto& e : j["per"]) per.push_back(element_from_json(spec, e));
  return make_up(std::move(pre), std::move(per));
}

ordered_json up_to_json(const QoSpec& spec, const UpSeq& x) {
  ordered_json j;
  j["pre"] = ordered_json::array();
  for (const auto& e : x.pre) j["pre"].push_back(element_to_json(spec, e));
  j["per"] = ordered_json::array();
  for (const auto& e : x.per) j["per"].push_back(element_to_json(spec, e));
  return j;
}

}  // namespace bqo
