#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bqo/element.hpp"
#include "bqo/error.hpp"
#include "bqo/spec.hpp"
#include "json.hpp"

namespace bqo {

// An ultimately periodic infinite word pre . per^omega in canonical form:
// per is primitive (not a proper power) and pre is the shortest preperiod
// presenting the same word. Canonical forms are equal iff the words are.
template <typename T>
struct UpWord {
  std::vector<T> pre;
  std::vector<T> per;

  bool operator==(const UpWord&) const = default;

  const T& at(size_t k) const {
    if (k < pre.size()) return pre[k];
    return per[(k - pre.size()) % per.size()];
  }

  // Number of distinct shift states; every question about the orbit is
  // settled by scanning k in [0, state_count()].
  size_t state_count() const { return pre.size() + per.size(); }
};

template <typename T>
UpWord<T> make_up(std::vector<T> pre, std::vector<T> per) {
  if (per.empty()) throw InputError("up word: period must be nonempty");
  // Primitive root: the shortest divisor period of a word is primitive.
  size_t p = per.size();
  for (size_t d = 1; d <= p / 2; ++d) {
    if (p % d) continue;
    bool rep = true;
    for (size_t i = d; i < p && rep; ++i) rep = (per[i] == per[i % d]);
    if (rep) {
      per.resize(d);
      break;
    }
  }
  // Shortest preperiod: while the last preperiod letter coincides with the
  // last period letter, absorb it by rotating the period right.
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    per.insert(per.begin(), per.back());
    per.pop_back();
  }
  return UpWord<T>{std::move(pre), std::move(per)};
}

// Drops the first letter. Canonical in, canonical out: removing the head of
// the preperiod cannot break its minimality, and rotations of a primitive
// word are primitive.
template <typename T>
UpWord<T> shift(const UpWord<T>& x) {
  if (!x.pre.empty())
    return UpWord<T>{std::vector<T>(x.pre.begin() + 1, x.pre.end()), x.per};
  std::vector<T> rot(x.per.begin() + 1, x.per.end());
  rot.push_back(x.per.front());
  return UpWord<T>{{}, std::move(rot)};
}

template <typename T>
UpWord<T> shift_n(UpWord<T> x, size_t n) {
  for (size_t i = 0; i < n; ++i) x = shift(x);
  return x;
}

// Letter-wise image, re-canonicalized (maps can merge letters and so break
// primitivity or preperiod minimality).
template <typename T, typename F>
auto map_word(const UpWord<T>& x, F f) -> UpWord<decltype(f(x.per[0]))> {
  using U = decltype(f(x.per[0]));
  std::vector<U> pre, per;
  pre.reserve(x.pre.size());
  per.reserve(x.per.size());
  for (const T& v : x.pre) pre.push_back(f(v));
  for (const T& v : x.per) per.push_back(f(v));
  return make_up(std::move(pre), std::move(per));
}

using UpSeq = UpWord<Element>;
using BitWord = UpWord<uint8_t>;

// A windowed property of consecutive letters, evaluated along the word.
struct Relation {
  std::string name;
  size_t arity = 1;
  std::function<bool(std::span<const Element>)> eval;
};

// The 0/1 word k -> phi(x(k), ..., x(k + arity - 1)), canonicalized. The
// image is ultimately periodic with the input's parameters before
// canonicalization, so positions [0, |pre| + |per|) determine it.
BitWord phi_pattern(const UpSeq& x, const Relation& phi);

// Least k with member(shift^k(x)), scanning k in [0, state_count()];
// nullopt when no state of the orbit satisfies it. `member` must describe a
// shift-closed set for the result to mean "entry time".
std::optional<size_t> entry_time(const UpSeq& x,
                                 const std::function<bool(const UpSeq&)>& member);

// No consecutive pair embeds: x(k) </= x(k+1) for all k.
bool is_bad(const QoSpec& spec, const UpSeq& x);

// Member lengths never decrease (seq-like specs only): the domain of the
// derivative machinery.
bool in_b(const QoSpec& spec, const UpSeq& x);

// Injective key for deduplicating canonical words.
std::string up_key(const UpSeq& x);

// Wire format {"pre":[ELEM,...],"per":[ELEM,...]}.
UpSeq up_from_json(const QoSpec& spec, const nlohmann::ordered_json& j);
nlohmann::ordered_json up_to_json(const QoSpec& spec, const UpSeq& x);

template <typename T>
nlohmann::ordered_json up_scalar_to_json(const UpWord<T>& w) {
  nlohmann::ordered_json j;
  j["pre"] = nlohmann::ordered_json::array();
  for (const T& v : w.pre) j["pre"].push_back(static_cast<long long>(v));
  j["per"] = nlohmann::ordered_json::array();
  for (const T& v : w.per) j["per"].push_back(static_cast<long long>(v));
  return j;
}

}  // namespace bqo
