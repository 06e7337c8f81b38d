// Shared spec/element builders for the test binaries.
#pragma once

#include <string>
#include <vector>

#include "bqo/element.hpp"
#include "bqo/spec.hpp"
#include "bqo/upseq.hpp"

namespace zoo {

using namespace bqo;

inline SpecPtr a2() {
  return make_finite_spec({"a", "b"}, {{true, false}, {false, true}});
}

inline SpecPtr antichain(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  std::vector<std::vector<bool>> t(size_t(n), std::vector<bool>(size_t(n), false));
  for (int i = 0; i < n; ++i) t[size_t(i)][size_t(i)] = true;
  return make_finite_spec(std::move(names), std::move(t));
}

inline SpecPtr chain(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  std::vector<std::vector<bool>> t(size_t(n), std::vector<bool>(size_t(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) t[size_t(i)][size_t(j)] = true;
  return make_finite_spec(std::move(names), std::move(t));
}

// Three pairwise-incomparable labels named to match the adversarial example.
inline SpecPtr abc0() {
  return make_finite_spec({"a", "b", "c0"},
                          {{true, false, false},
                           {false, true, false},
                           {false, false, true}});
}

// {a,b,p,q} with a <= q and b <= p (plus reflexivity).
inline SpecPtr quad_pq() {
  return make_finite_spec({"a", "b", "p", "q"},
                          {{true, false, false, true},
                           {false, true, true, false},
                           {false, false, true, false},
                           {false, false, false, true}});
}

inline Element at(const SpecPtr& finite, const std::string& name) {
  return el_atom(*finite, name);
}

// Sequence of atoms by name over a finite label spec.
inline Element word(const SpecPtr& labels, const std::string& names) {
  std::vector<Element> kids;
  for (char c : names) kids.push_back(el_atom(*labels, std::string(1, c)));
  return el_seq(std::move(kids));
}

inline UpSeq up(std::vector<Element> pre, std::vector<Element> per) {
  return make_up(std::move(pre), std::move(per));
}

}  // namespace zoo
