#pragma once

#include <functional>
#include <vector>

#include "bqo/element.hpp"
#include "bqo/error.hpp"
#include "bqo/upseq.hpp"

namespace bqo {

// Colors are 0, 1, 2 throughout.

// Proper 3-coloring of the shift orbit of any UP word with eventual period
// >= 2, from the rotation structure alone:
//   pure word (empty preperiod): let base be the lexicographically least
//   rotation of the period and i the offset with rot_i(base) = per; the
//   color is i mod 2, except offset p-1 of an odd cycle takes 2.
//   nonempty preperiod: one more than the shifted word's color, mod 3.
// `less` must be a strict total order on letters.
template <typename T, typename Less>
int cycle_color(const UpWord<T>& x, Less less) {
  const size_t p = x.per.size();
  if (p < 2)
    throw InputError(x.pre.empty()
                         ? "cycle color: word is shift-fixed"
                         : "cycle color: eventual period is a single letter");
  // Least rotation by brute comparison; p is tiny here.
  auto rot_less = [&](size_t a, size_t b) {
    for (size_t i = 0; i < p; ++i) {
      const T& u = x.per[(a + i) % p];
      const T& v = x.per[(b + i) % p];
      if (less(u, v)) return true;
      if (less(v, u)) return false;
    }
    return false;
  };
  size_t best = 0;
  for (size_t j = 1; j < p; ++j)
    if (rot_less(j, best)) best = j;
  size_t i = (p - best) % p;  // per == rot_i(least rotation)
  int pure = (p % 2 == 0 || i < p - 1) ? int(i % 2) : 2;
  return int((pure + x.pre.size()) % 3);
}

int cycle_color(const UpSeq& x);
int cycle_color(const BitWord& x);

using SeqColorer = std::function<int(const UpSeq&)>;

// Colors X by coloring f(X); f must commute with the shift for the result
// to stay proper. With audit = true each call verifies f(shift X) ==
// shift(f X) on the given input and throws PipelineBug on a mismatch.
SeqColorer pullback_color(std::function<UpSeq(const UpSeq&)> f,
                          SeqColorer base, bool audit = false);

// Colors a point whose orbit enters the shift-closed set `member` after
// finitely many steps: each step before entry adds 1 mod 3 to the entry
// point's color. Throws InputError when the orbit never enters.
SeqColorer tail_color(std::function<bool(const UpSeq&)> member,
                      SeqColorer piece);

// Sanity check for pullback maps: on every supplied pair, q </= p in the
// source must imply f(q) </= f(p) in the target.
struct PullbackViolation {
  Element q, p, fq, fp;
};
struct PullbackReport {
  int pairs_checked = 0;
  std::vector<PullbackViolation> violations;
};
PullbackReport monotone_pullback_check(
    const std::function<Element(const Element&)>& f, const QoSpec& src,
    const QoSpec& dst, const std::vector<std::pair<Element, Element>>& pairs);

}  // namespace bqo
