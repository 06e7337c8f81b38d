#pragma once

#include <vector>

#include "bqo/element.hpp"
#include "bqo/spec.hpp"
#include "bqo/upseq.hpp"

namespace bqo {

// The machinery below lives on bad sequences over a seq-like spec (the
// coloring pipeline additionally steps into the nondecreasing-length piece,
// in_b, before using it). For such X and every k:
//   m_k = largest prefix length of X(k) that embeds into X(k+1)
//   n_k = least end position with X(k)[0..m_k) embedding into X(k+1)[0..n_k)
// Both are read off one greedy matching pass.

struct DerivProfile {
  UpWord<int> m, n;

  bool operator==(const DerivProfile&) const = default;
};

// (m_k, n_k) at one position. Requires is_bad and in_b.
std::pair<int, int> mk_nk(const QoSpec& spec, const UpSeq& x, size_t k);

// The full profile as canonical UP words over naturals.
DerivProfile deriv_profile(const QoSpec& spec, const UpSeq& x);

// Whether one derivation step applies: m_k <= m_{k+1} < n_k <= n_{k+1} for
// every k (the scan over one preperiod + period window is complete).
bool is_derivable(const QoSpec& spec, const UpSeq& x);

// One derivation step: k -> X(k)[0..m_k). Requires is_derivable; the output
// is again bad and in_b.
UpSeq d_once(const QoSpec& spec, const UpSeq& x);

// Number of derivation steps until no longer derivable. Finite because the
// first member strictly shortens each step.
int max_derivability(const QoSpec& spec, const UpSeq& x);

// The stabilized sequence: k -> (d^{M_k}(shift^k X))(0) where M_k is the
// max derivability of shift^k(X). Commutes with the shift exactly; its
// output has no derivable shift and is a fixed point of d_infty.
UpSeq d_infty(const QoSpec& spec, const UpSeq& x);

// No shift of x admits a derivation step (and x is in_b).
bool in_stab_set(const QoSpec& spec, const UpSeq& x);

// Side condition for witness extraction: m_{k+1} >= n_k for all k.
bool witness_eligible(const QoSpec& spec, const UpSeq& x);

// The label word k -> X(k)[m_k] (0-indexed member at offset m_k). Under the
// side condition it is a bad sequence over the label order and commutes
// with the shift.
UpSeq witness_extract(const QoSpec& spec, const UpSeq& x);

// Least superset of R closed under adding s[0..m) and t[0..n) for every
// ordered pair (s, t) in it, with (m, n) the prefix stats above. Terminates
// because everything added is a prefix of an input. Input/output sorted by
// canonical encoding, duplicates removed.
std::vector<Element> fill_closure(const QoSpec& label_spec,
                                  std::vector<Element> r);

}  // namespace bqo
