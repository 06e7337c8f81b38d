#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bqo/colorer.hpp"
#include "bqo/spec.hpp"
#include "bqo/upseq.hpp"
#include "json.hpp"

namespace bqo {

struct GenBounds {
  int count = 100;
  int max_pre = 2;
  int max_per = 4;
  int max_size = 4;
};

// Seeded rejection sampling of canonical UP bad sequences within bounds.
// Deterministic for a given (spec, seed, bounds); returns fewer than count
// when the bounded space is exhausted (possibly none, e.g. well-orders).
std::vector<UpSeq> gen_bad(const QoSpec& spec, uint64_t seed,
                           const GenBounds& bounds);

// Every audit yields one JSON report; `passed` == no violations recorded.
// Reports are byte-stable for identical inputs.
using Report = nlohmann::ordered_json;

using ColorFn = std::function<ColorResult(const QoSpec&, const UpSeq&)>;

// For each generated sample X: color(X) and color(shift X) are defined, lie
// in {0,1,2}, and differ. Internal pipeline errors are recorded separately
// (their count must be zero for the suite to pass). The colorer is
// injectable so a deliberately broken one can be shown to fail the audit.
Report audit_properness(const QoSpec& spec, uint64_t seed,
                        const GenBounds& bounds, const ColorFn& colorer);
Report audit_properness(const QoSpec& spec, uint64_t seed,
                        const GenBounds& bounds);

// leq versus brute_force_leq on all element pairs up to the size bound.
Report audit_oracle_equiv(const QoSpec& spec, int bound);

// Shift identities of the derivative machinery on generated samples
// (profile, d_once, d_infty, witness), plus stability and idempotence of
// d_infty and badness of derived outputs. Samples not in_b are advanced to
// their entry point into in_b when one exists, else skipped.
Report audit_identities(const QoSpec& seq_spec, uint64_t seed,
                        const GenBounds& bounds);

// Compares injective tree embedding against subsequence embedding of the
// linearizations over all tree pairs up to the node bound. Violations in
// either direction are counted and exampled, each witness re-verified with
// brute_force_leq. "forward" = embeds but linearizations do not;
// "reverse" = does not embed but linearizations do.
Report audit_linearization(const QoSpec& label_spec, int node_bound);

// Exhaustive scan of every UP candidate within bounds, reporting how many
// are bad. For well-ordered specs the expected result is zero, reported as
// a pass with an explicit note.
Report audit_emptiness(const QoSpec& spec, const GenBounds& bounds);

// Shared CLI/report builders.
nlohmann::ordered_json derive_to_json(const QoSpec& spec, const UpSeq& x);

}  // namespace bqo
