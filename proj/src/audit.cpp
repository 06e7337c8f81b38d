#include "bqo/audit.hpp"

#include <set>
#include <string>

#include "bqo/derive.hpp"
#include "bqo/embed.hpp"
#include "bqo/error.hpp"
#include "bqo/order.hpp"
#include "bqo/rng.hpp"

namespace bqo {

using nlohmann::ordered_json;

namespace {

constexpr int kAttemptFactor = 64;
constexpr size_t kExampleCap = 20;

}  // namespace

std::vector<UpSeq> gen_bad(const QoSpec& spec, uint64_t seed,
                           const GenBounds& bounds) {
  std::vector<UpSeq> out;
  auto pool = enumerate_elements(spec, bounds.max_size);
  if (pool.empty()) return out;
  std::set<std::string> seen;
  const uint64_t attempts = uint64_t(bounds.count) * kAttemptFactor;
  for (uint64_t i = 0; i < attempts && out.size() < size_t(bounds.count); ++i) {
    Rng r(split_seed(seed, i));
    size_t pre_len = size_t(r.below(uint64_t(bounds.max_pre) + 1));
    size_t per_len = 1 + size_t(r.below(uint64_t(bounds.max_per)));
    std::vector<Element> pre, per;
    for (size_t k = 0; k < pre_len; ++k) pre.push_back(pool[r.below(pool.size())]);
    for (size_t k = 0; k < per_len; ++k) per.push_back(pool[r.below(pool.size())]);
    UpSeq x = make_up(std::move(pre), std::move(per));
    if (!is_bad(spec, x)) continue;
    if (!seen.insert(up_key(x)).second) continue;
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

ordered_json bounds_json(const GenBounds& b) {
  ordered_json j;
  j["count"] = b.count;
  j["max_pre"] = b.max_pre;
  j["max_per"] = b.max_per;
  j["max_size"] = b.max_size;
  return j;
}

void finish_report(Report& rep, bool passed) { rep["passed"] = passed; }

}  // namespace

Report audit_properness(const QoSpec& spec, uint64_t seed,
                        const GenBounds& bounds, const ColorFn& colorer) {
  Report rep;
  rep["suite"] = "properness";
  rep["spec"] = spec_to_string(spec);
  rep["seed"] = seed;
  rep["bounds"] = bounds_json(bounds);
  auto samples = gen_bad(spec, seed, bounds);
  rep["samples_valid"] = samples.size();
  ordered_json violations = ordered_json::array();
  ordered_json pipeline_errors = ordered_json::array();
  size_t vio_count = 0, err_count = 0;
  for (const UpSeq& x : samples) {
    try {
      ColorResult a = colorer(spec, x);
      ColorResult b = colorer(spec, shift(x));
      bool in_range = a.color >= 0 && a.color <= 2 && b.color >= 0 && b.color <= 2;
      if (!in_range || a.color == b.color) {
        ++vio_count;
        if (violations.size() < kExampleCap) {
          ordered_json v;
          v["x"] = up_to_json(spec, x);
          v["color"] = a.color;
          v["shift_color"] = b.color;
          violations.push_back(std::move(v));
        }
      }
    } catch (const PipelineBug& e) {
      ++err_count;
      if (pipeline_errors.size() < kExampleCap) {
        ordered_json v;
        v["x"] = up_to_json(spec, x);
        v["error"] = e.what();
        pipeline_errors.push_back(std::move(v));
      }
    }
  }
  rep["violation_count"] = vio_count;
  rep["violations"] = std::move(violations);
  rep["pipeline_error_count"] = err_count;
  rep["pipeline_errors"] = std::move(pipeline_errors);
  if (samples.empty())
    rep["note"] = "no bad sequences found within bounds (expected for well-orders)";
  finish_report(rep, vio_count == 0 && err_count == 0);
  return rep;
}

Report audit_properness(const QoSpec& spec, uint64_t seed,
                        const GenBounds& bounds) {
  return audit_properness(spec, seed, bounds,
                          [](const QoSpec& s, const UpSeq& x) { return color(s, x); });
}

Report audit_oracle_equiv(const QoSpec& spec, int bound) {
  Report rep;
  rep["suite"] = "oracle-equiv";
  rep["spec"] = spec_to_string(spec);
  rep["bound"] = bound;
  auto pool = enumerate_elements(spec, bound);
  rep["elements"] = pool.size();
  size_t pairs = 0, vio_count = 0;
  ordered_json violations = ordered_json::array();
  for (const Element& x : pool) {
    for (const Element& y : pool) {
      ++pairs;
      bool fast = leq(spec, x, y);
      bool brute = brute_force_leq(spec, x, y);
      if (fast != brute) {
        ++vio_count;
        if (violations.size() < kExampleCap) {
          ordered_json v;
          v["x"] = element_to_json(spec, x);
          v["y"] = element_to_json(spec, y);
          v["decider"] = fast;
          v["oracle"] = brute;
          violations.push_back(std::move(v));
        }
      }
    }
  }
  rep["pairs_checked"] = pairs;
  rep["violation_count"] = vio_count;
  rep["violations"] = std::move(violations);
  finish_report(rep, vio_count == 0);
  return rep;
}

Report audit_identities(const QoSpec& seq_spec, uint64_t seed,
                        const GenBounds& bounds) {
  if (!seq_like(seq_spec.kind))
    throw InputError("identities audit: spec must be seq-like");
  Report rep;
  rep["suite"] = "identities";
  rep["spec"] = spec_to_string(seq_spec);
  rep["seed"] = seed;
  rep["bounds"] = bounds_json(bounds);
  auto samples = gen_bad(seq_spec, seed, bounds);
  rep["samples_valid"] = samples.size();
  size_t eligible_b = 0, eligible_d = 0, eligible_w = 0, vio_count = 0;
  ordered_json violations = ordered_json::array();
  auto record = [&](const UpSeq& x, const char* check) {
    ++vio_count;
    if (violations.size() < kExampleCap) {
      ordered_json v;
      v["x"] = up_to_json(seq_spec, x);
      v["check"] = check;
      violations.push_back(std::move(v));
    }
  };
  for (const UpSeq& raw : samples) {
    // Advance into the nondecreasing-length regime when possible.
    auto e = entry_time(raw, [&](const UpSeq& z) { return in_b(seq_spec, z); });
    if (!e) continue;
    UpSeq x = shift_n(raw, *e);
    ++eligible_b;
    UpSeq sx = shift(x);

    DerivProfile p = deriv_profile(seq_spec, x);
    DerivProfile ps = deriv_profile(seq_spec, sx);
    if (!(ps.m == shift(p.m) && ps.n == shift(p.n)))
      record(x, "profile-shift");

    UpSeq z = d_infty(seq_spec, x);
    if (!(d_infty(seq_spec, sx) == shift(z))) record(x, "d-infty-shift");
    if (!in_stab_set(seq_spec, z)) record(x, "d-infty-stability");
    if (!(d_infty(seq_spec, z) == z)) record(x, "d-infty-idempotence");

    if (is_derivable(seq_spec, x)) {
      ++eligible_d;
      UpSeq dx = d_once(seq_spec, x);
      if (!(d_once(seq_spec, sx) == shift(dx))) record(x, "d-once-shift");
      if (!is_bad(seq_spec, dx)) record(x, "d-once-badness");
      if (!in_b(seq_spec, dx)) record(x, "d-once-lengths");
      if (!(max_derivability(seq_spec, sx) >= max_derivability(seq_spec, x)))
        record(x, "max-derivability-monotone");
    }
    if (witness_eligible(seq_spec, x)) {
      ++eligible_w;
      UpSeq y = witness_extract(seq_spec, x);
      if (!is_bad(*seq_spec.of, y)) record(x, "witness-badness");
      if (witness_eligible(seq_spec, sx)) {
        if (!(witness_extract(seq_spec, sx) == shift(y)))
          record(x, "witness-shift");
      }
    }
  }
  ordered_json elig;
  elig["in_b"] = eligible_b;
  elig["derivable"] = eligible_d;
  elig["witness"] = eligible_w;
  rep["eligible"] = std::move(elig);
  rep["violation_count"] = vio_count;
  rep["violations"] = std::move(violations);
  finish_report(rep, vio_count == 0);
  return rep;
}

Report audit_linearization(const QoSpec& label_spec, int node_bound) {
  Report rep;
  rep["suite"] = "linearization";
  SpecPtr tree_spec = make_tree1_spec(
      std::make_shared<QoSpec>(label_spec));
  SpecPtr seq_spec = make_seq_spec(tree_spec->of);
  rep["spec"] = spec_to_string(*tree_spec);
  rep["bound"] = node_bound;
  auto trees = enumerate_elements(*tree_spec, node_bound);
  rep["trees"] = trees.size();
  std::vector<Element> lins;
  lins.reserve(trees.size());
  for (const Element& t : trees) lins.push_back(linearize_tree(t));
  size_t pairs = 0, fwd = 0, rev = 0;
  bool all_verified = true;
  ordered_json fwd_ex = ordered_json::array();
  ordered_json rev_ex = ordered_json::array();
  for (size_t i = 0; i < trees.size(); ++i) {
    for (size_t j = 0; j < trees.size(); ++j) {
      ++pairs;
      bool embeds = le_tree_inj(*tree_spec->of, trees[i], trees[j]).has_value();
      bool lin_embeds =
          le_higman(*tree_spec->of, lins[i].kids, lins[j].kids).has_value();
      if (embeds == lin_embeds) continue;
      // Re-verify both sides of the discrepancy with the oracle.
      bool ok = brute_force_leq(*tree_spec, trees[i], trees[j]) == embeds &&
                brute_force_leq(*seq_spec, lins[i], lins[j]) == lin_embeds;
      all_verified = all_verified && ok;
      ordered_json v;
      v["s"] = element_to_json(*tree_spec, trees[i]);
      v["t"] = element_to_json(*tree_spec, trees[j]);
      v["s_lin"] = element_to_json(*seq_spec, lins[i]);
      v["t_lin"] = element_to_json(*seq_spec, lins[j]);
      v["brute_verified"] = ok;
      if (embeds) {
        ++fwd;
        if (fwd_ex.size() < kExampleCap) fwd_ex.push_back(std::move(v));
      } else {
        ++rev;
        if (rev_ex.size() < kExampleCap) rev_ex.push_back(std::move(v));
      }
    }
  }
  rep["pairs_checked"] = pairs;
  rep["forward_violations"] = fwd;  // embeds, but linearizations do not
  rep["reverse_violations"] = rev;  // does not embed, but linearizations do
  ordered_json ex;
  ex["forward"] = std::move(fwd_ex);
  ex["reverse"] = std::move(rev_ex);
  rep["examples"] = std::move(ex);
  rep["all_witnesses_brute_verified"] = all_verified;
  finish_report(rep, fwd == 0 && rev == 0);
  return rep;
}

Report audit_emptiness(const QoSpec& spec, const GenBounds& bounds) {
  Report rep;
  rep["suite"] = "emptiness";
  rep["spec"] = spec_to_string(spec);
  rep["bounds"] = bounds_json(bounds);
  auto pool = enumerate_elements(spec, bounds.max_size);
  rep["pool"] = pool.size();
  size_t scanned = 0, bad_found = 0;
  std::set<std::string> seen;
  ordered_json examples = ordered_json::array();
  // Every preperiod/period combination within bounds, exhaustively.
  std::vector<Element> buf;
  auto scan = [&](auto&& self, size_t pre_len, size_t per_len) -> void {
    if (buf.size() == pre_len + per_len) {
      ++scanned;
      UpSeq x = make_up(std::vector<Element>(buf.begin(), buf.begin() + long(pre_len)),
                        std::vector<Element>(buf.begin() + long(pre_len), buf.end()));
      if (!is_bad(spec, x)) return;
      if (!seen.insert(up_key(x)).second) return;
      ++bad_found;
      if (examples.size() < kExampleCap)
        examples.push_back(up_to_json(spec, x));
      return;
    }
    for (const Element& e : pool) {
      buf.push_back(e);
      self(self, pre_len, per_len);
      buf.pop_back();
    }
  };
  for (size_t pre_len = 0; pre_len <= size_t(bounds.max_pre); ++pre_len)
    for (size_t per_len = 1; per_len <= size_t(bounds.max_per); ++per_len)
      scan(scan, pre_len, per_len);
  rep["candidates_scanned"] = scanned;
  rep["bad_found"] = bad_found;
  rep["examples"] = std::move(examples);
  if (bad_found == 0)
    rep["note"] = "no UP bad sequences exist within bounds";
  finish_report(rep, bad_found == 0);
  return rep;
}

ordered_json derive_to_json(const QoSpec& spec, const UpSeq& x) {
  if (!seq_like(spec.kind))
    throw InputError("derive: spec must carry sequence elements");
  if (!is_bad(spec, x)) throw InputError("derive: the sequence is not bad");
  if (!in_b(spec, x))
    throw InputError("derive: member lengths must be nondecreasing");
  ordered_json j;
  j["x"] = up_to_json(spec, x);
  j["in_b"] = true;
  DerivProfile p = deriv_profile(spec, x);
  ordered_json pj;
  pj["m"] = up_scalar_to_json(p.m);
  pj["n"] = up_scalar_to_json(p.n);
  j["profile"] = std::move(pj);
  int md = max_derivability(spec, x);
  j["max_derivability"] = md;
  ordered_json chain = ordered_json::array();
  UpSeq cur = x;
  chain.push_back(up_to_json(spec, cur));
  for (int i = 0; i < md; ++i) {
    cur = d_once(spec, cur);
    chain.push_back(up_to_json(spec, cur));
  }
  j["chain"] = std::move(chain);
  UpSeq z = d_infty(spec, x);
  j["d_infty"] = up_to_json(spec, z);
  if (witness_eligible(spec, z))
    j["witness"] = up_to_json(*spec.of, witness_extract(spec, z));
  else
    j["witness"] = nullptr;
  return j;
}

}  // namespace bqo
