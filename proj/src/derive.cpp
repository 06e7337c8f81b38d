#include "bqo/derive.hpp"

#include <algorithm>
#include <map>

#include "bqo/embed.hpp"
#include "bqo/error.hpp"
#include "bqo/order.hpp"
#include "bqo/upseq.hpp"

namespace bqo {

namespace {

void require_bad(const QoSpec& spec, const UpSeq& x, const char* op) {
  if (!seq_like(spec.kind))
    throw InputError(std::string(op) + ": spec must carry sequence elements");
  if (!is_bad(spec, x))
    throw InputError(std::string(op) + ": sequence is not bad");
}

std::pair<int, int> stats_at(const QoSpec& spec, const UpSeq& x, size_t k) {
  return higman_prefix_stats(*spec.of, x.at(k).kids, x.at(k + 1).kids);
}

}  // namespace

std::pair<int, int> mk_nk(const QoSpec& spec, const UpSeq& x, size_t k) {
  require_bad(spec, x, "profile");
  return stats_at(spec, x, k);
}

DerivProfile deriv_profile(const QoSpec& spec, const UpSeq& x) {
  require_bad(spec, x, "profile");
  std::vector<int> mp, np, mq, nq;
  for (size_t k = 0; k < x.pre.size(); ++k) {
    auto [m, n] = stats_at(spec, x, k);
    mp.push_back(m);
    np.push_back(n);
  }
  for (size_t k = x.pre.size(); k < x.state_count(); ++k) {
    auto [m, n] = stats_at(spec, x, k);
    mq.push_back(m);
    nq.push_back(n);
  }
  return {make_up(std::move(mp), std::move(mq)),
          make_up(std::move(np), std::move(nq))};
}

bool is_derivable(const QoSpec& spec, const UpSeq& x) {
  require_bad(spec, x, "derivability");
  // One window of raw positions covers every state pair.
  for (size_t k = 0; k <= x.state_count(); ++k) {
    auto [m0, n0] = stats_at(spec, x, k);
    auto [m1, n1] = stats_at(spec, x, k + 1);
    if (!(m0 <= m1 && m1 < n0 && n0 <= n1)) return false;
  }
  return true;
}

UpSeq d_once(const QoSpec& spec, const UpSeq& x) {
  if (!is_derivable(spec, x))
    throw InputError("derivation step: sequence is not derivable");
  auto truncated = [&](size_t k) {
    auto [m, n] = stats_at(spec, x, k);
    (void)n;
    const auto& kids = x.at(k).kids;
    return el_seq(std::vector<Element>(kids.begin(), kids.begin() + m));
  };
  std::vector<Element> pre, per;
  for (size_t k = 0; k < x.pre.size(); ++k) pre.push_back(truncated(k));
  for (size_t k = x.pre.size(); k < x.state_count(); ++k)
    per.push_back(truncated(k));
  return make_up(std::move(pre), std::move(per));
}

int max_derivability(const QoSpec& spec, const UpSeq& x) {
  require_bad(spec, x, "max derivability");
  UpSeq cur = x;
  int steps = 0;
  while (is_derivable(spec, cur)) {
    cur = d_once(spec, cur);
    ++steps;
  }
  return steps;
}

UpSeq d_infty(const QoSpec& spec, const UpSeq& x) {
  require_bad(spec, x, "stabilization");
  auto stabilized_head = [&](UpSeq z) {
    int m = max_derivability(spec, z);
    for (int i = 0; i < m; ++i) z = d_once(spec, z);
    return z.at(0);
  };
  std::vector<Element> pre, per;
  UpSeq cur = x;
  for (size_t k = 0; k < x.pre.size(); ++k) {
    pre.push_back(stabilized_head(cur));
    cur = shift(cur);
  }
  for (size_t k = 0; k < x.per.size(); ++k) {
    per.push_back(stabilized_head(cur));
    cur = shift(cur);
  }
  return make_up(std::move(pre), std::move(per));
}

bool in_stab_set(const QoSpec& spec, const UpSeq& x) {
  require_bad(spec, x, "stability");
  UpSeq cur = x;
  for (size_t k = 0; k <= x.state_count(); ++k) {
    if (is_derivable(spec, cur)) return false;
    cur = shift(cur);
  }
  return true;
}

bool witness_eligible(const QoSpec& spec, const UpSeq& x) {
  require_bad(spec, x, "witness");
  for (size_t k = 0; k <= x.state_count(); ++k) {
    auto [m0, n0] = stats_at(spec, x, k);
    auto [m1, n1] = stats_at(spec, x, k + 1);
    (void)n1;
    if (m1 < n0) return false;
  }
  return true;
}

UpSeq witness_extract(const QoSpec& spec, const UpSeq& x) {
  if (!witness_eligible(spec, x))
    throw InputError("witness: side condition m_{k+1} >= n_k fails");
  auto picked = [&](size_t k) {
    auto [m, n] = stats_at(spec, x, k);
    (void)n;
    // Badness makes m < |X(k)|, so the member at offset m exists.
    return x.at(k).kids.at(size_t(m));
  };
  std::vector<Element> pre, per;
  for (size_t k = 0; k < x.pre.size(); ++k) pre.push_back(picked(k));
  for (size_t k = x.pre.size(); k < x.state_count(); ++k) per.push_back(picked(k));
  return make_up(std::move(pre), std::move(per));
}

std::vector<Element> fill_closure(const QoSpec& label_spec,
                                  std::vector<Element> r) {
  std::map<std::string, Element> all;
  for (auto& e : r) {
    if (e.kind != Element::Kind::Seq)
      throw InputError("fill closure: members must be sequences");
    all.try_emplace(canonical_encode(e), std::move(e));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const Element*> snapshot;
    for (const auto& [_, e] : all) snapshot.push_back(&e);
    for (const Element* s : snapshot) {
      for (const Element* t : snapshot) {
        auto [m, n] = higman_prefix_stats(label_spec, s->kids, t->kids);
        Element sm = el_seq(std::vector<Element>(s->kids.begin(), s->kids.begin() + m));
        Element tn = el_seq(std::vector<Element>(t->kids.begin(), t->kids.begin() + n));
        grew |= all.try_emplace(canonical_encode(sm), std::move(sm)).second;
        grew |= all.try_emplace(canonical_encode(tn), std::move(tn)).second;
      }
    }
  }
  std::vector<Element> out;
  for (auto& [_, e] : all) out.push_back(e);
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

}  // namespace bqo
