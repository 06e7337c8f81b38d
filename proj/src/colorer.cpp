#include "bqo/colorer.hpp"

#include <algorithm>

#include "bqo/derive.hpp"
#include "bqo/embed.hpp"
#include "bqo/error.hpp"
#include "bqo/order.hpp"
#include "bqo/shiftgraph.hpp"

namespace bqo {

using nlohmann::ordered_json;

Element linearize_tree(const Element& tree) {
  if (tree.kind != Element::Kind::Tree)
    throw InputError("linearize: not a tree element");
  std::vector<Element> out;
  auto dfs = [&](auto&& self, const Element& t) -> void {
    out.push_back(t.kids[0]);
    std::vector<const Element*> children;
    for (size_t i = 1; i < t.kids.size(); ++i) children.push_back(&t.kids[i]);
    std::sort(children.begin(), children.end(),
              [](const Element* a, const Element* b) { return element_less(*a, *b); });
    for (const Element* c : children) self(self, *c);
  };
  dfs(dfs, tree);
  return el_seq(std::move(out));
}

namespace {

// How a windowed 0/1 factor splits an orbit. The pattern is canonical, so
// "eventually constant" is simply a one-letter period, and the number of
// tail steps to the constant regime is the pattern's preperiod length
// (a canonical preperiod never ends in the period letter).
struct Split {
  enum class Take { Binary, Hom, Antihom } take;
  BitWord pattern;
  size_t steps = 0;
};

Split split_on(const UpSeq& x, const Relation& phi) {
  BitWord pat = phi_pattern(x, phi);
  if (pat.per.size() >= 2) return {Split::Take::Binary, std::move(pat), 0};
  Split s{pat.per[0] ? Split::Take::Hom : Split::Take::Antihom, {}, 0};
  s.steps = pat.pre.size();
  s.pattern = std::move(pat);
  return s;
}

void log_branch(ordered_json& trace, const char* branch) {
  ordered_json e;
  e["branch"] = branch;
  trace.push_back(std::move(e));
}

void log_binary(ordered_json& trace, const char* on, const BitWord& pat) {
  ordered_json e;
  e["branch"] = "binary-factor";
  e["on"] = on;
  e["pattern"] = up_scalar_to_json(pat);
  trace.push_back(std::move(e));
}

void log_tail(ordered_json& trace, const char* on, size_t steps) {
  ordered_json e;
  e["branch"] = "tail-step";
  e["on"] = on;
  e["steps"] = steps;
  trace.push_back(std::move(e));
}

int eval_color(const QoSpec& spec, const UpSeq& x, ordered_json& trace);

int eval_union(const QoSpec& spec, const UpSeq& x, ordered_json& trace) {
  Relation side{"union-side", 1, [](std::span<const Element> w) {
                  return w[0].kind == Element::Kind::Left;
                }};
  Split sp = split_on(x, side);
  if (sp.take == Split::Take::Binary) {
    log_binary(trace, "union-side", sp.pattern);
    return cycle_color(sp.pattern);
  }
  if (sp.steps) log_tail(trace, "union-side", sp.steps);
  UpSeq x2 = shift_n(x, sp.steps);
  UpSeq inner = map_word(x2, [](const Element& e) { return e.kids[0]; });
  if (sp.take == Split::Take::Hom) {
    log_branch(trace, "left");
    return int((eval_color(*spec.left, inner, trace) + sp.steps) % 3);
  }
  log_branch(trace, "right");
  return int((eval_color(*spec.right, inner, trace) + sp.steps) % 3);
}

int eval_product(const QoSpec& spec, const UpSeq& x, ordered_json& trace) {
  const QoSpec* lspec = spec.left.get();
  Relation first_le{"product-first", 2, [lspec](std::span<const Element> w) {
                      return leq(*lspec, w[0].kids[0], w[1].kids[0]);
                    }};
  Split sp = split_on(x, first_le);
  if (sp.take == Split::Take::Binary) {
    log_binary(trace, "product-first", sp.pattern);
    return cycle_color(sp.pattern);
  }
  if (sp.steps) log_tail(trace, "product-first", sp.steps);
  UpSeq x2 = shift_n(x, sp.steps);
  // First coordinates eventually comparable along the word: badness is then
  // carried entirely by the second coordinates, and vice versa.
  if (sp.take == Split::Take::Hom) {
    log_branch(trace, "pi2");
    UpSeq inner = map_word(x2, [](const Element& e) { return e.kids[1]; });
    return int((eval_color(*spec.right, inner, trace) + sp.steps) % 3);
  }
  log_branch(trace, "pi1");
  UpSeq inner = map_word(x2, [](const Element& e) { return e.kids[0]; });
  return int((eval_color(*spec.left, inner, trace) + sp.steps) % 3);
}

int eval_seq(const QoSpec& spec, const UpSeq& x0, ordered_json& trace) {
  const QoSpec* of = spec.of.get();
  size_t off = 0;
  UpSeq x = x0;

  Relation len_le{"len", 2, [](std::span<const Element> w) {
                    return w[0].kids.size() <= w[1].kids.size();
                  }};
  Split sp = split_on(x, len_le);
  if (sp.take == Split::Take::Binary) {
    log_binary(trace, "len", sp.pattern);
    return cycle_color(sp.pattern);
  }
  if (sp.take == Split::Take::Antihom)
    throw PipelineBug(
        "well-foundedness breach: member lengths eventually strictly decrease");
  if (sp.steps) {
    log_tail(trace, "len", sp.steps);
    x = shift_n(x, sp.steps);
    off += sp.steps;
  }
  log_branch(trace, "B");

  UpSeq z = d_infty(spec, x);
  log_branch(trace, "d-infty");

  auto stats = [of](const Element& a, const Element& b) {
    return higman_prefix_stats(*of, a.kids, b.kids);
  };
  struct Stage {
    const char* name;
    Relation rel;
    const char* bug;
  };
  Stage stages[] = {
      {"m-mono",
       {"m-mono", 3,
        [stats](std::span<const Element> w) {
          return stats(w[0], w[1]).first <= stats(w[1], w[2]).first;
        }},
       "empty piece: prefix statistic strictly decreases forever"},
      {"n-mono",
       {"n-mono", 3,
        [stats](std::span<const Element> w) {
          return stats(w[0], w[1]).second <= stats(w[1], w[2]).second;
        }},
       "empty piece: end statistic strictly decreases forever"},
      {"psi",
       {"psi", 3,
        [stats](std::span<const Element> w) {
          return stats(w[1], w[2]).first >= stats(w[0], w[1]).second;
        }},
       "empty piece: stabilized sequence admits a derivation step"},
  };
  for (const Stage& st : stages) {
    Split s2 = split_on(z, st.rel);
    if (s2.take == Split::Take::Binary) {
      log_binary(trace, st.name, s2.pattern);
      return int((cycle_color(s2.pattern) + off) % 3);
    }
    if (s2.take == Split::Take::Antihom) throw PipelineBug(st.bug);
    if (s2.steps) {
      log_tail(trace, st.name, s2.steps);
      z = shift_n(z, s2.steps);
      off += s2.steps;
    }
  }

  log_branch(trace, "witness");
  UpSeq y = witness_extract(spec, z);
  return int((eval_color(*of, y, trace) + off) % 3);
}

int eval_tree(const QoSpec& spec, const UpSeq& x, ordered_json& trace) {
  SpecPtr seq_spec = make_seq_spec(spec.of);
  auto lin_bad = [&](const UpSeq& z) {
    return is_bad(*seq_spec,
                  map_word(z, [](const Element& e) { return linearize_tree(e); }));
  };
  auto e = entry_time(x, lin_bad);
  if (!e) {
    // The period itself breaks linearized badness: a fully shift-invariant
    // class, colored directly from the orbit's rotation structure.
    log_branch(trace, "fallback");
    return cycle_color(x);
  }
  UpSeq x2 = shift_n(x, *e);
  if (*e) log_tail(trace, "linearizable", *e);
  log_branch(trace, "linearized");
  UpSeq lin = map_word(x2, [](const Element& el) { return linearize_tree(el); });
  return int((eval_color(*seq_spec, lin, trace) + *e) % 3);
}

int eval_finset(const QoSpec& spec, const UpSeq& x, ordered_json& trace) {
  SpecPtr seq_spec = make_seq_spec(spec.of);
  // Set members are stored sorted, so the sorted linearization is a rewrap.
  UpSeq lin = map_word(x, [](const Element& e) {
    return el_seq(std::vector<Element>(e.kids));
  });
  if (!is_bad(*seq_spec, lin))
    throw PipelineBug("finset badness broken: sorted linearization not bad");
  log_branch(trace, "sorted");
  return eval_color(*seq_spec, lin, trace);
}

int eval_color(const QoSpec& spec, const UpSeq& x, ordered_json& trace) {
  switch (spec.kind) {
    case QoSpec::Kind::Finite:
      log_branch(trace, "base");
      return cycle_color(x);
    case QoSpec::Kind::Union:
      return eval_union(spec, x, trace);
    case QoSpec::Kind::Product:
      return eval_product(spec, x, trace);
    case QoSpec::Kind::Seq:
    case QoSpec::Kind::LinOrd:
      return eval_seq(spec, x, trace);
    case QoSpec::Kind::Tree1:
    case QoSpec::Kind::TreeM:
      return eval_tree(spec, x, trace);
    case QoSpec::Kind::FinSet:
      return eval_finset(spec, x, trace);
  }
  throw InputError("color: unsupported spec kind");
}

}  // namespace

ColorResult color(const QoSpec& spec, const UpSeq& x) {
  if (!is_bad(spec, x))
    throw InputError("color: the sequence is not bad for this order");
  ColorResult r;
  r.trace = ordered_json::array();
  r.color = eval_color(spec, x, r.trace);
  return r;
}

ordered_json color_to_json(const ColorResult& r) {
  ordered_json j;
  j["color"] = r.color;
  j["trace"] = r.trace;
  return j;
}

}  // namespace bqo
