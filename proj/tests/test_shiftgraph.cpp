#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <vector>

#include "bqo/colorer.hpp"
#include "bqo/error.hpp"
#include "bqo/order.hpp"
#include "bqo/shiftgraph.hpp"
#include "doctest.h"
#include "zoo.hpp"

using namespace bqo;

namespace {

BitWord bits(std::vector<uint8_t> pre, std::vector<uint8_t> per) {
  return make_up(std::move(pre), std::move(per));
}

// Every canonical bit word within the bounds whose eventual period has
// length at least two.
std::vector<BitWord> colorable_bit_words(int max_pre, int max_per) {
  std::vector<BitWord> out;
  auto fill = [](int code, int len) {
    std::vector<uint8_t> v;
    for (int i = 0; i < len; ++i) {
      v.push_back(uint8_t(code % 2));
      code /= 2;
    }
    return v;
  };
  for (int pl = 0; pl <= max_pre; ++pl)
    for (int pc = 0; pc < (1 << pl); ++pc)
      for (int ql = 1; ql <= max_per; ++ql)
        for (int qc = 0; qc < (1 << ql); ++qc) {
          BitWord w = make_up(fill(pc, pl), fill(qc, ql));
          if (w.per.size() >= 2) out.push_back(w);
        }
  return out;
}

}  // namespace

TEST_CASE("rotation colors on pure periodic words") {
  CHECK(cycle_color(bits({}, {0, 1})) == 0);
  CHECK(cycle_color(bits({}, {1, 0})) == 1);
  // An odd cycle needs the third color once.
  CHECK(cycle_color(bits({}, {0, 1, 1})) == 0);
  CHECK(cycle_color(bits({}, {1, 1, 0})) == 1);
  CHECK(cycle_color(bits({}, {1, 0, 1})) == 2);
}

TEST_CASE("preperiod steps add one modulo three") {
  CHECK(cycle_color(bits({1}, {0, 1})) == 1);
  CHECK(cycle_color(bits({1, 1}, {0, 1})) == 2);
  CHECK(cycle_color(bits({0, 0, 0}, {0, 1})) == 0);
}

TEST_CASE("rotation coloring is proper on every small orbit") {
  for (const BitWord& x : colorable_bit_words(4, 4)) {
    int c = cycle_color(x);
    CHECK(c >= 0);
    CHECK(c <= 2);
    CHECK(c != cycle_color(shift(x)));
  }
}

TEST_CASE("words without two-letter eventual periods are rejected") {
  CHECK_THROWS_WITH_AS(cycle_color(bits({}, {0})), "cycle color: word is shift-fixed",
                       InputError);
  CHECK_THROWS_WITH_AS(cycle_color(bits({1}, {0})),
                       "cycle color: eventual period is a single letter", InputError);
}

TEST_CASE("element words use the canonical encoding order") {
  auto labels = zoo::a2();
  UpSeq x = zoo::up({}, {zoo::word(labels, "a"), zoo::word(labels, "b")});
  CHECK(cycle_color(x) == 0);
  CHECK(cycle_color(shift(x)) == 1);
}

TEST_CASE("tail coloring steps down to the entered piece") {
  auto labels = zoo::a2();
  SeqColorer piece = [](const UpSeq& w) { return cycle_color(w); };
  auto short_head = [](const UpSeq& w) { return w.at(0).kids.size() == 1; };
  SeqColorer tc = tail_color(short_head, piece);

  UpSeq inside = zoo::up({}, {zoo::word(labels, "a"), zoo::word(labels, "b")});
  CHECK(tc(inside) == cycle_color(inside));

  UpSeq outside = zoo::up({zoo::word(labels, "bb")}, {zoo::word(labels, "a"), zoo::word(labels, "b")});
  CHECK(tc(outside) == (cycle_color(shift(outside)) + 1) % 3);
  CHECK(tc(outside) != tc(shift(outside)));

  auto never = [](const UpSeq&) { return false; };
  CHECK_THROWS_AS(tail_color(never, piece)(inside), InputError);
}

TEST_CASE("pullbacks color through a shift-commuting map") {
  auto labels = zoo::a2();
  Element a = zoo::at(labels, "a"), b = zoo::at(labels, "b");
  auto swap_letters = [&](const UpSeq& w) {
    return map_word(w, [&](const Element& e) {
      std::vector<Element> members;
      for (const Element& m : e.kids) members.push_back(m == a ? b : a);
      return el_seq(std::move(members));
    });
  };
  SeqColorer base = [](const UpSeq& w) { return cycle_color(w); };
  SeqColorer pb = pullback_color(swap_letters, base, true);

  UpSeq x = zoo::up({}, {zoo::word(labels, "a"), zoo::word(labels, "b")});
  CHECK(pb(x) == 1);
  CHECK(pb(shift(x)) == 0);

  // A head-grabbing map does not commute with the shift; audit mode trips.
  auto head = [](const UpSeq& w) { return make_up<Element>({}, {w.at(0)}); };
  SeqColorer zero = [](const UpSeq&) { return 0; };
  CHECK(pullback_color(head, zero, false)(x) == 0);
  CHECK_THROWS_AS(pullback_color(head, zero, true)(x), PipelineBug);
}

TEST_CASE("projection to the first coordinate is sound only after splitting") {
  auto labels = zoo::a2();
  auto prod = make_product_spec(labels, labels);
  auto pool = enumerate_elements(*prod, 4);
  auto pi1 = [](const Element& e) { return e.kids[0]; };

  std::vector<std::pair<Element, Element>> all, first_incomparable;
  for (const Element& q : pool)
    for (const Element& p : pool) {
      all.emplace_back(q, p);
      if (!leq(*labels, q.kids[0], p.kids[0])) first_incomparable.emplace_back(q, p);
    }

  PullbackReport unrestricted = monotone_pullback_check(pi1, *prod, *labels, all);
  CHECK(unrestricted.pairs_checked == int(all.size()));
  CHECK(!unrestricted.violations.empty());

  PullbackReport split = monotone_pullback_check(pi1, *prod, *labels, first_incomparable);
  CHECK(split.pairs_checked == int(first_incomparable.size()));
  CHECK(split.violations.empty());
}

TEST_CASE("sorting a finite set into a sequence reflects embeddability") {
  auto labels = zoo::a2();
  auto fs = make_finset_spec(labels);
  auto seq = make_seq_spec(labels);
  auto pool = enumerate_elements(*fs, 3);
  std::vector<std::pair<Element, Element>> pairs;
  for (const Element& q : pool)
    for (const Element& p : pool) pairs.emplace_back(q, p);
  auto sorted_seq = [](const Element& e) { return el_seq(e.kids); };
  PullbackReport r = monotone_pullback_check(sorted_seq, *fs, *seq, pairs);
  CHECK(r.violations.empty());
}

TEST_CASE("tree linearization does not reflect embeddability") {
  auto labels = zoo::abc0();
  auto tree = make_tree1_spec(labels);
  auto seq = make_seq_spec(labels);
  auto pool = enumerate_elements(*tree, 3);
  std::vector<std::pair<Element, Element>> pairs;
  for (const Element& q : pool)
    for (const Element& p : pool) pairs.emplace_back(q, p);
  PullbackReport r = monotone_pullback_check(
      [](const Element& e) { return linearize_tree(e); }, *tree, *seq, pairs);
  CHECK(!r.violations.empty());
  // The recorded witnesses really are failures of reflection.
  for (const auto& v : r.violations) {
    CHECK_FALSE(leq(*tree, v.q, v.p));
    CHECK(leq(*seq, v.fq, v.fp));
  }
}
