#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <string>
#include <vector>

#include "bqo/error.hpp"
#include "bqo/order.hpp"
#include "bqo/upseq.hpp"
#include "doctest.h"
#include "zoo.hpp"

using namespace bqo;

namespace {

// All raw (pre, per) choices over two letters within the given bounds.
std::vector<UpWord<int>> raw_words(int max_pre, int max_per) {
  std::vector<UpWord<int>> out;
  std::vector<int> pre, per;
  auto fill = [](int code, int len) {
    std::vector<int> v;
    for (int i = 0; i < len; ++i) {
      v.push_back(code % 2);
      code /= 2;
    }
    return v;
  };
  for (int pl = 0; pl <= max_pre; ++pl)
    for (int pc = 0; pc < (1 << pl); ++pc)
      for (int ql = 1; ql <= max_per; ++ql)
        for (int qc = 0; qc < (1 << ql); ++qc)
          out.push_back(UpWord<int>{fill(pc, pl), fill(qc, ql)});
  return out;
}

std::vector<int> unroll(const UpWord<int>& w, size_t n) {
  std::vector<int> out;
  for (size_t k = 0; k < n; ++k) out.push_back(w.at(k));
  return out;
}

}  // namespace

TEST_CASE("canonical form drops absorbable preperiods and repeated periods") {
  auto a2 = zoo::a2();
  Element a = zoo::at(a2, "a"), b = zoo::at(a2, "b");

  UpSeq x = make_up<Element>({a}, {b, a});
  CHECK(x.pre.empty());
  CHECK(x.per == std::vector<Element>{a, b});

  CHECK(make_up<Element>({}, {a, b, a, b}).per == std::vector<Element>{a, b});
  CHECK(make_up<Element>({}, {a, a, a}).per == std::vector<Element>{a});

  UpSeq y = make_up<Element>({a, b}, {b});
  CHECK(y.pre == std::vector<Element>{a});
  CHECK(y.per == std::vector<Element>{b});

  UpSeq z = make_up<Element>({b, a}, {b, a});
  CHECK(z.pre.empty());
  CHECK(z.per == std::vector<Element>{b, a});

  CHECK_THROWS_AS(make_up<Element>({a}, {}), InputError);
}

TEST_CASE("canonical forms are equal exactly when the infinite words are") {
  auto words = raw_words(3, 3);
  std::vector<UpWord<int>> canon;
  for (const auto& w : words) canon.push_back(make_up(w.pre, w.per));
  for (size_t i = 0; i < words.size(); ++i) {
    // Canonicalizing does not change the word itself ...
    CHECK(unroll(words[i], 12) == unroll(canon[i], 12));
    // ... and is idempotent.
    CHECK(make_up(canon[i].pre, canon[i].per) == canon[i]);
    for (size_t j = i + 1; j < words.size(); ++j) {
      bool same_word = unroll(words[i], 12) == unroll(words[j], 12);
      CHECK(same_word == (canon[i] == canon[j]));
    }
  }
}

TEST_CASE("shift drops the head and preserves canonical form") {
  for (const auto& raw : raw_words(2, 3)) {
    UpWord<int> x = make_up(raw.pre, raw.per);
    UpWord<int> s = shift(x);
    for (size_t k = 0; k < 10; ++k) CHECK(s.at(k) == x.at(k + 1));
    CHECK(make_up(s.pre, s.per) == s);
    // The orbit closes up after the preperiod: one full period later the
    // state repeats.
    CHECK(shift_n(x, x.pre.size() + x.per.size()) == shift_n(x, x.pre.size()));
  }
}

TEST_CASE("letter-wise maps re-canonicalize their image") {
  auto a2 = zoo::a2();
  Element a = zoo::at(a2, "a"), b = zoo::at(a2, "b");
  UpSeq x = make_up<Element>({b}, {a, b});
  UpSeq y = map_word(x, [&](const Element&) { return a; });
  CHECK(y.pre.empty());
  CHECK(y.per == std::vector<Element>{a});
}

TEST_CASE("windowed patterns evaluate along the word") {
  auto labels = zoo::a2();
  auto seq_spec = make_seq_spec(labels);
  Relation len_one{"len-one", 1,
                   [](std::span<const Element> w) { return w[0].kids.size() == 1; }};
  Relation step_leq{"step-leq", 2, [&](std::span<const Element> w) {
                      return leq(*seq_spec, w[0], w[1]);
                    }};

  UpSeq x = zoo::up({}, {zoo::word(labels, "a"), zoo::word(labels, "bb")});
  BitWord p1 = phi_pattern(x, len_one);
  CHECK(p1.pre.empty());
  CHECK(p1.per == std::vector<uint8_t>{1, 0});

  UpSeq y = zoo::up({}, {zoo::word(labels, "ab"), zoo::word(labels, "ba")});
  BitWord p2 = phi_pattern(y, step_leq);
  CHECK(p2.pre.empty());
  CHECK(p2.per == std::vector<uint8_t>{0});

  UpSeq z = zoo::up({zoo::word(labels, "a")}, {zoo::word(labels, "ab")});
  BitWord p3 = phi_pattern(z, step_leq);
  CHECK(p3.pre.empty());
  CHECK(p3.per == std::vector<uint8_t>{1});

  // Arity-3 windows wrap through the period.
  Relation mid_longest{"mid-longest", 3, [](std::span<const Element> w) {
                         return w[1].kids.size() > w[0].kids.size() &&
                                w[1].kids.size() > w[2].kids.size();
                       }};
  BitWord p4 = phi_pattern(x, mid_longest);
  CHECK(p4.pre.empty());
  CHECK(p4.per == std::vector<uint8_t>{1, 0});

  // Pattern of a shift is the shift of the pattern.
  for (const UpSeq& w : {x, y, z})
    CHECK(phi_pattern(shift(w), step_leq) == shift(phi_pattern(w, step_leq)));
}

TEST_CASE("entry time finds the first state inside a shift-closed piece") {
  auto labels = zoo::a2();
  UpSeq x = zoo::up({zoo::word(labels, "bb")},
                    {zoo::word(labels, "a"), zoo::word(labels, "bb")});
  auto first_short = [](const UpSeq& w) { return w.at(0).kids.size() == 1; };
  auto first_long = [](const UpSeq& w) { return w.at(0).kids.size() >= 2; };
  auto huge = [](const UpSeq& w) { return w.at(0).kids.size() >= 3; };
  CHECK(entry_time(x, first_short) == size_t{1});
  CHECK(entry_time(x, first_long) == size_t{0});
  CHECK(entry_time(x, huge) == std::nullopt);
}

TEST_CASE("badness scans one full orbit") {
  auto labels = zoo::a2();
  auto seq_spec = make_seq_spec(labels);
  CHECK(is_bad(*seq_spec, zoo::up({}, {zoo::word(labels, "ab"), zoo::word(labels, "ba")})));
  CHECK_FALSE(is_bad(*seq_spec, zoo::up({}, {zoo::word(labels, "a"), zoo::word(labels, "ab")})));
  // A one-letter period repeats itself, so such words are never bad.
  CHECK_FALSE(is_bad(*seq_spec, zoo::up({zoo::word(labels, "ab")}, {zoo::word(labels, "ba")})));
  CHECK(is_bad(*seq_spec, zoo::up({zoo::word(labels, "bb")},
                                  {zoo::word(labels, "a"), zoo::word(labels, "b")})));
}

TEST_CASE("the length-monotone domain is detected and guarded") {
  auto labels = zoo::a2();
  auto seq_spec = make_seq_spec(labels);
  CHECK(in_b(*seq_spec, zoo::up({}, {zoo::word(labels, "ab"), zoo::word(labels, "ba")})));
  CHECK_FALSE(in_b(*seq_spec, zoo::up({zoo::word(labels, "ab")}, {zoo::word(labels, "a")})));
  CHECK_THROWS_AS(in_b(*labels, zoo::up({}, {zoo::at(labels, "a")})), InputError);
}

TEST_CASE("orbit keys separate distinct canonical words") {
  auto labels = zoo::a2();
  Element a = zoo::at(labels, "a"), b = zoo::at(labels, "b");
  std::vector<UpSeq> words;
  for (const auto& raw : raw_words(2, 2)) {
    auto lift = [&](const std::vector<int>& v) {
      std::vector<Element> out;
      for (int i : v) out.push_back(i ? b : a);
      return out;
    };
    words.push_back(make_up(lift(raw.pre), lift(raw.per)));
  }
  std::set<std::string> keys;
  std::set<std::string> reprs;
  for (const auto& w : words) {
    keys.insert(up_key(w));
    std::string r;
    for (const auto& e : w.pre) r += canonical_encode(e) + ",";
    r += "|";
    for (const auto& e : w.per) r += canonical_encode(e) + ",";
    reprs.insert(r);
  }
  CHECK(keys.size() == reprs.size());
}

TEST_CASE("up words round-trip through json and arrive canonical") {
  auto labels = zoo::a2();
  auto seq_spec = make_seq_spec(labels);
  UpSeq x = zoo::up({zoo::word(labels, "bb")},
                    {zoo::word(labels, "ab"), zoo::word(labels, "ba")});
  CHECK(up_from_json(*seq_spec, up_to_json(*seq_spec, x)) == x);

  // Non-canonical input is canonicalized on parse.
  auto j = nlohmann::ordered_json::parse(
      R"({"pre":[{"seq":["a"]}],"per":[{"seq":["b"]},{"seq":["a"]}]})");
  UpSeq y = up_from_json(*seq_spec, j);
  CHECK(y.pre.empty());
  CHECK(y.per == std::vector<Element>{zoo::word(labels, "a"), zoo::word(labels, "b")});

  CHECK_THROWS_AS(up_from_json(*seq_spec, nlohmann::ordered_json::parse(R"({"pre":[]})")),
                  InputError);

  // 1,(01)^w is (10)^w, so the scalar constructor absorbs the preperiod.
  BitWord bits = make_up<uint8_t>({1}, {0, 1});
  CHECK(up_scalar_to_json(bits).dump() == R"({"pre":[],"per":[1,0]})");
  BitWord kept = make_up<uint8_t>({0}, {0, 1});
  CHECK(up_scalar_to_json(kept).dump() == R"({"pre":[0],"per":[0,1]})");
}
