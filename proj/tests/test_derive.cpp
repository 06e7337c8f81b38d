#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "bqo/audit.hpp"
#include "bqo/derive.hpp"
#include "bqo/embed.hpp"
#include "bqo/error.hpp"
#include "bqo/order.hpp"
#include "doctest.h"
#include "zoo.hpp"

using namespace bqo;

namespace {

UpWord<int> ints(std::vector<int> pre, std::vector<int> per) {
  return make_up(std::move(pre), std::move(per));
}

}  // namespace

TEST_CASE("the alternating pair walks the whole chain") {
  auto labels = zoo::a2();
  auto spec = make_seq_spec(labels);
  UpSeq x = zoo::up({}, {zoo::word(labels, "ab"), zoo::word(labels, "ba")});

  REQUIRE(is_bad(*spec, x));
  REQUIRE(in_b(*spec, x));

  CHECK(mk_nk(*spec, x, 0) == std::pair{1, 2});
  CHECK(mk_nk(*spec, x, 1) == std::pair{1, 2});
  DerivProfile prof = deriv_profile(*spec, x);
  CHECK(prof.m == ints({}, {1}));
  CHECK(prof.n == ints({}, {2}));

  REQUIRE(is_derivable(*spec, x));
  UpSeq dx = d_once(*spec, x);
  CHECK(dx == zoo::up({}, {zoo::word(labels, "a"), zoo::word(labels, "b")}));
  CHECK(is_bad(*spec, dx));
  CHECK(in_b(*spec, dx));
  CHECK_FALSE(is_derivable(*spec, dx));

  CHECK(max_derivability(*spec, x) == 1);
  CHECK(max_derivability(*spec, dx) == 0);

  UpSeq stab = d_infty(*spec, x);
  CHECK(stab == dx);
  CHECK(in_stab_set(*spec, stab));
  CHECK_FALSE(in_stab_set(*spec, x));
  CHECK(d_infty(*spec, stab) == stab);

  CHECK_FALSE(witness_eligible(*spec, x));
  REQUIRE(witness_eligible(*spec, stab));
  UpSeq y = witness_extract(*spec, stab);
  CHECK(y == zoo::up({}, {zoo::at(labels, "a"), zoo::at(labels, "b")}));
  CHECK(is_bad(*labels, y));
}

TEST_CASE("a preperiod is truncated along with the period") {
  auto labels = zoo::a2();
  auto spec = make_seq_spec(labels);
  UpSeq x = zoo::up({zoo::word(labels, "bb")},
                    {zoo::word(labels, "ab"), zoo::word(labels, "ba")});

  REQUIRE(is_bad(*spec, x));
  DerivProfile prof = deriv_profile(*spec, x);
  CHECK(prof.m == ints({}, {1}));
  CHECK(prof.n == ints({}, {2}));

  // Truncation turns the preperiod member [b,b] into [b], which the
  // canonical form absorbs into the rotated period.
  UpSeq dx = d_once(*spec, x);
  CHECK(dx == zoo::up({}, {zoo::word(labels, "b"), zoo::word(labels, "a")}));

  UpSeq stab = d_infty(*spec, x);
  CHECK(stab == dx);
}

TEST_CASE("stable words with no derivable shift are recognized") {
  auto labels = zoo::a2();
  auto spec = make_seq_spec(labels);
  UpSeq x = zoo::up({zoo::word(labels, "a")},
                    {zoo::word(labels, "bb"), zoo::word(labels, "aa")});
  REQUIRE(is_bad(*spec, x));
  REQUIRE(in_b(*spec, x));
  DerivProfile prof = deriv_profile(*spec, x);
  CHECK(prof.m == ints({}, {0}));
  CHECK(prof.n == ints({}, {0}));
  CHECK(max_derivability(*spec, x) == 0);
  CHECK(in_stab_set(*spec, x));
  CHECK(d_infty(*spec, x) == x);
}

TEST_CASE("profile positions agree with a direct prefix scan") {
  auto labels = zoo::a2();
  auto spec = make_seq_spec(labels);
  std::vector<UpSeq> words = {
      zoo::up({}, {zoo::word(labels, "ab"), zoo::word(labels, "ba")}),
      zoo::up({zoo::word(labels, "bb")},
              {zoo::word(labels, "ab"), zoo::word(labels, "ba")}),
      zoo::up({zoo::word(labels, "a")},
              {zoo::word(labels, "bb"), zoo::word(labels, "aa")}),
  };
  for (const UpSeq& x : words) {
    for (size_t k = 0; k <= x.state_count() + 2; ++k) {
      auto [m, n] = mk_nk(*spec, x, k);
      int m_scan = 0;
      const auto& s = x.at(k).kids;
      const auto& t = x.at(k + 1).kids;
      for (int c = 0; c <= int(s.size()); ++c)
        if (le_higman(*labels, {s.begin(), s.begin() + c}, t)) m_scan = c;
      CHECK(m == m_scan);
      int n_scan = -1;
      for (int e = 0; e <= int(t.size()) && n_scan < 0; ++e)
        if (le_higman(*labels, {s.begin(), s.begin() + m}, {t.begin(), t.begin() + e}))
          n_scan = e;
      CHECK(n == n_scan);
    }
  }
}

TEST_CASE("every operation commutes with the shift") {
  auto labels = zoo::a2();
  auto spec = make_seq_spec(labels);
  GenBounds bounds;
  bounds.count = 60;
  auto sample = gen_bad(*spec, 7, bounds);
  int in_domain = 0;
  for (const UpSeq& x : sample) {
    if (!in_b(*spec, x)) continue;
    ++in_domain;
    UpSeq sx = shift(x);
    DerivProfile p = deriv_profile(*spec, x);
    DerivProfile ps = deriv_profile(*spec, sx);
    CHECK(ps.m == shift(p.m));
    CHECK(ps.n == shift(p.n));
    CHECK(d_infty(*spec, sx) == shift(d_infty(*spec, x)));
    if (is_derivable(*spec, x)) {
      CHECK(is_derivable(*spec, sx));
      CHECK(d_once(*spec, sx) == shift(d_once(*spec, x)));
    }
    UpSeq stab = d_infty(*spec, x);
    CHECK(in_stab_set(*spec, stab));
    if (witness_eligible(*spec, stab)) {
      CHECK(witness_extract(*spec, shift(stab)) == shift(witness_extract(*spec, stab)));
      CHECK(is_bad(*labels, witness_extract(*spec, stab)));
    }
  }
  CHECK(in_domain > 0);
}

TEST_CASE("domain violations are rejected with the operation named") {
  auto labels = zoo::a2();
  auto spec = make_seq_spec(labels);
  UpSeq not_bad = zoo::up({}, {zoo::word(labels, "a"), zoo::word(labels, "ab")});
  CHECK_THROWS_WITH_AS(deriv_profile(*spec, not_bad), "profile: sequence is not bad",
                       InputError);
  // Shrinking member lengths leave the pipeline's entry piece but the
  // statistics themselves stay defined; only the derive report gates on it.
  UpSeq shrinking = zoo::up({zoo::word(labels, "ab")}, {zoo::word(labels, "b"),
                                                        zoo::word(labels, "a")});
  CHECK_FALSE(in_b(*spec, shrinking));
  CHECK(deriv_profile(*spec, shrinking).m == ints({}, {0}));
  CHECK_THROWS_WITH_AS(derive_to_json(*spec, shrinking),
                       "derive: member lengths must be nondecreasing", InputError);
  UpSeq stable = zoo::up({}, {zoo::word(labels, "a"), zoo::word(labels, "b")});
  CHECK_THROWS_AS(d_once(*spec, stable), InputError);
  UpSeq alternating = zoo::up({}, {zoo::word(labels, "ab"), zoo::word(labels, "ba")});
  CHECK_THROWS_AS(witness_extract(*spec, alternating), InputError);
  CHECK_THROWS_AS(mk_nk(*labels, zoo::up({}, {zoo::at(labels, "a")}), 0), InputError);
}

TEST_CASE("prefix closure of the alternating pair") {
  auto labels = zoo::a2();
  std::vector<Element> r = {zoo::word(labels, "ab"), zoo::word(labels, "ba")};
  auto closed = fill_closure(*labels, r);
  std::vector<Element> expect = {
      zoo::word(labels, ""),  zoo::word(labels, "a"),  zoo::word(labels, "b"),
      zoo::word(labels, "ab"), zoo::word(labels, "ba"),
  };
  CHECK(closed == expect);
  CHECK(fill_closure(*labels, closed) == closed);
  CHECK(fill_closure(*labels, {}).empty());
  CHECK(fill_closure(*labels, {zoo::word(labels, "a")}) ==
        std::vector<Element>{zoo::word(labels, "a")});
  CHECK_THROWS_AS(fill_closure(*labels, {zoo::at(labels, "a")}), InputError);
}
