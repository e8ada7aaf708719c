#include "treealign/delta.hpp"

#include <random>

#include "doctest.h"
#include "testutil.hpp"

using namespace treealign;

namespace {

const Comparator kDefault{};                  // ignore case + space
const Comparator kExact{false, false};

void check_delta_invariants(const DeltaMap& d, const std::vector<std::string>& left,
                            const std::vector<std::string>& right,
                            const Comparator& cmp) {
  for (std::size_t i = 1; i < d.pairs.size(); ++i) {
    CHECK(d.pairs[i - 1].left < d.pairs[i].left);    // monotone + bijective
    CHECK(d.pairs[i - 1].right < d.pairs[i].right);
  }
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    const DeltaPair& p = d.pairs[i];
    if (p.exact) {
      CHECK(token_eq(left[p.left - 1], right[p.right - 1], cmp));
    } else {
      CHECK(!token_eq(left[p.left - 1], right[p.right - 1], cmp));
      CHECK(p.left > 1);
      CHECK(p.left < static_cast<int>(left.size()));
      CHECK(p.right > 1);
      CHECK(p.right < static_cast<int>(right.size()));
      REQUIRE(i > 0);
      REQUIRE(i + 1 < d.pairs.size());
      CHECK(d.pairs[i - 1].exact);
      CHECK(d.pairs[i - 1].left == p.left - 1);
      CHECK(d.pairs[i - 1].right == p.right - 1);
      CHECK(d.pairs[i + 1].exact);
      CHECK(d.pairs[i + 1].left == p.left + 1);
      CHECK(d.pairs[i + 1].right == p.right + 1);
    }
  }
}

int exact_count(const DeltaMap& d) {
  int n = 0;
  for (const auto& p : d.pairs) n += p.exact ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("token_eq applies the configured normalizations") {
  CHECK(token_eq("The", "the", {true, false}));
  CHECK(!token_eq("The", "the", kExact));
  CHECK(token_eq("a b", "ab", {false, true}));
  CHECK(!token_eq("cat", "dog", kDefault));
}

TEST_CASE("minimal_matches finds the shifted grand-jury block") {
  const std::vector<std::string> left = {"x",     "the",   "Fulton",
                                         "County", "Grand", "Jury"};
  const std::vector<std::string> right = {"the", "Fulton", "County", "Grand", "Jury"};
  CHECK(minimal_matches(left, right, kDefault) ==
        std::vector<MatchPair>{{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}});
}

TEST_CASE("minimal_matches on identical sequences is the identity") {
  const std::vector<std::string> w = {"a", "b", "c", "d"};
  const auto m = minimal_matches(w, w, kDefault);
  REQUIRE(m.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(m[i] == MatchPair{i + 1, i + 1});
}

TEST_CASE("minimal_matches skips the single substitution") {
  // brute-force enumeration over these length-3 sequences gives LCS {a, b}
  const auto m = minimal_matches({"a", "x", "b"}, {"a", "y", "b"}, kDefault);
  CHECK(m == std::vector<MatchPair>{{1, 1}, {3, 3}});
}

TEST_CASE("compute_delta recovers flanked single mismatches") {
  const auto d = compute_delta({"a", "x", "b"}, {"a", "y", "b"}, kDefault);
  CHECK(d.pairs == std::vector<DeltaPair>{{1, 1, true}, {2, 2, false}, {3, 3, true}});
}

TEST_CASE("compute_delta leaves wider gaps unmatched") {
  // enumeration: no (i, j) has exact neighbours at (i-1, j-1) and (i+1, j+1)
  const auto d = compute_delta({"a", "x", "x2", "b"}, {"a", "y", "b"}, kDefault);
  CHECK(d.pairs == std::vector<DeltaPair>{{1, 1, true}, {4, 3, true}});
}

TEST_CASE("compute_delta on equal sequences is the exact identity") {
  const std::vector<std::string> w = {"p", "q", "r"};
  const auto d = compute_delta(w, w, kDefault);
  REQUIRE(d.pairs.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(d.pairs[i] == DeltaPair{i + 1, i + 1, true});
}

TEST_CASE("compute_delta excludes boundary mismatches") {
  const auto d = compute_delta({"x", "b"}, {"y", "b"}, kDefault);
  CHECK(d.pairs == std::vector<DeltaPair>{{2, 2, true}});

  const auto trailing = compute_delta({"b", "x"}, {"b", "y"}, kDefault);
  CHECK(trailing.pairs == std::vector<DeltaPair>{{1, 1, true}});
}

TEST_CASE("delta image and preimage look up both directions") {
  const auto d = compute_delta({"a", "x", "b"}, {"a", "y", "b"}, kDefault);
  CHECK(d.image(2) == 2);
  CHECK(d.preimage(3) == 3);
  CHECK(!compute_delta({"a", "q"}, {"a"}, kDefault).image(2).has_value());
}

TEST_CASE("exact pairs match the LCS length oracle on random pairs") {
  std::mt19937 g(101);
  for (int trial = 0; trial < 400; ++trial) {
    const auto left = testutil::random_token_seq(g, 12);
    const auto right = testutil::random_token_seq(g, 12);
    const auto d = compute_delta(left, right, kDefault);
    CHECK(exact_count(d) == testutil::lcs_length_oracle(left, right, kDefault));
    check_delta_invariants(d, left, right, kDefault);
  }
}

TEST_CASE("compute_delta is deterministic and count-symmetric") {
  std::mt19937 g(211);
  for (int trial = 0; trial < 100; ++trial) {
    const auto left = testutil::random_token_seq(g, 12);
    const auto right = testutil::random_token_seq(g, 12);
    const auto d1 = compute_delta(left, right, kDefault);
    const auto d2 = compute_delta(left, right, kDefault);
    CHECK(d1.pairs == d2.pairs);
    const auto swapped = compute_delta(right, left, kDefault);
    CHECK(exact_count(swapped) == exact_count(d1));
  }
}

TEST_CASE("lexicographically smallest pairing wins ties") {
  // two optimal pairings exist; the one whose first pair has the smaller
  // left index must be chosen
  const auto m = minimal_matches({"p", "r", "s"}, {"r", "p", "s"}, kExact);
  CHECK(m == std::vector<MatchPair>{{1, 2}, {3, 3}});

  const auto m2 = minimal_matches({"x", "y"}, {"y", "x"}, kExact);
  CHECK(m2 == std::vector<MatchPair>{{1, 2}});
}

TEST_CASE("the divide-and-conquer path is optimal on adversarial inputs") {
  // cap the DP budget so every call runs through the middle-snake recursion
  std::mt19937 g(71);
  for (int trial = 0; trial < 500; ++trial) {
    const auto left = testutil::random_token_seq(g, 30, 3);
    const auto right = testutil::random_token_seq(g, 30, 3);
    const auto m = detail::minimal_matches_capped(left, right, kDefault, 2);
    CHECK(static_cast<int>(m.size()) ==
          testutil::lcs_length_oracle(left, right, kDefault));
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(token_eq(left[m[i].left - 1], right[m[i].right - 1], kDefault));
      if (i > 0) {
        CHECK(m[i - 1].left < m[i].left);
        CHECK(m[i - 1].right < m[i].right);
      }
    }
  }

  // heavy repetition and fully alternating patterns
  const std::vector<std::string> rep_a(40, "t");
  const std::vector<std::string> rep_b(25, "t");
  CHECK(detail::minimal_matches_capped(rep_a, rep_b, kDefault, 2).size() == 25);

  std::vector<std::string> alt_a, alt_b;
  for (int i = 0; i < 40; ++i) {
    alt_a.push_back(i % 2 ? "p" : "q");
    alt_b.push_back(i % 2 ? "q" : "p");
  }
  CHECK(static_cast<int>(detail::minimal_matches_capped(alt_a, alt_b, kDefault, 2).size()) ==
        testutil::lcs_length_oracle(alt_a, alt_b, kDefault));
}

TEST_CASE("long inputs agree with the DP on match counts") {
  // force the divide-and-conquer path by crossing the cell threshold
  std::mt19937 g(31);
  std::vector<std::string> left, right;
  for (int i = 0; i < 6000; ++i) {
    const std::string w = "w" + std::to_string(i % 97);
    left.push_back(w);
    right.push_back(w);
  }
  // sprinkle substitutions
  for (int i = 100; i < 6000; i += 100) right[i] = "sub" + std::to_string(i);
  const auto d = compute_delta(left, right, kDefault);
  CHECK(exact_count(d) == 6000 - 59);
  // every substituted position is interior with equal neighbours: recovered
  CHECK(static_cast<int>(d.pairs.size()) == 6000);
  check_delta_invariants(d, left, right, kDefault);
}
