#include "treealign/align.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "testutil.hpp"
#include "treealign/normalize.hpp"

using namespace treealign;

namespace {

const Comparator kDefault{};

// identity delta over n terminals
DeltaMap identity_delta(int n) {
  DeltaMap d;
  for (int i = 1; i <= n; ++i) d.pairs.push_back({i, i, true});
  return d;
}

AlignmentResult align_generic(const std::string& left, const std::string& right,
                              const AlignOptions& opts = {}) {
  const auto lc = normalize_generic(left, "l");
  const auto rc = normalize_generic(right, "r");
  const auto lw = terminals(lc);
  const auto rw = terminals(rc);
  const auto delta = compute_delta(lw, rw, kDefault);
  return align_trees(enumerate_subtrees(lc), build_yield_index(enumerate_subtrees(rc)),
                     delta, static_cast<int>(rw.size()), opts);
}

}  // namespace

TEST_CASE("map_yield sends spans through delta") {
  DeltaMap d;
  for (int i = 2; i <= 6; ++i) d.pairs.push_back({i, i - 1, true});
  CHECK(map_yield({2, 6}, d) == YieldSpan{1, 5});

  CHECK(map_yield({1, 3}, identity_delta(5)) == YieldSpan{1, 3});

  DeltaMap gap;
  gap.pairs = {{2, 2, true}, {3, 3, true}};
  CHECK(!map_yield({1, 3}, gap).has_value());  // delta(1) undefined
}

TEST_CASE("identical corpora align every subtree strictly") {
  const auto r = align_generic("{ { a } b }", "{ { a } b }");
  CHECK(r.strict == std::vector<StrictAlignment>{{1, 1}, {2, 2}});
  CHECK(r.potential.empty());
  CHECK(r.unalignable.empty());
}

TEST_CASE("unequal unary stacks become potential alignments") {
  const auto r = align_generic("{ a }", "{ { a } }");
  CHECK(r.strict.empty());
  REQUIRE(r.potential.size() == 1);
  CHECK(r.potential[0].left_indices == std::vector<int>{1});
  CHECK(r.potential[0].right_indices == std::vector<int>{1, 2});
}

TEST_CASE("equal unary stacks pair off by ascending index") {
  const auto r = align_generic("{ { a } } { b }", "{ { a } } { b }");
  CHECK(r.strict == std::vector<StrictAlignment>{{1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("interior insertions block alignment unless endpoints-only") {
  // delta = {(1,1),(2,3)}: the right span 1..3 holds an unmatched terminal
  const auto guarded = align_generic("{ a b }", "{ a c b }");
  CHECK(guarded.strict.empty());
  REQUIRE(guarded.unalignable.size() == 1);
  CHECK(guarded.unalignable[0].reason == UnalignableReason::InteriorMismatch);

  const auto literal = align_generic("{ a b }", "{ a c b }", {true});
  CHECK(literal.strict == std::vector<StrictAlignment>{{1, 1}});
}

TEST_CASE("unalignable subtrees carry their reason") {
  // endpoint unmapped: the right corpus has no counterpart for 'q'
  const auto endpoint = align_generic("{ p q }", "{ p } x");
  REQUIRE(endpoint.unalignable.size() == 1);
  CHECK(endpoint.unalignable[0].reason == UnalignableReason::EndpointUnmapped);

  // no right entry: both endpoints map but nothing brackets that span
  const auto missing = align_generic("{ a } { b }", "{ a } b");
  bool saw_missing = false;
  for (const auto& u : missing.unalignable)
    saw_missing |= u.reason == UnalignableReason::NoRightEntry;
  CHECK(saw_missing);
}

TEST_CASE("strict pairing is one-to-one") {
  std::mt19937 g(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lc = testutil::random_corpus(g, 50);
    const auto rc = testutil::random_corpus(g, 50);
    const auto lw = terminals(lc);
    const auto rw = terminals(rc);
    const auto delta = compute_delta(lw, rw, kDefault);
    const auto r = align_trees(enumerate_subtrees(lc),
                               build_yield_index(enumerate_subtrees(rc)), delta,
                               static_cast<int>(rw.size()), {});
    std::set<int> lefts, rights;
    for (const auto& p : r.strict) {
      CHECK(lefts.insert(p.left_index).second);
      CHECK(rights.insert(p.right_index).second);
    }
  }
}

TEST_CASE("self-alignment is total on non-empty yields") {
  std::mt19937 g(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testutil::random_corpus(g, 60);
    const auto ts = enumerate_subtrees(c);
    const auto words = terminals(c);
    const auto delta = compute_delta(words, words, kDefault);
    const auto r = align_trees(ts, build_yield_index(ts), delta,
                               static_cast<int>(words.size()), {});
    std::size_t non_empty = 0;
    for (const auto& t : ts) non_empty += t.yield.has_value();
    CHECK(r.strict.size() == non_empty);
    for (const auto& p : r.strict) CHECK(p.left_index == p.right_index);
    CHECK(r.potential.empty());
    CHECK(r.unalignable.empty());
  }
}

TEST_CASE("perturbed corpora keep survivors strictly aligned with dominance") {
  std::mt19937 g(41);
  for (int trial = 0; trial < 120; ++trial) {
    const auto base = testutil::random_corpus(g, 60);
    const auto p = testutil::perturb(g, base.items);
    const auto rc = testutil::make_corpus(p.items);

    const auto lw = terminals(base);
    const auto rw = terminals(rc);
    REQUIRE(lw == rw);  // terminals untouched
    const auto delta = compute_delta(lw, rw, kDefault);

    const auto lt = enumerate_subtrees(base);
    const auto rt = enumerate_subtrees(rc);
    const auto r = align_trees(lt, build_yield_index(rt), delta,
                               static_cast<int>(rw.size()), {});

    std::set<std::pair<int, int>> strict;
    for (const auto& s : r.strict) strict.insert({s.left_index, s.right_index});
    for (const auto& [right_index, orig_index] : p.survivors)
      CHECK(strict.count({orig_index, right_index}));

    for (const auto& s1 : r.strict) {
      for (const auto& s2 : r.strict) {
        if (s1 == s2) continue;
        CHECK(dominance_relation(lt[s1.left_index - 1], lt[s2.left_index - 1]) ==
              dominance_relation(rt[s1.right_index - 1], rt[s2.right_index - 1]));
      }
    }
  }
}

TEST_CASE("swapping the corpora transposes the strict set") {
  const std::string left = "{ { a } b } { c }";
  const std::string right = "{ { a } b { c } }";
  const auto forward = align_generic(left, right);
  const auto backward = align_generic(right, left);
  std::set<std::pair<int, int>> f, b;
  for (const auto& p : forward.strict) f.insert({p.left_index, p.right_index});
  for (const auto& p : backward.strict) b.insert({p.right_index, p.left_index});
  CHECK(f == b);
}
