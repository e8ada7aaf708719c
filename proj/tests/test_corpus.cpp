#include "treealign/corpus.hpp"

#include <random>

#include "doctest.h"
#include "testutil.hpp"

using namespace treealign;
using testutil::L;
using testutil::R;
using testutil::T;
using testutil::make_corpus;

TEST_CASE("terminals filters items in order") {
  const auto c = make_corpus({L(), T("the"), T("cat"), R()});
  CHECK(terminals(c) == std::vector<std::string>{"the", "cat"});

  CHECK(terminals(make_corpus({})).empty());
}

TEST_CASE("terminals on the grand-jury fragment gives the seven words") {
  // word rows with their delimiters, plus the two closers the fragment owes
  const auto c = make_corpus({L(), L(), L(), T("the"), L(), T("Fulton"), T("county"),
                              R(), T("grand"), T("jury"), R(), L(), T("say"), R(),
                              L(), T("Friday"), R(), R(), R()});
  CHECK(terminals(c) == std::vector<std::string>{"the", "Fulton", "county", "grand",
                                                 "jury", "say", "Friday"});
}

TEST_CASE("validate accepts balanced corpora") {
  CHECK(!validate(make_corpus({L(), T("a"), R()})));
  CHECK(!validate(make_corpus({})));
  CHECK(!validate(make_corpus({T("a"), T("b")})));  // terminals only, no subtrees
}

TEST_CASE("validate pinpoints delimiter violations") {
  const auto early = validate(make_corpus({R(), T("a")}));
  REQUIRE(early.has_value());
  CHECK(early->item_index == 1);

  const auto unclosed = validate(make_corpus({L(), T("a")}));
  REQUIRE(unclosed.has_value());
  CHECK(unclosed->message == "1 unclosed LSD at end");
}

TEST_CASE("validate checks the location tables") {
  auto c = make_corpus({L(), T("a"), R()});
  c.terminal_locations.clear();
  CHECK(validate(c).has_value());

  auto c2 = make_corpus({L(), T("a"), R()});
  c2.tree_locations.push_back({{0, 1}, {2, 3}});
  CHECK(validate(c2).has_value());
}

TEST_CASE("item counts add up on random corpora") {
  std::mt19937 g(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testutil::random_corpus(g, 60);
    CHECK(!validate(c));
    CHECK(terminals(c).size() + 2 * count_lsd(c) == c.items.size());
  }
}

TEST_CASE("validate agrees with a stack oracle on arbitrary delimiter strings") {
  std::mt19937 g(11);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<CorpusItem> items;
    const int len = std::uniform_int_distribution<int>(0, 24)(g);
    for (int i = 0; i < len; ++i) {
      switch (kind(g)) {
        case 0: items.push_back(L()); break;
        case 1: items.push_back(R()); break;
        default: items.push_back(T("w")); break;
      }
    }
    const bool balanced = testutil::balanced_oracle(items);
    // fabricate location tables of the right sizes so only nesting decides;
    // unbalanced sequences may leave open brackets without RSD spans, which
    // is itself a violation, so check balance first.
    NormalizedCorpus c;
    c.items = items;
    for (const auto& item : items) {
      if (item.kind == ItemKind::Terminal) c.terminal_locations.push_back({0, 1});
      if (item.kind == ItemKind::Lsd) c.tree_locations.push_back({{0, 1}, {2, 3}});
    }
    CHECK(!validate(c) == balanced);
  }
}
