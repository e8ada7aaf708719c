#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "treealign/corpus.hpp"

namespace treealign {

// Inclusive span of 1-based terminal indices.
struct YieldSpan {
  int first = 0;
  int last = 0;

  bool operator==(const YieldSpan&) const = default;
};

struct YieldSpanHash {
  std::size_t operator()(const YieldSpan& s) const {
    const std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.first)) << 32) |
                            static_cast<std::uint32_t>(s.last);
    return std::hash<std::uint64_t>{}(k);
  }
};

// One bracket pair, numbered by the position of its LSD among all LSDs.
// Nesting makes a dominating subtree's index smaller than anything it
// contains.
struct Subtree {
  int index = 0;                       // 1-based
  std::optional<YieldSpan> yield;      // nullopt: no terminal in the extent
  int depth = 0;                       // 1 for a maximal (outermost) tree
  bool is_unary = false;               // exactly one directly dominated item
  bool has_subtree_child = false;
  std::size_t lsd_item = 0;            // extent endpoints, 0-based item positions
  std::size_t rsd_item = 0;
};

// One Subtree per LSD, in index order. The corpus must pass validate().
std::vector<Subtree> enumerate_subtrees(const NormalizedCorpus& corpus);

// Yield span -> ascending subtree indices. Lists longer than one are unary
// stacks (all but the deepest entry unary). Empty-yield subtrees are not
// indexed; they cannot take part in yield-based alignment.
struct YieldIndex {
  std::unordered_map<YieldSpan, std::vector<int>, YieldSpanHash> table;

  const std::vector<int>* find(const YieldSpan& span) const {
    auto it = table.find(span);
    return it == table.end() ? nullptr : &it->second;
  }
};

YieldIndex build_yield_index(const std::vector<Subtree>& subtrees);

enum class Dominance { FirstDominatesSecond, SecondDominatesFirst, Disjoint };

// Relation of two distinct subtrees of one corpus, from their extents.
Dominance dominance_relation(const Subtree& t, const Subtree& t2);

}  // namespace treealign
