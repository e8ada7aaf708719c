#include "treealign/subtrees.hpp"

#include <cassert>

namespace treealign {

std::vector<Subtree> enumerate_subtrees(const NormalizedCorpus& corpus) {
  struct Open {
    int ordinal;          // 1-based subtree index
    int first_candidate;  // terminal index this extent would start at
    int child_count;
    bool has_subtree_child;
    std::size_t lsd_item;
    int depth;
  };

  std::vector<Subtree> out(count_lsd(corpus));
  std::vector<Open> stack;
  int terminal_count = 0;
  int next_ordinal = 1;

  for (std::size_t pos = 0; pos < corpus.items.size(); ++pos) {
    const CorpusItem& item = corpus.items[pos];
    switch (item.kind) {
      case ItemKind::Terminal:
        ++terminal_count;
        if (!stack.empty()) ++stack.back().child_count;
        break;
      case ItemKind::Lsd:
        if (!stack.empty()) {
          ++stack.back().child_count;
          stack.back().has_subtree_child = true;
        }
        stack.push_back({next_ordinal++, terminal_count + 1, 0, false, pos,
                         static_cast<int>(stack.size()) + 1});
        break;
      case ItemKind::Rsd: {
        assert(!stack.empty() && "corpus must pass validate()");
        const Open top = stack.back();
        stack.pop_back();
        Subtree t;
        t.index = top.ordinal;
        if (top.first_candidate <= terminal_count)
          t.yield = YieldSpan{top.first_candidate, terminal_count};
        t.depth = top.depth;
        t.is_unary = top.child_count == 1;
        t.has_subtree_child = top.has_subtree_child;
        t.lsd_item = top.lsd_item;
        t.rsd_item = pos;
        out[top.ordinal - 1] = t;
        break;
      }
    }
  }
  assert(stack.empty() && "corpus must pass validate()");
  return out;
}

YieldIndex build_yield_index(const std::vector<Subtree>& subtrees) {
  YieldIndex index;
  for (const Subtree& t : subtrees) {
    if (t.yield) index.table[*t.yield].push_back(t.index);
  }
  return index;
}

Dominance dominance_relation(const Subtree& t, const Subtree& t2) {
  // Proper nesting: extents either nest or are disjoint.
  if (t.lsd_item < t2.lsd_item && t2.rsd_item < t.rsd_item)
    return Dominance::FirstDominatesSecond;
  if (t2.lsd_item < t.lsd_item && t.rsd_item < t2.rsd_item)
    return Dominance::SecondDominatesFirst;
  return Dominance::Disjoint;
}

}  // namespace treealign
