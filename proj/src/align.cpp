#include "treealign/align.hpp"

#include <algorithm>

namespace treealign {

std::optional<YieldSpan> map_yield(YieldSpan span, const DeltaMap& delta) {
  const auto first = delta.image(span.first);
  const auto last = delta.image(span.last);
  if (!first || !last) return std::nullopt;
  return YieldSpan{*first, *last};
}

AlignmentResult align_trees(const std::vector<Subtree>& left_subtrees,
                            const YieldIndex& right_index, const DeltaMap& delta,
                            int right_terminal_count, const AlignOptions& opts) {
  AlignmentResult result;

  // Left subtrees grouped by yield, each group an ascending chain; groups in
  // first-appearance order, which is ascending first index.
  std::unordered_map<YieldSpan, std::size_t, YieldSpanHash> group_of;
  std::vector<std::pair<YieldSpan, std::vector<int>>> groups;
  for (const Subtree& t : left_subtrees) {
    if (!t.yield) continue;
    auto [it, inserted] = group_of.try_emplace(*t.yield, groups.size());
    if (inserted) groups.push_back({*t.yield, {}});
    groups[it->second].second.push_back(t.index);
  }

  // matched_upto[r]: how many right terminals <= r are in delta's range.
  std::vector<int> matched_upto(static_cast<std::size_t>(right_terminal_count) + 1, 0);
  for (const DeltaPair& p : delta.pairs)
    if (p.right >= 1 && p.right <= right_terminal_count) matched_upto[p.right] = 1;
  for (int r = 1; r <= right_terminal_count; ++r) matched_upto[r] += matched_upto[r - 1];

  auto mark_unalignable = [&result](const std::vector<int>& chain,
                                    UnalignableReason reason) {
    for (int index : chain) result.unalignable.push_back({index, reason});
  };

  for (const auto& [span, chain] : groups) {
    const auto mapped = map_yield(span, delta);
    if (!mapped) {
      mark_unalignable(chain, UnalignableReason::EndpointUnmapped);
      continue;
    }
    const std::vector<int>* right_chain = right_index.find(*mapped);
    if (!right_chain) {
      mark_unalignable(chain, UnalignableReason::NoRightEntry);
      continue;
    }
    if (!opts.endpoints_only) {
      const int span_size = mapped->last - mapped->first + 1;
      const int matched = matched_upto[mapped->last] - matched_upto[mapped->first - 1];
      if (matched != span_size) {
        mark_unalignable(chain, UnalignableReason::InteriorMismatch);
        continue;
      }
    }
    if (chain.size() == right_chain->size()) {
      for (std::size_t k = 0; k < chain.size(); ++k)
        result.strict.push_back({chain[k], (*right_chain)[k]});
    } else {
      result.potential.push_back({chain, *right_chain});
    }
  }

  std::sort(result.strict.begin(), result.strict.end(),
            [](const StrictAlignment& a, const StrictAlignment& b) {
              return a.left_index < b.left_index;
            });
  std::sort(result.unalignable.begin(), result.unalignable.end(),
            [](const UnalignableSubtree& a, const UnalignableSubtree& b) {
              return a.left_index < b.left_index;
            });
  return result;
}

}  // namespace treealign
