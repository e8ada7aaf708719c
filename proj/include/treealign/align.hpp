#pragma once

#include <optional>
#include <vector>

#include "treealign/delta.hpp"
#include "treealign/subtrees.hpp"

namespace treealign {

struct StrictAlignment {
  int left_index = 0;
  int right_index = 0;

  bool operator==(const StrictAlignment&) const = default;
};

// Shared-yield unary chains of unequal length: the content lines up but
// there is no principled one-to-one pairing of the brackets.
struct PotentialAlignment {
  std::vector<int> left_indices;   // ascending
  std::vector<int> right_indices;  // ascending

  bool operator==(const PotentialAlignment&) const = default;
};

enum class UnalignableReason { EndpointUnmapped, NoRightEntry, InteriorMismatch };

struct UnalignableSubtree {
  int left_index = 0;
  UnalignableReason reason = UnalignableReason::NoRightEntry;

  bool operator==(const UnalignableSubtree&) const = default;
};

// Maps a left yield span through delta; defined only when both endpoints are.
std::optional<YieldSpan> map_yield(YieldSpan span, const DeltaMap& delta);

struct AlignOptions {
  // true restores endpoint-only matching: a left yield aligns with a right
  // entry purely by its delta-mapped endpoints. The default additionally
  // requires every right terminal under the candidate span to be in delta's
  // range, so spans whose interiors picked up insertions never align.
  bool endpoints_only = false;
};

struct AlignmentResult {
  std::vector<StrictAlignment> strict;        // ascending by left index
  std::vector<PotentialAlignment> potential;  // ascending by first left index
  std::vector<UnalignableSubtree> unalignable;
};

AlignmentResult align_trees(const std::vector<Subtree>& left_subtrees,
                            const YieldIndex& right_index, const DeltaMap& delta,
                            int right_terminal_count, const AlignOptions& opts = {});

}  // namespace treealign
