#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treealign {

// Token equality used by the diff. Defaults mirror a case- and
// whitespace-insensitive comparison so editorial capitalization differences
// between corpora do not break alignment.
struct Comparator {
  bool ignore_case = true;
  bool ignore_space = true;

  // Canonical form a token is compared under.
  std::string fold(std::string_view token) const;
};

bool token_eq(std::string_view a, std::string_view b, const Comparator& cmp);

struct MatchPair {
  int left = 0;  // 1-based terminal indices
  int right = 0;

  bool operator==(const MatchPair&) const = default;
};

// A longest common subsequence of the two token sequences under token_eq,
// as monotone (left, right) pairs. Optimal (|result| is the LCS length) and
// deterministic. Small inputs use a direct dynamic program that picks the
// lexicographically smallest pair sequence among ties; long inputs fall back
// to a linear-space divide-and-conquer minimal diff.
std::vector<MatchPair> minimal_matches(const std::vector<std::string>& left,
                                       const std::vector<std::string>& right,
                                       const Comparator& cmp);

struct DeltaPair {
  int left = 0;
  int right = 0;
  bool exact = true;  // false: admitted by the single-mismatch rule

  bool operator==(const DeltaPair&) const = default;
};

// The monotone, bijective, partial map from left to right terminal indices:
// the exact matches of a minimal diff plus single-token mismatches flanked
// on both sides by exact matches.
struct DeltaMap {
  std::vector<DeltaPair> pairs;  // ascending in both components

  std::optional<int> image(int left_index) const;
  std::optional<int> preimage(int right_index) const;
  std::size_t size() const { return pairs.size(); }
};

DeltaMap compute_delta(const std::vector<std::string>& left,
                       const std::vector<std::string>& right,
                       const Comparator& cmp);

namespace detail {
// Test seam: caps the direct-DP cell budget so the divide-and-conquer path
// can be exercised on small inputs.
std::vector<MatchPair> minimal_matches_capped(const std::vector<std::string>& left,
                                              const std::vector<std::string>& right,
                                              const Comparator& cmp,
                                              long long direct_dp_max_cells);
}  // namespace detail

}  // namespace treealign
