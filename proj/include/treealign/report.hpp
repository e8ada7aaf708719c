#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "treealign/align.hpp"
#include "treealign/corpus.hpp"
#include "treealign/delta.hpp"
#include "treealign/subtrees.hpp"

namespace treealign {

struct DepthStats {
  long subtree_count = 0;
  long aligned_count = 0;
};

struct SideStats {
  long terminal_count = 0;
  long matched_terminal_count = 0;
  double matched_terminal_pct = 0.0;

  long subtree_count = 0;
  long maximal_tree_count = 0;
  long deep_maximal_count = 0;       // maximal trees containing another subtree
  long depth_one_maximal_count = 0;  // maximal trees dominating only terminals
  long empty_yield_count = 0;
  long alignable_count = 0;          // subtrees - depth-one maximal - empty yield
  long strictly_aligned_count = 0;   // strict pairs whose subtree is alignable
  double aligned_pct = 0.0;

  std::map<int, DepthStats> by_depth;
};

struct Statistics {
  SideStats left;
  SideStats right;
};

Statistics compute_stats(const NormalizedCorpus& left,
                         const std::vector<Subtree>& left_subtrees,
                         const NormalizedCorpus& right,
                         const std::vector<Subtree>& right_subtrees,
                         const DeltaMap& delta, const AlignmentResult& alignment);

struct MismatchRow {
  int left_index = 0;
  std::string left_text;
  int right_index = 0;
  std::string right_text;

  bool operator==(const MismatchRow&) const = default;
};

struct LocationRow {
  char side = 'l';      // 'l' or 'r'
  bool is_tree = false; // kind: term or tree
  int index = 0;
  SpanLocation a;       // terminal span, or the LSD span of a tree
  SpanLocation b;       // RSD span, trees only

  bool operator==(const LocationRow&) const = default;
};

// Everything the run emits, standoff: indices into the two corpora plus the
// byte locations needed to get back to the source files.
struct AlignmentReport {
  std::string left_source;
  std::string right_source;
  std::vector<StrictAlignment> strict;
  std::vector<PotentialAlignment> potential;
  std::vector<UnalignableSubtree> unalignable;
  DeltaMap delta;
  std::vector<MismatchRow> mismatches;
  std::vector<LocationRow> locations;
  Statistics stats;
};

AlignmentReport build_report(const NormalizedCorpus& left,
                             const NormalizedCorpus& right,
                             const std::vector<Subtree>& left_subtrees,
                             const std::vector<Subtree>& right_subtrees,
                             const DeltaMap& delta, const AlignmentResult& alignment);

// Writes delta.tsv, mismatches.tsv, strict.tsv, potential.tsv, locations.tsv
// and summary.txt into out_dir (created if needed). Row order is
// deterministic. Throws IoError on failure.
void write_report(const AlignmentReport& report, const std::filesystem::path& out_dir);

std::string render_summary(const AlignmentReport& report);

// Serializes a corpus in the generic interchange format; inverse of
// normalize_generic on items.
void write_generic(const NormalizedCorpus& corpus, std::ostream& out);
void write_generic(const NormalizedCorpus& corpus, const std::filesystem::path& path);

}  // namespace treealign
