#include "treealign/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "treealign/errors.hpp"
#include "treealign/normalize.hpp"

namespace treealign {

namespace {

std::string pct(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

bool is_alignable(const Subtree& t) {
  if (!t.yield) return false;
  return !(t.depth == 1 && !t.has_subtree_child);  // depth-one maximal trees excluded
}

SideStats side_stats(const NormalizedCorpus& corpus,
                     const std::vector<Subtree>& subtrees, long matched_terminals,
                     const std::vector<int>& strict_indices) {
  SideStats s;
  s.terminal_count = static_cast<long>(count_terminals(corpus));
  s.matched_terminal_count = matched_terminals;
  if (s.terminal_count > 0)
    s.matched_terminal_pct = 100.0 * matched_terminals / s.terminal_count;

  std::set<int> strict(strict_indices.begin(), strict_indices.end());
  s.subtree_count = static_cast<long>(subtrees.size());
  for (const Subtree& t : subtrees) {
    if (t.depth == 1) {
      ++s.maximal_tree_count;
      if (t.has_subtree_child) ++s.deep_maximal_count;
      else if (t.yield) ++s.depth_one_maximal_count;
    }
    if (!t.yield) ++s.empty_yield_count;
    if (is_alignable(t) && strict.count(t.index)) ++s.strictly_aligned_count;
    auto& bucket = s.by_depth[t.depth];
    ++bucket.subtree_count;
    if (strict.count(t.index)) ++bucket.aligned_count;
  }
  s.alignable_count = s.subtree_count - s.depth_one_maximal_count - s.empty_yield_count;
  if (s.alignable_count > 0)
    s.aligned_pct = 100.0 * s.strictly_aligned_count / s.alignable_count;
  return s;
}

}  // namespace

Statistics compute_stats(const NormalizedCorpus& left,
                         const std::vector<Subtree>& left_subtrees,
                         const NormalizedCorpus& right,
                         const std::vector<Subtree>& right_subtrees,
                         const DeltaMap& delta, const AlignmentResult& alignment) {
  std::vector<int> strict_left, strict_right;
  strict_left.reserve(alignment.strict.size());
  strict_right.reserve(alignment.strict.size());
  for (const StrictAlignment& p : alignment.strict) {
    strict_left.push_back(p.left_index);
    strict_right.push_back(p.right_index);
  }
  const long matched = static_cast<long>(delta.size());
  Statistics stats;
  stats.left = side_stats(left, left_subtrees, matched, strict_left);
  stats.right = side_stats(right, right_subtrees, matched, strict_right);
  return stats;
}

AlignmentReport build_report(const NormalizedCorpus& left,
                             const NormalizedCorpus& right,
                             const std::vector<Subtree>& left_subtrees,
                             const std::vector<Subtree>& right_subtrees,
                             const DeltaMap& delta, const AlignmentResult& alignment) {
  AlignmentReport r;
  r.left_source = left.source_id;
  r.right_source = right.source_id;
  r.strict = alignment.strict;
  r.potential = alignment.potential;
  r.unalignable = alignment.unalignable;
  r.delta = delta;

  const auto left_words = terminals(left);
  const auto right_words = terminals(right);
  for (const DeltaPair& p : delta.pairs) {
    if (!p.exact)
      r.mismatches.push_back(
          {p.left, left_words[p.left - 1], p.right, right_words[p.right - 1]});
  }

  std::set<int> lterm, rterm, ltree, rtree;
  for (const DeltaPair& p : delta.pairs) {
    lterm.insert(p.left);
    rterm.insert(p.right);
  }
  for (const StrictAlignment& p : alignment.strict) {
    ltree.insert(p.left_index);
    rtree.insert(p.right_index);
  }
  for (const PotentialAlignment& p : alignment.potential) {
    ltree.insert(p.left_indices.begin(), p.left_indices.end());
    rtree.insert(p.right_indices.begin(), p.right_indices.end());
  }
  for (const UnalignableSubtree& u : alignment.unalignable) ltree.insert(u.left_index);

  auto add_terms = [&r](char side, const std::set<int>& idxs, const NormalizedCorpus& c) {
    for (int i : idxs)
      r.locations.push_back({side, false, i, c.terminal_locations[i - 1], {}});
  };
  auto add_trees = [&r](char side, const std::set<int>& idxs, const NormalizedCorpus& c) {
    for (int i : idxs)
      r.locations.push_back(
          {side, true, i, c.tree_locations[i - 1].lsd, c.tree_locations[i - 1].rsd});
  };
  add_terms('l', lterm, left);
  add_trees('l', ltree, left);
  add_terms('r', rterm, right);
  add_trees('r', rtree, right);

  r.stats = compute_stats(left, left_subtrees, right, right_subtrees, delta, alignment);
  return r;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  return out;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void render_side(std::ostringstream& os, const char* side, const SideStats& s) {
  os << side << ".terminal_count: " << s.terminal_count << '\n'
     << side << ".matched_terminal_count: " << s.matched_terminal_count << '\n'
     << side << ".matched_terminal_pct: " << pct(s.matched_terminal_pct) << '\n'
     << side << ".subtree_count: " << s.subtree_count << '\n'
     << side << ".maximal_tree_count: " << s.maximal_tree_count << '\n'
     << side << ".maximal_depth_gt1_count: " << s.deep_maximal_count << '\n'
     << side << ".depth_one_maximal_count: " << s.depth_one_maximal_count << '\n'
     << side << ".empty_yield_count: " << s.empty_yield_count << '\n'
     << side << ".alignable_count: " << s.alignable_count << '\n'
     << side << ".strictly_aligned_count: " << s.strictly_aligned_count << '\n'
     << side << ".aligned_pct: " << pct(s.aligned_pct) << '\n';
  for (const auto& [depth, bucket] : s.by_depth)
    os << side << ".depth." << depth << ": subtrees=" << bucket.subtree_count
       << " aligned=" << bucket.aligned_count << '\n';
}

}  // namespace

std::string render_summary(const AlignmentReport& report) {
  std::ostringstream os;
  os << "pair.left_source: " << report.left_source << '\n'
     << "pair.right_source: " << report.right_source << '\n';
  render_side(os, "left", report.stats.left);
  render_side(os, "right", report.stats.right);
  long endpoint = 0, no_entry = 0, interior = 0;
  for (const UnalignableSubtree& u : report.unalignable) {
    switch (u.reason) {
      case UnalignableReason::EndpointUnmapped: ++endpoint; break;
      case UnalignableReason::NoRightEntry: ++no_entry; break;
      case UnalignableReason::InteriorMismatch: ++interior; break;
    }
  }
  os << "alignment.strict_count: " << report.strict.size() << '\n'
     << "alignment.potential_count: " << report.potential.size() << '\n'
     << "alignment.mismatch_count: " << report.mismatches.size() << '\n'
     << "alignment.delta_size: " << report.delta.size() << '\n'
     << "alignment.unalignable.endpoint-unmapped: " << endpoint << '\n'
     << "alignment.unalignable.no-right-entry: " << no_entry << '\n'
     << "alignment.unalignable.interior-mismatch: " << interior << '\n';
  return os.str();
}

void write_report(const AlignmentReport& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir.string(), "cannot create directory: " + ec.message());

  {
    auto out = open_out(out_dir / "delta.tsv");
    out << "left_idx\tright_idx\texact\n";
    for (const DeltaPair& p : report.delta.pairs)
      out << p.left << '\t' << p.right << '\t' << (p.exact ? 1 : 0) << '\n';
  }
  {
    auto out = open_out(out_dir / "mismatches.tsv");
    out << "left_idx\tleft_text\tright_idx\tright_text\n";
    for (const MismatchRow& m : report.mismatches)
      out << m.left_index << '\t' << m.left_text << '\t' << m.right_index << '\t'
          << m.right_text << '\n';
  }
  {
    auto out = open_out(out_dir / "strict.tsv");
    out << "left_tree_idx\tright_tree_idx\n";
    for (const StrictAlignment& p : report.strict)
      out << p.left_index << '\t' << p.right_index << '\n';
  }
  {
    auto out = open_out(out_dir / "potential.tsv");
    out << "left_tree_idx_list\tright_tree_idx_list\n";
    for (const PotentialAlignment& p : report.potential)
      out << join(p.left_indices) << '\t' << join(p.right_indices) << '\n';
  }
  {
    // terminal rows carry two byte fields, tree rows four
    auto out = open_out(out_dir / "locations.tsv");
    out << "side\tkind\tidx\tstart\tend\trsd_start\trsd_end\n";
    for (const LocationRow& row : report.locations) {
      out << row.side << '\t' << (row.is_tree ? "tree" : "term") << '\t' << row.index
          << '\t' << row.a.byte_start << '\t' << row.a.byte_end;
      if (row.is_tree) out << '\t' << row.b.byte_start << '\t' << row.b.byte_end;
      out << '\n';
    }
  }
  {
    auto out = open_out(out_dir / "summary.txt");
    out << render_summary(report);
  }
}

void write_generic(const NormalizedCorpus& corpus, std::ostream& out) {
  int depth = 0;
  bool at_line_start = true;
  for (const CorpusItem& item : corpus.items) {
    if (!at_line_start) out << ' ';
    switch (item.kind) {
      case ItemKind::Lsd:
        out << '{';
        ++depth;
        at_line_start = false;
        break;
      case ItemKind::Rsd:
        out << '}';
        --depth;
        if (depth == 0) {
          out << '\n';
          at_line_start = true;
        } else {
          at_line_start = false;
        }
        break;
      case ItemKind::Terminal:
        out << generic_escape(item.text);
        at_line_start = false;
        break;
    }
  }
  if (!at_line_start) out << '\n';
}

void write_generic(const NormalizedCorpus& corpus, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_generic(corpus, out);
}

}  // namespace treealign
