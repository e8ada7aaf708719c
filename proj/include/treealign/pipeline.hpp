#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "treealign/delta.hpp"
#include "treealign/errors.hpp"
#include "treealign/normalize.hpp"
#include "treealign/report.hpp"

namespace treealign {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct RunConfig {
  std::string left_path;
  std::string right_path;
  CorpusFormat left_format = CorpusFormat::Generic;
  CorpusFormat right_format = CorpusFormat::Generic;
  Comparator comparator;
  bool endpoints_only = false;
  bool drop_empty = false;  // apply the built-in empty-category rewrite set
  std::optional<std::string> rewrite_rules_left;
  std::optional<std::string> rewrite_rules_right;
  std::string out_dir;
  bool stats_only = false;  // compute but do not write table files
};

std::string read_file(const std::string& path);  // throws IoError

// Full pipeline for one file pair: normalize, rewrite, diff terminals,
// index subtrees, align, report. Writes the report into out_dir unless
// stats_only. Throws ParseError on malformed or invalid input, IoError on
// filesystem failure.
AlignmentReport run_pair(const RunConfig& config);

// Runs every left TAB right pair listed in the manifest, writing each
// report under <out_dir>/<nnnn>_<leftbase>__<rightbase>/. Pairs run on up
// to `jobs` worker threads. One status line per pair goes to `log`; returns
// the worst exit code seen.
int run_manifest(const RunConfig& base, const std::string& manifest_path, int jobs,
                 std::ostream& log);

}  // namespace treealign
