// Command-line driver: normalize two annotated corpora, align their
// terminals and subtrees, and write standoff agreement tables.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "treealign/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"treealign: bracketing agreement between two annotated corpora"};

  treealign::RunConfig config;
  std::string left_format = "generic", right_format = "generic";
  std::string manifest, rewrite_left, rewrite_right;
  int jobs = 1;

  app.add_option("--left", config.left_path, "left corpus file");
  app.add_option("--right", config.right_path, "right corpus file");
  app.add_option("--manifest", manifest, "TSV of left<TAB>right pairs to process");
  app.add_option("--left-format", left_format, "left corpus format")
      ->check(CLI::IsMember({"penn", "susanne", "generic"}));
  app.add_option("--right-format", right_format, "right corpus format")
      ->check(CLI::IsMember({"penn", "susanne", "generic"}));
  app.add_option("--out", config.out_dir, "output directory for report tables");
  app.add_flag("--ignore-case,!--no-ignore-case", config.comparator.ignore_case,
               "case-insensitive terminal comparison (default on)");
  app.add_flag("--ignore-space,!--no-ignore-space", config.comparator.ignore_space,
               "whitespace-insensitive terminal comparison (default on)");
  app.add_flag("--endpoints-only", config.endpoints_only,
               "match subtree yields by delta-mapped endpoints alone");
  app.add_flag("--drop-empty", config.drop_empty,
               "drop empty-category terminals (*T*-1, *, 0, ...) before aligning");
  app.add_option("--rewrite-left", rewrite_left, "rewrite rules file for the left side");
  app.add_option("--rewrite-right", rewrite_right,
                 "rewrite rules file for the right side");
  app.add_flag("--stats-only", config.stats_only,
               "print the summary to stdout, write no table files");
  app.add_option("--jobs", jobs, "worker threads for manifest runs")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? treealign::kExitOk : treealign::kExitUsage;
  }

  config.left_format = *treealign::parse_format(left_format);
  config.right_format = *treealign::parse_format(right_format);
  if (!rewrite_left.empty()) config.rewrite_rules_left = rewrite_left;
  if (!rewrite_right.empty()) config.rewrite_rules_right = rewrite_right;

  const bool have_pair = !config.left_path.empty() && !config.right_path.empty();
  if (manifest.empty() == !have_pair) {
    std::cerr << "error: give either --manifest or both --left and --right\n";
    return treealign::kExitUsage;
  }
  if (!config.stats_only && config.out_dir.empty()) {
    std::cerr << "error: --out is required unless --stats-only\n";
    return treealign::kExitUsage;
  }

  try {
    if (!manifest.empty())
      return treealign::run_manifest(config, manifest, jobs, std::cout);
    treealign::AlignmentReport report = treealign::run_pair(config);
    if (config.stats_only) std::cout << treealign::render_summary(report);
    return treealign::kExitOk;
  } catch (const treealign::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return treealign::kExitInput;
  } catch (const treealign::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return treealign::kExitIo;
  }
}
