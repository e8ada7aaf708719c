#include "treealign/pipeline.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "treealign/align.hpp"

namespace treealign {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return buf.str();
}

namespace {

NormalizedCorpus load_side(const std::string& path, CorpusFormat format,
                           const std::optional<std::string>& rules_path,
                           bool drop_empty) {
  NormalizedCorpus corpus = normalize(format, read_file(path), path);

  std::vector<RewriteRule> rules;
  if (drop_empty) rules = empty_category_rules();
  if (rules_path) {
    auto user_rules = parse_rewrite_rules(read_file(*rules_path), *rules_path);
    rules.insert(rules.end(), user_rules.begin(), user_rules.end());
  }
  if (!rules.empty()) corpus = apply_rewrites(corpus, rules);

  if (auto violation = validate(corpus))
    throw ParseError(path, 0,
                     "invalid corpus (item " + std::to_string(violation->item_index) +
                         "): " + violation->message);
  return corpus;
}

}  // namespace

AlignmentReport run_pair(const RunConfig& config) {
  const NormalizedCorpus left = load_side(config.left_path, config.left_format,
                                          config.rewrite_rules_left, config.drop_empty);
  const NormalizedCorpus right = load_side(config.right_path, config.right_format,
                                           config.rewrite_rules_right, config.drop_empty);

  const auto left_words = terminals(left);
  const auto right_words = terminals(right);
  const DeltaMap delta = compute_delta(left_words, right_words, config.comparator);

  const auto left_subtrees = enumerate_subtrees(left);
  const auto right_subtrees = enumerate_subtrees(right);
  const YieldIndex right_yields = build_yield_index(right_subtrees);

  const AlignmentResult aligned =
      align_trees(left_subtrees, right_yields, delta,
                  static_cast<int>(right_words.size()), {config.endpoints_only});

  AlignmentReport report =
      build_report(left, right, left_subtrees, right_subtrees, delta, aligned);
  if (!config.stats_only) {
    if (config.out_dir.empty())
      throw IoError("<out_dir>", "no output directory configured");
    write_report(report, config.out_dir);
  }
  return report;
}

namespace {

struct ManifestPair {
  std::string left;
  std::string right;
};

std::vector<ManifestPair> parse_manifest(const std::string& text,
                                         const std::string& path) {
  std::vector<ManifestPair> pairs;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    if (!line.empty() && line[0] != '#') {
      const std::size_t tab = line.find('\t');
      if (tab == std::string::npos)
        throw ParseError(path, pos, "manifest line " + std::to_string(line_no) +
                                        " has no TAB separator");
      pairs.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    pos = end + 1;
  }
  return pairs;
}

std::string pair_dir_name(std::size_t ordinal, const ManifestPair& pair) {
  char prefix[16];
  std::snprintf(prefix, sizeof(prefix), "%04zu", ordinal);
  const std::string lbase = std::filesystem::path(pair.left).filename().string();
  const std::string rbase = std::filesystem::path(pair.right).filename().string();
  return std::string(prefix) + "_" + lbase + "__" + rbase;
}

}  // namespace

int run_manifest(const RunConfig& base, const std::string& manifest_path, int jobs,
                 std::ostream& log) {
  const auto pairs = parse_manifest(read_file(manifest_path), manifest_path);
  if (jobs < 1) jobs = 1;

  std::vector<int> codes(pairs.size(), kExitOk);
  std::vector<std::string> lines(pairs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pairs.size()) return;
      RunConfig config = base;
      config.left_path = pairs[i].left;
      config.right_path = pairs[i].right;
      const std::string dir_name = pair_dir_name(i + 1, pairs[i]);
      config.out_dir =
          (std::filesystem::path(base.out_dir) / dir_name).string();
      try {
        AlignmentReport report = run_pair(config);
        lines[i] = "ok\t" + dir_name;
        if (config.stats_only) lines[i] += "\n" + render_summary(report);
      } catch (const ParseError& e) {
        codes[i] = kExitInput;
        lines[i] = std::string("error\t") + dir_name + "\t" + e.what();
      } catch (const IoError& e) {
        codes[i] = kExitIo;
        lines[i] = std::string("error\t") + dir_name + "\t" + e.what();
      }
    }
  };

  if (jobs == 1 || pairs.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    const int count = std::min<std::size_t>(jobs, pairs.size());
    threads.reserve(count);
    for (int t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  int worst = kExitOk;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    log << lines[i] << '\n';
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

}  // namespace treealign
