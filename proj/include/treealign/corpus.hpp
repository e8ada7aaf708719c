#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace treealign {

// A corpus is reduced to a flat sequence of terminal tokens and structural
// delimiters (LSD = open bracket, RSD = close bracket). Everything else in
// the source file is dropped at normalization time and only recoverable
// through the byte-offset location tables.

enum class ItemKind { Terminal, Lsd, Rsd };

struct CorpusItem {
  ItemKind kind = ItemKind::Terminal;
  std::string text;  // surface form; non-empty iff kind == Terminal

  static CorpusItem terminal(std::string t) { return {ItemKind::Terminal, std::move(t)}; }
  static CorpusItem lsd() { return {ItemKind::Lsd, {}}; }
  static CorpusItem rsd() { return {ItemKind::Rsd, {}}; }

  bool operator==(const CorpusItem&) const = default;
};

// Half-open byte range into the source file.
struct SpanLocation {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;

  bool operator==(const SpanLocation&) const = default;
};

// Byte ranges of a subtree's two delimiters; whatever the source stores
// between them (labels, tags) falls inside the enclosed region.
struct TreeLocation {
  SpanLocation lsd;
  SpanLocation rsd;

  bool operator==(const TreeLocation&) const = default;
};

// Immutable after construction; safe to share read-only across threads.
// Terminal n (1-based) owns terminal_locations[n-1]; subtree n (numbered by
// LSD occurrence order) owns tree_locations[n-1].
struct NormalizedCorpus {
  std::vector<CorpusItem> items;
  std::vector<SpanLocation> terminal_locations;
  std::vector<TreeLocation> tree_locations;
  std::string source_id;
};

// W: the terminal texts in item order. Result index n-1 is terminal n.
std::vector<std::string> terminals(const NormalizedCorpus& corpus);

std::size_t count_terminals(const NormalizedCorpus& corpus);
std::size_t count_lsd(const NormalizedCorpus& corpus);

struct Violation {
  std::size_t item_index = 0;  // 1-based; 0 for corpus-level problems
  std::string message;
};

// nullopt when every corpus invariant holds: delimiters properly nested,
// one location per terminal and per LSD, all byte spans well formed.
// Otherwise reports the first violation found.
std::optional<Violation> validate(const NormalizedCorpus& corpus);

}  // namespace treealign
