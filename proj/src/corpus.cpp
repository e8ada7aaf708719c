#include "treealign/corpus.hpp"

namespace treealign {

std::vector<std::string> terminals(const NormalizedCorpus& corpus) {
  std::vector<std::string> out;
  out.reserve(corpus.terminal_locations.size());
  for (const auto& item : corpus.items) {
    if (item.kind == ItemKind::Terminal) out.push_back(item.text);
  }
  return out;
}

std::size_t count_terminals(const NormalizedCorpus& corpus) {
  std::size_t n = 0;
  for (const auto& item : corpus.items)
    if (item.kind == ItemKind::Terminal) ++n;
  return n;
}

std::size_t count_lsd(const NormalizedCorpus& corpus) {
  std::size_t n = 0;
  for (const auto& item : corpus.items)
    if (item.kind == ItemKind::Lsd) ++n;
  return n;
}

std::optional<Violation> validate(const NormalizedCorpus& corpus) {
  long open = 0;
  std::size_t terminal_count = 0, lsd_count = 0;
  for (std::size_t i = 0; i < corpus.items.size(); ++i) {
    switch (corpus.items[i].kind) {
      case ItemKind::Terminal:
        if (corpus.items[i].text.empty())
          return Violation{i + 1, "terminal with empty text"};
        ++terminal_count;
        break;
      case ItemKind::Lsd:
        ++open;
        ++lsd_count;
        break;
      case ItemKind::Rsd:
        if (open == 0)
          return Violation{i + 1, "RSD before any matching LSD"};
        --open;
        break;
    }
  }
  if (open > 0)
    return Violation{corpus.items.size(),
                     std::to_string(open) + " unclosed LSD at end"};

  if (corpus.terminal_locations.size() != terminal_count)
    return Violation{0, "terminal location table has " +
                            std::to_string(corpus.terminal_locations.size()) +
                            " entries for " + std::to_string(terminal_count) +
                            " terminals"};
  if (corpus.tree_locations.size() != lsd_count)
    return Violation{0, "tree location table has " +
                            std::to_string(corpus.tree_locations.size()) +
                            " entries for " + std::to_string(lsd_count) + " subtrees"};

  for (std::size_t i = 0; i < corpus.terminal_locations.size(); ++i) {
    const auto& s = corpus.terminal_locations[i];
    if (s.byte_start >= s.byte_end)
      return Violation{0, "terminal " + std::to_string(i + 1) + ": empty byte span"};
  }
  for (std::size_t i = 0; i < corpus.tree_locations.size(); ++i) {
    const auto& t = corpus.tree_locations[i];
    if (t.lsd.byte_start >= t.lsd.byte_end || t.rsd.byte_start >= t.rsd.byte_end)
      return Violation{0, "subtree " + std::to_string(i + 1) + ": empty delimiter span"};
    if (t.lsd.byte_end > t.rsd.byte_start)
      return Violation{0, "subtree " + std::to_string(i + 1) +
                              ": LSD span does not precede RSD span"};
  }
  return std::nullopt;
}

}  // namespace treealign
