#include "treealign/normalize.hpp"

#include <cctype>
#include <regex>

namespace treealign {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

struct Field {
  std::size_t start = 0;  // byte offset into the whole source
  std::size_t end = 0;
  std::string_view text;
};

std::vector<Field> split_fields(std::string_view line, std::size_t line_start) {
  std::vector<Field> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_ws(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_ws(line[j])) ++j;
    fields.push_back({line_start + i, line_start + j, line.substr(i, j - i)});
    i = j;
  }
  return fields;
}

}  // namespace

std::optional<CorpusFormat> parse_format(std::string_view name) {
  if (name == "penn") return CorpusFormat::Penn;
  if (name == "susanne") return CorpusFormat::Susanne;
  if (name == "generic") return CorpusFormat::Generic;
  return std::nullopt;
}

std::string_view format_name(CorpusFormat format) {
  switch (format) {
    case CorpusFormat::Penn: return "penn";
    case CorpusFormat::Susanne: return "susanne";
    case CorpusFormat::Generic: return "generic";
  }
  return "?";
}

NormalizedCorpus normalize(CorpusFormat format, std::string_view source,
                           std::string source_id) {
  switch (format) {
    case CorpusFormat::Penn: return normalize_penn(source, std::move(source_id));
    case CorpusFormat::Susanne: return normalize_susanne(source, std::move(source_id));
    case CorpusFormat::Generic: return normalize_generic(source, std::move(source_id));
  }
  throw std::logic_error("unknown corpus format");
}

NormalizedCorpus normalize_penn(std::string_view source, std::string source_id) {
  NormalizedCorpus c;
  c.source_id = std::move(source_id);
  std::vector<std::size_t> open;  // 0-based subtree ordinals
  bool after_open = false;
  std::size_t i = 0;
  const std::size_t n = source.size();
  while (i < n) {
    const char ch = source[i];
    if (is_ws(ch)) {
      ++i;
    } else if (ch == '(') {
      c.items.push_back(CorpusItem::lsd());
      c.tree_locations.push_back({{i, i + 1}, {}});
      open.push_back(c.tree_locations.size() - 1);
      after_open = true;
      ++i;
    } else if (ch == ')') {
      if (open.empty())
        throw ParseError(c.source_id, i, "unbalanced ')'");
      c.items.push_back(CorpusItem::rsd());
      c.tree_locations[open.back()].rsd = {i, i + 1};
      open.pop_back();
      after_open = false;
      ++i;
    } else {
      std::size_t j = i;
      while (j < n && !is_ws(source[j]) && source[j] != '(' && source[j] != ')') ++j;
      if (after_open) {
        after_open = false;  // the label of the group; dropped
      } else {
        c.items.push_back(CorpusItem::terminal(std::string(source.substr(i, j - i))));
        c.terminal_locations.push_back({i, j});
      }
      i = j;
    }
  }
  if (!open.empty())
    throw ParseError(c.source_id, c.tree_locations[open.front()].lsd.byte_start,
                     std::to_string(open.size()) + " unclosed '(' at end of input");
  return c;
}

NormalizedCorpus normalize_susanne(std::string_view source, std::string source_id) {
  NormalizedCorpus c;
  c.source_id = std::move(source_id);
  std::vector<std::size_t> open;

  std::size_t line_start = 0;
  while (line_start < source.size()) {
    std::size_t line_end = source.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = source.size();
    std::string_view line = source.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto fields = split_fields(line, line_start);
    if (!fields.empty()) {
      if (fields.size() < 2)
        throw ParseError(c.source_id, fields[0].start,
                         "record needs a word field and a parse field");
      const Field& word = fields[fields.size() >= 6 ? 3 : 0];
      const Field& parse = fields.back();

      const std::string_view pf = parse.text;
      const std::size_t dot = pf.find('.');
      if (dot == std::string_view::npos)
        throw ParseError(c.source_id, parse.start, "parse field has no '.'");
      const std::string_view pre = pf.substr(0, dot);
      const std::string_view post = pf.substr(dot + 1);
      if (pre.find(']') != std::string_view::npos)
        throw ParseError(c.source_id, parse.start, "']' before '.' in parse field");
      if (!pre.empty() && pre[0] != '[')
        throw ParseError(c.source_id, parse.start, "parse field must open with '['");
      if (post.find('[') != std::string_view::npos)
        throw ParseError(c.source_id, parse.start + dot + 1,
                         "'[' after '.' in parse field");
      if (!post.empty() && post.back() != ']')
        throw ParseError(c.source_id, parse.start + dot + 1,
                         "trailing text after last ']' in parse field");

      // opening brackets: each '[Tag' run before the dot
      for (std::size_t p = 0; p < pre.size();) {
        std::size_t q = pre.find('[', p + 1);
        if (q == std::string_view::npos) q = pre.size();
        c.items.push_back(CorpusItem::lsd());
        c.tree_locations.push_back({{parse.start + p, parse.start + q}, {}});
        open.push_back(c.tree_locations.size() - 1);
        p = q;
      }

      c.items.push_back(CorpusItem::terminal(std::string(word.text)));
      c.terminal_locations.push_back({word.start, word.end});

      // closing brackets: each 'Tag]' run after the dot
      std::size_t seg = 0;
      while (seg < post.size()) {
        std::size_t q = post.find(']', seg);
        if (q == std::string_view::npos) break;  // unreachable given the checks above
        if (open.empty())
          throw ParseError(c.source_id, parse.start + dot + 1 + seg,
                           "bracket closed with none open");
        c.items.push_back(CorpusItem::rsd());
        c.tree_locations[open.back()].rsd = {parse.start + dot + 1 + seg,
                                             parse.start + dot + 1 + q + 1};
        open.pop_back();
        seg = q + 1;
      }
    }
    line_start = line_end + 1;
  }
  if (!open.empty())
    throw ParseError(c.source_id, c.tree_locations[open.front()].lsd.byte_start,
                     std::to_string(open.size()) + " unclosed brackets at end of input");
  return c;
}

std::string generic_escape(std::string_view terminal) {
  std::string out;
  out.reserve(terminal.size());
  for (char ch : terminal) {
    if (ch == '{' || ch == '}' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

std::string generic_unescape(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token[i] == '\\' && i + 1 < token.size() &&
        (token[i + 1] == '{' || token[i + 1] == '}' || token[i + 1] == '\\')) {
      out.push_back(token[i + 1]);
      ++i;
    } else {
      out.push_back(token[i]);
    }
  }
  return out;
}

NormalizedCorpus normalize_generic(std::string_view source, std::string source_id) {
  NormalizedCorpus c;
  c.source_id = std::move(source_id);
  std::vector<std::size_t> open;
  const auto fields = split_fields(source, 0);
  for (const Field& f : fields) {
    if (f.text == "{") {
      c.items.push_back(CorpusItem::lsd());
      c.tree_locations.push_back({{f.start, f.end}, {}});
      open.push_back(c.tree_locations.size() - 1);
    } else if (f.text == "}") {
      if (open.empty())
        throw ParseError(c.source_id, f.start, "'}' before any matching '{'");
      c.items.push_back(CorpusItem::rsd());
      c.tree_locations[open.back()].rsd = {f.start, f.end};
      open.pop_back();
    } else {
      c.items.push_back(CorpusItem::terminal(generic_unescape(f.text)));
      c.terminal_locations.push_back({f.start, f.end});
    }
  }
  if (!open.empty())
    throw ParseError(c.source_id, c.tree_locations[open.front()].lsd.byte_start,
                     std::to_string(open.size()) + " unclosed '{' at end of input");
  return c;
}

std::vector<RewriteRule> parse_rewrite_rules(std::string_view text,
                                             const std::string& source_id) {
  (void)source_id;
  std::vector<RewriteRule> rules;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line[0] != '#') {
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos)
        rules.push_back({std::string(line), ""});
      else
        rules.push_back({std::string(line.substr(0, tab)),
                         std::string(line.substr(tab + 1))});
    }
    pos = end + 1;
  }
  return rules;
}

std::vector<RewriteRule> empty_category_rules() {
  return {
      {"^\\*(?:[A-Z?]+\\*)?(?:-[0-9]+)?$", ""},  // *, *-1, *T*, *T*-2, *U*, *?* ...
      {"^0$", ""},
  };
}

NormalizedCorpus apply_rewrites(const NormalizedCorpus& corpus,
                                const std::vector<RewriteRule>& rules) {
  if (rules.empty()) return corpus;

  std::vector<std::optional<std::regex>> compiled;
  compiled.reserve(rules.size());
  for (const auto& rule : rules) {
    try {
      compiled.emplace_back(std::regex(rule.pattern));
    } catch (const std::regex_error&) {
      compiled.emplace_back(std::nullopt);  // exact-string rule only
    }
  }

  NormalizedCorpus out;
  out.source_id = corpus.source_id;
  out.tree_locations = corpus.tree_locations;
  out.items.reserve(corpus.items.size());
  out.terminal_locations.reserve(corpus.terminal_locations.size());

  std::size_t terminal_pos = 0;
  for (const auto& item : corpus.items) {
    if (item.kind != ItemKind::Terminal) {
      out.items.push_back(item);
      continue;
    }
    std::string text = item.text;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      if (text == rules[k].pattern) {
        text = rules[k].replacement;
      } else if (compiled[k]) {
        std::smatch m;
        if (std::regex_match(text, m, *compiled[k])) text = m.format(rules[k].replacement);
      }
    }
    const SpanLocation loc = corpus.terminal_locations[terminal_pos++];
    if (!text.empty()) {
      out.items.push_back(CorpusItem::terminal(std::move(text)));
      out.terminal_locations.push_back(loc);
    }
  }
  return out;
}

}  // namespace treealign
