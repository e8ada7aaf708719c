#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treealign/corpus.hpp"
#include "treealign/errors.hpp"

namespace treealign {

enum class CorpusFormat { Penn, Susanne, Generic };

std::optional<CorpusFormat> parse_format(std::string_view name);
std::string_view format_name(CorpusFormat format);

// Penn-style bracketing: every '(' is an LSD, every ')' an RSD; the atom
// immediately after '(' is a label and is dropped, all other atoms are
// terminals. Throws ParseError on unbalanced parentheses.
NormalizedCorpus normalize_penn(std::string_view source, std::string source_id);

// Susanne-style records: one word per line with a parse field whose brackets
// before the '.' open around the word and those after it close. Lines with
// six or more fields use field 4 as the word (full column layout); shorter
// lines use the first field. The parse field is always the last field.
NormalizedCorpus normalize_susanne(std::string_view source, std::string source_id);

// Interchange format: whitespace-separated tokens, '{' = LSD, '}' = RSD,
// anything else a terminal. Brace and backslash characters inside terminals
// are backslash-escaped.
NormalizedCorpus normalize_generic(std::string_view source, std::string source_id);

NormalizedCorpus normalize(CorpusFormat format, std::string_view source,
                           std::string source_id);

std::string generic_escape(std::string_view terminal);
std::string generic_unescape(std::string_view token);

// Terminal-text rewrite rule. The pattern matches either the exact token or,
// when it compiles as a regular expression, the whole token; replacement may
// reference capture groups ($1, ...). A terminal rewritten to the empty
// string is removed from the corpus.
struct RewriteRule {
  std::string pattern;
  std::string replacement;
};

// Rules file: one rule per line, pattern TAB replacement; '#' lines are
// comments. A line without a TAB is a removal rule.
std::vector<RewriteRule> parse_rewrite_rules(std::string_view text,
                                             const std::string& source_id);

// Built-in rules dropping empty-category terminals (traces such as *T*-1,
// *U*, bare * and 0).
std::vector<RewriteRule> empty_category_rules();

// Applies rules in order to every terminal's text. Structure and locations
// are untouched except that terminals rewritten to "" are removed, with
// terminal indices compacted.
NormalizedCorpus apply_rewrites(const NormalizedCorpus& corpus,
                                const std::vector<RewriteRule>& rules);

}  // namespace treealign
