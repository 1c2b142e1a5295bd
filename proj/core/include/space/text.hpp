#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace space {

// Byte span [begin, end) into a source string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  bool operator==(const Span&) const = default;
};

bool is_word_char(char c);

// Lowercases ASCII, trims, and collapses internal whitespace runs to a
// single space. Canonical form for alias and keyword comparison.
std::string fold(std::string_view s);

// Case-insensitive phrase search with word boundaries at both ends.
// Whitespace runs in the text match a single space in the phrase, so
// phrases still match across hard-wrapped lines.
std::vector<Span> find_phrase(std::string_view text, std::string_view phrase);

// True if the phrase occurs anywhere in text (word-boundary, folded).
bool contains_phrase(std::string_view text, std::string_view phrase);

// Lowercase tokens split on non-alphanumeric bytes; digits kept.
std::vector<std::string> tokenize(std::string_view text);

// Collapses all whitespace runs to single spaces and trims.
std::string normalize_ws(std::string_view s);

// FNV-1a 64-bit. Stable across platforms; used for fixture names,
// corpus hashes, and per-sample seed mixing.
std::uint64_t fnv1a(std::string_view s);

}  // namespace space
