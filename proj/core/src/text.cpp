#include "space/text.hpp"

#include <cctype>

namespace space {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

namespace {

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(lower(c));
  }
  return out;
}

std::string normalize_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

namespace {

// Attempts to match `phrase` (already folded) at text[pos..]; returns the
// end offset on success, 0 on failure. Whitespace runs in the text match
// one ' ' in the phrase.
std::size_t match_at(std::string_view text, std::size_t pos,
                     std::string_view phrase) {
  std::size_t t = pos;
  for (std::size_t p = 0; p < phrase.size(); ++p) {
    if (phrase[p] == ' ') {
      if (t >= text.size() || !is_space(text[t])) return 0;
      while (t < text.size() && is_space(text[t])) ++t;
    } else {
      if (t >= text.size() || lower(text[t]) != phrase[p]) return 0;
      ++t;
    }
  }
  return t;
}

}  // namespace

std::vector<Span> find_phrase(std::string_view text, std::string_view phrase) {
  std::vector<Span> out;
  const std::string folded = fold(phrase);
  if (folded.empty()) return out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_word_char(text[i])) continue;
    if (i > 0 && is_word_char(text[i - 1])) continue;  // not a word start
    std::size_t end = match_at(text, i, folded);
    if (end == 0) continue;
    if (end < text.size() && is_word_char(text[end]) &&
        is_word_char(text[end - 1])) {
      continue;  // phrase ends mid-word
    }
    out.push_back({i, end});
    i = end - 1;
  }
  return out;
}

bool contains_phrase(std::string_view text, std::string_view phrase) {
  return !find_phrase(text, phrase).empty();
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (is_word_char(c)) {
      cur.push_back(lower(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace space
