#include "space/extraction.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace space {

namespace {

// Words before a '.' that never terminate a sentence: compass points,
// common units, and "u"/"s" so "U.S." survives intact.
const std::unordered_set<std::string>& dot_abbreviations() {
  static const std::unordered_set<std::string> abbrevs = {
      "n", "s", "e", "w", "ne", "nw", "se", "sw",
      "nne", "ene", "ese", "sse", "ssw", "wsw", "wnw", "nnw",
      "mph", "kt", "kts", "mt", "ft", "no", "vs", "u",
  };
  return abbrevs;
}

bool is_space_char(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string word_before(std::string_view text, std::size_t dot) {
  std::size_t end = dot;
  std::size_t begin = end;
  while (begin > 0 && is_word_char(text[begin - 1])) --begin;
  std::string w(text.substr(begin, end - begin));
  for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return w;
}

// Blank lines and AFD delimiters ("&&", "$$", ".SYNOPSIS...") break
// sections; a single hard-wrap newline does not.
bool is_section_break_line(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && is_space_char(line[i])) ++i;
  if (i == line.size()) return true;  // blank
  std::string_view body = line.substr(i);
  if (body.rfind("&&", 0) == 0 || body.rfind("$$", 0) == 0) return true;
  if (body.size() >= 2 && body[0] == '.' &&
      std::isupper(static_cast<unsigned char>(body[1]))) {
    return true;
  }
  return false;
}

void emit(std::string_view text, std::size_t begin, std::size_t end,
          std::vector<Span>& out) {
  while (begin < end && is_space_char(text[begin])) ++begin;
  while (end > begin && is_space_char(text[end - 1])) --end;
  if (begin < end) out.push_back({begin, end});
}

}  // namespace

std::vector<Span> segment_sentences(std::string_view text) {
  std::vector<Span> out;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '!' || c == '?') {
      emit(text, start, i + 1, out);
      start = i + 1;
      ++i;
      continue;
    }
    if (c == '.') {
      // A '.' ends a sentence only before whitespace or end of text, so
      // decimals ("10.5"), initials ("U.S.") and ellipsis headers
      // (".SYNOPSIS...") stay intact.
      bool at_boundary = i + 1 >= text.size() || is_space_char(text[i + 1]);
      bool abbrev = dot_abbreviations().count(word_before(text, i)) != 0;
      if (at_boundary && !abbrev) {
        emit(text, start, i + 1, out);
        start = i + 1;
      }
      ++i;
      continue;
    }
    if (c == '\n') {
      // Look at the upcoming line; section breaks end the sentence.
      std::size_t line_end = text.find('\n', i + 1);
      if (line_end == std::string_view::npos) line_end = text.size();
      std::string_view line = text.substr(i + 1, line_end - (i + 1));
      if (is_section_break_line(line)) {
        emit(text, start, i, out);
        // ".HEADER..." break lines open the next sentence (their tail can
        // carry text); blank and "&&"/"$$" lines belong to no sentence.
        std::size_t j = 0;
        while (j < line.size() && is_space_char(line[j])) ++j;
        bool header = j < line.size() && line[j] == '.';
        start = header ? i + 1 : line_end;
        i = line_end;
        continue;
      }
    }
    ++i;
  }
  emit(text, start, text.size(), out);
  return out;
}

PhenomenonConfig PhenomenonConfig::load(std::string_view definition_text) {
  PhenomenonConfig cfg;
  std::istringstream in{std::string(definition_text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = normalize_ws(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t bar = t.find('|');
    if (bar == std::string::npos) {
      throw ExtractionError("config line " + std::to_string(lineno) +
                            ": expected 'kind|phrase'");
    }
    std::string kind = t.substr(0, bar);
    std::string phrase = t.substr(bar + 1);
    if (phrase.empty()) {
      throw ExtractionError("config line " + std::to_string(lineno) +
                            ": empty phrase");
    }
    if (kind == "name") cfg.name = phrase;
    else if (kind == "H") cfg.positive_terms.push_back(phrase);
    else if (kind == "L") cfg.negative_terms.push_back(phrase);
    else if (kind == "exclude") cfg.exclusion_patterns.push_back(phrase);
    else {
      throw ExtractionError("config line " + std::to_string(lineno) +
                            ": unknown kind '" + kind + "'");
    }
  }
  cfg.validate();
  return cfg;
}

void PhenomenonConfig::validate() const {
  std::unordered_set<std::string> pos;
  for (const std::string& t : positive_terms) pos.insert(fold(t));
  for (const std::string& t : negative_terms) {
    if (pos.count(fold(t))) {
      throw ExtractionError("term '" + t + "' declared both H and L");
    }
  }
  for (const std::string& p : exclusion_patterns) {
    std::string fp = fold(p);
    bool contains = false;
    for (const std::string& t : positive_terms) {
      std::string ft = fold(t);
      if (fp != ft && fp.find(ft) != std::string::npos) contains = true;
    }
    for (const std::string& t : negative_terms) {
      std::string ft = fold(t);
      if (fp != ft && fp.find(ft) != std::string::npos) contains = true;
    }
    if (!contains) {
      throw ExtractionError("exclusion pattern '" + p +
                            "' does not contain any term");
    }
  }
}

namespace {

struct TermEntry {
  std::string phrase;
  Phase phase;
};

}  // namespace

std::vector<PhenomenonObject> extract_objects(std::string_view text,
                                              const PhenomenonConfig& config,
                                              const LocationHierarchy& hierarchy,
                                              const std::string& station,
                                              Source source) {
  if (!hierarchy.has_node(station)) {
    throw ExtractionError("unknown station node '" + station + "'");
  }

  std::vector<TermEntry> terms;
  for (const std::string& t : config.positive_terms)
    terms.push_back({t, Phase::Positive});
  for (const std::string& t : config.negative_terms)
    terms.push_back({t, Phase::Negative});
  // Longest-match-first.
  std::sort(terms.begin(), terms.end(), [](const TermEntry& a, const TermEntry& b) {
    if (a.phrase.size() != b.phrase.size()) return a.phrase.size() > b.phrase.size();
    return a.phrase < b.phrase;
  });

  std::vector<PhenomenonObject> objects;
  std::vector<Span> sentences = segment_sentences(text);
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    std::string_view sentence =
        text.substr(sentences[si].begin, sentences[si].length());
    const std::size_t base = sentences[si].begin;

    std::vector<Span> excluded;
    for (const std::string& pattern : config.exclusion_patterns) {
      for (Span s : find_phrase(sentence, pattern)) excluded.push_back(s);
    }

    // Term occurrences, longest-match-first, non-overlapping.
    std::vector<std::pair<Span, Phase>> hits;
    for (const TermEntry& term : terms) {
      for (Span s : find_phrase(sentence, term.phrase)) {
        bool taken = false;
        for (const auto& [prev, phase] : hits) {
          if (prev.overlaps(s)) { taken = true; break; }
        }
        if (!taken) hits.emplace_back(s, term.phase);
      }
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first.begin < b.first.begin; });

    for (const auto& [span, phase] : hits) {
      bool suppressed = false;
      for (Span ex : excluded) {
        if (ex.contains(span)) { suppressed = true; break; }
      }
      if (suppressed) continue;

      PhenomenonObject obj;
      obj.phase = phase;
      obj.term = std::string(sentence.substr(span.begin, span.length()));
      obj.sentence_index = static_cast<int>(si);
      obj.char_span = {base + span.begin, base + span.end};
      obj.source = source;

      // Bind every toponym that follows the term within the sentence.
      std::string_view tail = sentence.substr(span.end);
      std::vector<std::pair<std::size_t, std::string>> found;
      std::vector<Span> used;
      for (const std::string& alias : hierarchy.aliases_by_length()) {
        for (Span s : find_phrase(tail, alias)) {
          bool taken = false;
          for (Span prev : used) {
            if (prev.overlaps(s)) { taken = true; break; }
          }
          if (taken) continue;
          used.push_back(s);
          found.emplace_back(s.begin, *hierarchy.resolve(alias));
        }
      }
      std::sort(found.begin(), found.end());
      std::unordered_set<std::string> seen;
      for (auto& [pos, id] : found) {
        if (seen.insert(id).second) obj.locations.push_back(std::move(id));
      }
      if (obj.locations.empty()) obj.locations.push_back(station);
      objects.push_back(std::move(obj));
    }
  }
  return objects;
}

}  // namespace space
