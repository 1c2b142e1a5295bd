#include "space/preprocess.hpp"

#include <sstream>
#include <unordered_set>

#include "space/extraction.hpp"
#include "space/text.hpp"

namespace space {

FilterStats& FilterStats::operator+=(const FilterStats& o) {
  sentences_in += o.sentences_in;
  dropped_no_include += o.dropped_no_include;
  dropped_exclude += o.dropped_exclude;
  dropped_truncated += o.dropped_truncated;
  sentences_kept += o.sentences_kept;
  rejected_lead_time += o.rejected_lead_time;
  rejected_too_short += o.rejected_too_short;
  rejected_too_long += o.rejected_too_long;
  return *this;
}

FilterRules FilterRules::load(std::string_view definition_text) {
  FilterRules rules;
  rules.include_keywords.clear();
  std::istringstream in{std::string(definition_text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = normalize_ws(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t bar = t.find('|');
    if (bar == std::string::npos) {
      throw PreprocessError("rules line " + std::to_string(lineno) +
                            ": expected 'kind|value'");
    }
    std::string kind = t.substr(0, bar);
    std::string value = t.substr(bar + 1);
    if (value.empty()) {
      throw PreprocessError("rules line " + std::to_string(lineno) +
                            ": empty value");
    }
    if (kind == "include") rules.include_keywords.push_back(value);
    else if (kind == "model") rules.exclude_model_keywords.push_back(value);
    else if (kind == "synoptic") rules.exclude_synoptic_keywords.push_back(value);
    else if (kind == "leadtime") rules.lead_time_phrases.push_back(value);
    else if (kind == "min_words") rules.min_words = std::stoi(value);
    else if (kind == "max_words") rules.max_words = std::stoi(value);
    else if (kind == "horizon_days") rules.horizon_days = std::stoi(value);
    else {
      throw PreprocessError("rules line " + std::to_string(lineno) +
                            ": unknown kind '" + kind + "'");
    }
  }
  rules.validate();
  return rules;
}

void FilterRules::validate() const {
  if (include_keywords.empty() || exclude_model_keywords.empty() ||
      exclude_synoptic_keywords.empty() || lead_time_phrases.empty()) {
    throw PreprocessError("rules: all keyword lists must be nonempty");
  }
  if (min_words >= max_words) {
    throw PreprocessError("rules: min_words must be below max_words");
  }
}

namespace {

const char* const kWeekdayNames[] = {"monday",   "tuesday", "wednesday",
                                     "thursday", "friday",  "saturday",
                                     "sunday"};

// Days until the next occurrence of `mentioned` from `issue` weekday,
// in 1..7 (same weekday reads as next week's).
int weekday_offset(int issue, int mentioned) {
  int diff = (mentioned - issue + 7) % 7;
  return diff == 0 ? 7 : diff;
}

long count_words(std::string_view text) {
  return static_cast<long>(tokenize(text).size());
}

}  // namespace

std::optional<std::string> filter_afd(std::string_view raw_text,
                                      UtcTime issue_time,
                                      const FilterRules& rules,
                                      FilterStats* stats) {
  FilterStats local;
  FilterStats& st = stats ? *stats : local;

  const int issue_weekday = weekday(issue_time);
  std::vector<Span> sentences = segment_sentences(raw_text);
  st.sentences_in += static_cast<long>(sentences.size());

  std::vector<std::string> survivors;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::string_view sentence =
        raw_text.substr(sentences[i].begin, sentences[i].length());

    bool has_include = false;
    for (const std::string& kw : rules.include_keywords) {
      if (contains_phrase(sentence, kw)) { has_include = true; break; }
    }
    if (!has_include) {
      ++st.dropped_no_include;
      continue;
    }

    bool excluded = false;
    for (const std::string& kw : rules.exclude_model_keywords) {
      if (contains_phrase(sentence, kw)) { excluded = true; break; }
    }
    if (!excluded) {
      for (const std::string& kw : rules.exclude_synoptic_keywords) {
        if (contains_phrase(sentence, kw)) { excluded = true; break; }
      }
    }
    if (excluded) {
      ++st.dropped_exclude;
      continue;
    }
    survivors.push_back(normalize_ws(sentence));
  }

  // Day-of-week truncation over the surviving sentences, in order.
  std::vector<std::string> kept;
  bool truncated = false;
  for (std::string& sentence : survivors) {
    if (!truncated) {
      for (const char* day : kWeekdayNames) {
        if (!contains_phrase(sentence, day)) continue;
        int offset = weekday_offset(issue_weekday, *weekday_from_name(day));
        if (offset > rules.horizon_days) {
          truncated = true;
          break;
        }
      }
    }
    if (truncated) {
      ++st.dropped_truncated;
      continue;
    }
    kept.push_back(std::move(sentence));
  }

  std::string joined;
  for (const std::string& s : kept) {
    if (!joined.empty()) joined.push_back(' ');
    joined += s;
  }

  for (const std::string& phrase : rules.lead_time_phrases) {
    if (contains_phrase(joined, phrase)) {
      ++st.rejected_lead_time;
      return std::nullopt;
    }
  }
  const long words = count_words(joined);
  if (words < rules.min_words) {
    ++st.rejected_too_short;
    return std::nullopt;
  }
  if (words > rules.max_words) {
    ++st.rejected_too_long;
    return std::nullopt;
  }
  st.sentences_kept += static_cast<long>(kept.size());
  return joined;
}

QualityResult quality_control(const std::vector<Sample>& samples) {
  QualityResult result;
  std::unordered_set<std::string> seen_texts;

  auto reject = [&](const Sample& s, const std::string& reason) {
    result.rejected.push_back({s, reason});
    ++result.reason_counts[reason];
  };

  for (const Sample& s : samples) {
    if (s.sample_id.empty() || s.station.empty() || s.reference_text.empty()) {
      reject(s, "missing-field");
      continue;
    }
    bool has_control = false;
    for (unsigned char c : s.reference_text) {
      if (c < 0x20 && c != '\n' && c != '\r' && c != '\t') {
        has_control = true;
        break;
      }
    }
    if (has_control) {
      reject(s, "control-chars");
      continue;
    }
    if (!s.forecast_id.empty()) {
      std::optional<UtcTime> cycle = parse_iso8601(
          s.forecast_id.substr(0, 13) + ":00:00Z");
      if (!cycle || std::abs(s.issue_time - *cycle) > 12 * 3600) {
        reject(s, "pairing-window");
        continue;
      }
    }
    if (!seen_texts.insert(s.reference_text).second) {
      reject(s, "duplicate");
      continue;
    }
    result.kept.push_back(s);
  }
  return result;
}

}  // namespace space
