#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "space/ingest.hpp"
#include "space/timeutil.hpp"

namespace space {

class PreprocessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FilterRules {
  std::vector<std::string> include_keywords;
  std::vector<std::string> exclude_model_keywords;
  std::vector<std::string> exclude_synoptic_keywords;
  std::vector<std::string> lead_time_phrases;
  int min_words = 30;
  int max_words = 200;
  int horizon_days = 2;

  // Parses `include|phrase`, `model|phrase`, `synoptic|phrase`,
  // `leadtime|phrase`, `min_words|N`, `max_words|N`, `horizon_days|N`.
  static FilterRules load(std::string_view definition_text);
  void validate() const;
};

// Per-stage drop counters for one filter run (or an accumulation).
struct FilterStats {
  long sentences_in = 0;
  long dropped_no_include = 0;
  long dropped_exclude = 0;
  long dropped_truncated = 0;
  long sentences_kept = 0;
  long rejected_lead_time = 0;
  long rejected_too_short = 0;
  long rejected_too_long = 0;

  FilterStats& operator+=(const FilterStats& o);
};

// The AFD filtering pipeline: keep only sentences carrying an include
// keyword, drop sentences with model or synoptic exclusion keywords,
// truncate at the first weekday mention beyond the lead-time horizon,
// then reject the whole sample on surviving lead-time phrases or a word
// count outside [min_words, max_words]. Returns the filtered text
// (sentences joined with single spaces) or nullopt on rejection.
std::optional<std::string> filter_afd(std::string_view raw_text,
                                      UtcTime issue_time,
                                      const FilterRules& rules,
                                      FilterStats* stats = nullptr);

struct QualityReject {
  Sample sample;
  std::string reason;  // duplicate | control-chars | missing-field | pairing-window
};

struct QualityResult {
  std::vector<Sample> kept;
  std::vector<QualityReject> rejected;
  std::map<std::string, long> reason_counts;
};

QualityResult quality_control(const std::vector<Sample>& samples);

}  // namespace space
