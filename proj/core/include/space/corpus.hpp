#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "space/ingest.hpp"
#include "space/scoring.hpp"

namespace space {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

struct MetricStats {
  double mean = 0.0;
  std::optional<double> sem;  // absent when n < 2
  long n = 0;
};

// (mean, sem) with sample (n-1) standard deviation. Throws on empty input.
MetricStats aggregate_stats(const std::vector<double>& values);

struct Report {
  std::string model_name;
  std::string phenomenon;
  std::string mode;  // "local", "aggregate", or "both"
  std::string corpus_hash;
  long samples_total = 0;
  long samples_undefined_local = 0;
  long forecasts_total = 0;
  long forecasts_undefined_aggregate = 0;
  // Ordered metric-name -> stats rows.
  std::vector<std::pair<std::string, MetricStats>> rows;
  std::vector<std::string> warnings;

  std::string to_json() const;
  std::string to_table() const;
};

// Deterministic draw of one training reference text with the test
// sample's station and calendar month. Throws on an empty stratum.
std::string climatology_baseline(const Sample& test_sample,
                                 const std::vector<Sample>& training_pool,
                                 std::uint64_t seed);

// Issue-time date-range filter ("YYYY-MM-DD", inclusive); the
// train/validation/test split helper.
std::vector<Sample> filter_by_issue_range(const std::vector<Sample>& samples,
                                          const std::string& start,
                                          const std::string& end);

enum class EvalMode { Local, Aggregate, Both };

struct EvaluateOptions {
  std::string model_name = "model";
  EvalMode mode = EvalMode::Both;
  int jobs = 1;
};

struct EvalResult {
  Report report;
  // One JSON object per line: local score per sample (with rouge_l and
  // token_f1), aggregate score per forecast.
  std::vector<std::string> score_lines;
};

// Scores a corpus: SPACE-local per sample, SPACE-aggregate per forecast
// (samples grouped by forecast_id), ROUGE-L and token F1 per sample.
// `predictions` maps sample_id -> predicted text and must cover every
// sample; `station_nodes` maps office ids to hierarchy node ids.
// Deterministic for any jobs count.
EvalResult evaluate_corpus(
    const std::vector<Sample>& samples,
    const std::unordered_map<std::string, std::string>& predictions,
    const PhenomenonConfig& config, const LocationHierarchy& hierarchy,
    const std::unordered_map<std::string, std::string>& station_nodes,
    const EvaluateOptions& options);

}  // namespace space
