#include "space/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include <json.hpp>

#include "space/text.hpp"
#include "space/textmetrics.hpp"

namespace space {

using nlohmann::json;

MetricStats aggregate_stats(const std::vector<double>& values) {
  if (values.empty()) throw CorpusError("aggregate_stats: empty input");
  MetricStats st;
  st.n = static_cast<long>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  st.mean = sum / st.n;
  if (st.n >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - st.mean) * (v - st.mean);
    double sd = std::sqrt(ss / (st.n - 1));
    st.sem = sd / std::sqrt(static_cast<double>(st.n));
  }
  return st;
}

std::string climatology_baseline(const Sample& test_sample,
                                 const std::vector<Sample>& training_pool,
                                 std::uint64_t seed) {
  const int month = from_utc(test_sample.issue_time).month;
  std::vector<const Sample*> stratum;
  for (const Sample& s : training_pool) {
    if (s.station == test_sample.station &&
        from_utc(s.issue_time).month == month) {
      stratum.push_back(&s);
    }
  }
  if (stratum.empty()) {
    throw CorpusError("climatology: empty stratum for station '" +
                      test_sample.station + "' month " +
                      std::to_string(month));
  }
  std::sort(stratum.begin(), stratum.end(),
            [](const Sample* a, const Sample* b) {
              return a->sample_id < b->sample_id;
            });
  // Modulo draw rather than uniform_int_distribution so the selection is
  // identical on every standard library.
  std::mt19937_64 gen(seed ^ fnv1a(test_sample.sample_id));
  return stratum[gen() % stratum.size()]->reference_text;
}

std::vector<Sample> filter_by_issue_range(const std::vector<Sample>& samples,
                                          const std::string& start,
                                          const std::string& end) {
  auto lo = parse_iso8601(start + "T00:00:00Z");
  auto hi = parse_iso8601(end + "T23:59:59Z");
  if (!lo || !hi) throw CorpusError("bad date range: " + start + ".." + end);
  std::vector<Sample> out;
  for (const Sample& s : samples) {
    if (s.issue_time >= *lo && s.issue_time <= *hi) out.push_back(s);
  }
  return out;
}

namespace {

json score_to_json(const SpaceScore& sc, const std::string& sample_id,
                   const std::string& forecast_id, const std::string& station) {
  json j;
  j["sample_id"] = sample_id;
  j["forecast_id"] = forecast_id;
  j["station"] = station;
  j["phenomenon"] = sc.phenomenon;
  j["mode"] = sc.mode == ScoreMode::Local ? "local" : "aggregate";
  j["s_m"] = sc.match_score;
  j["r_c"] = sc.coverage_ratio;
  j["s"] = sc.score;
  j["defined"] = sc.defined;
  j["n_L"] = sc.tally.n_L;
  j["n_H"] = sc.tally.n_H;
  j["m_pred_L"] = sc.tally.m_pred_L;
  j["m_pred_H"] = sc.tally.m_pred_H;
  j["m_ref_L"] = sc.tally.m_ref_L;
  j["m_ref_H"] = sc.tally.m_ref_H;
  return j;
}

// Runs fn(i) for i in [0, n) across `jobs` threads.
void parallel_for(long n, int jobs, const std::function<void(long)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> workers;
  int count = std::min<long>(jobs, n);
  workers.reserve(count);
  std::vector<std::exception_ptr> errors(count);
  for (int w = 0; w < count; ++w) {
    workers.emplace_back([&, w] {
      try {
        while (true) {
          long i = next.fetch_add(1);
          if (i >= n) return;
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : workers) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string node_for_station(
    const std::unordered_map<std::string, std::string>& station_nodes,
    const std::string& office) {
  auto it = station_nodes.find(office);
  if (it == station_nodes.end()) {
    throw CorpusError("station '" + office + "' not in the station registry");
  }
  return it->second;
}

}  // namespace

EvalResult evaluate_corpus(
    const std::vector<Sample>& samples,
    const std::unordered_map<std::string, std::string>& predictions,
    const PhenomenonConfig& config, const LocationHierarchy& hierarchy,
    const std::unordered_map<std::string, std::string>& station_nodes,
    const EvaluateOptions& options) {
  // Every prediction must reference a known sample, and every sample
  // needs a prediction.
  std::unordered_map<std::string, const Sample*> by_id;
  for (const Sample& s : samples) by_id.emplace(s.sample_id, &s);
  for (const auto& [id, text] : predictions) {
    if (!by_id.count(id)) throw CorpusError("unknown sample id '" + id + "'");
  }
  for (const Sample& s : samples) {
    if (!predictions.count(s.sample_id)) {
      throw CorpusError("missing prediction for sample '" + s.sample_id + "'");
    }
  }

  const long n = static_cast<long>(samples.size());
  const bool want_local = options.mode != EvalMode::Aggregate;
  const bool want_aggregate = options.mode != EvalMode::Local;

  struct LocalRow {
    SpaceScore score;
    double rouge = 0.0;
    double f1 = 0.0;
  };
  std::vector<LocalRow> locals(samples.size());

  std::uint64_t hash = fnv1a(config.name);
  for (const Sample& s : samples) {
    hash ^= fnv1a(s.sample_id) + fnv1a(s.reference_text) +
            fnv1a(predictions.at(s.sample_id));
  }

  parallel_for(n, options.jobs, [&](long i) {
    const Sample& s = samples[i];
    const std::string& pred = predictions.at(s.sample_id);
    LocalRow& row = locals[i];
    row.score = space_local(pred, s.reference_text,
                            node_for_station(station_nodes, s.station), config,
                            hierarchy);
    row.rouge = rouge_l_text(pred, s.reference_text);
    row.f1 = token_f1_text(pred, s.reference_text);
  });

  // Forecast pools in first-appearance order.
  std::vector<std::string> forecast_order;
  std::unordered_map<std::string, std::vector<long>> forecast_members;
  for (long i = 0; i < n; ++i) {
    const std::string& fid = samples[i].forecast_id;
    auto [it, inserted] = forecast_members.try_emplace(fid);
    if (inserted) forecast_order.push_back(fid);
    it->second.push_back(i);
  }

  std::vector<SpaceScore> aggregates(forecast_order.size());
  if (want_aggregate) {
    parallel_for(static_cast<long>(forecast_order.size()), options.jobs,
                 [&](long fi) {
                   std::vector<std::pair<std::string, std::string>> pred_texts;
                   std::vector<std::pair<std::string, std::string>> ref_texts;
                   for (long i : forecast_members.at(forecast_order[fi])) {
                     const Sample& s = samples[i];
                     std::string node = node_for_station(station_nodes, s.station);
                     pred_texts.emplace_back(node, predictions.at(s.sample_id));
                     ref_texts.emplace_back(node, s.reference_text);
                   }
                   aggregates[fi] =
                       space_aggregate(pred_texts, ref_texts, config, hierarchy);
                 });
  }

  EvalResult result;
  Report& report = result.report;
  report.model_name = options.model_name;
  report.phenomenon = config.name;
  report.mode = options.mode == EvalMode::Local      ? "local"
                : options.mode == EvalMode::Aggregate ? "aggregate"
                                                       : "both";
  char hash_buf[20];
  std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                static_cast<unsigned long long>(hash));
  report.corpus_hash = hash_buf;
  report.samples_total = n;
  report.forecasts_total = static_cast<long>(forecast_order.size());

  std::vector<double> local_s, local_sm, local_rc, rouge, f1;
  for (long i = 0; i < n; ++i) {
    const LocalRow& row = locals[i];
    rouge.push_back(row.rouge);
    f1.push_back(row.f1);
    if (want_local) {
      if (row.score.defined) {
        local_s.push_back(row.score.score);
        local_sm.push_back(row.score.match_score);
        local_rc.push_back(row.score.coverage_ratio);
      } else {
        ++report.samples_undefined_local;
      }
      result.score_lines.push_back(
          score_to_json(row.score, samples[i].sample_id,
                        samples[i].forecast_id, samples[i].station)
              .dump());
    }
  }

  std::vector<double> agg_s, agg_sm, agg_rc;
  if (want_aggregate) {
    for (std::size_t fi = 0; fi < forecast_order.size(); ++fi) {
      const SpaceScore& sc = aggregates[fi];
      if (sc.defined) {
        agg_s.push_back(sc.score);
        agg_sm.push_back(sc.match_score);
        agg_rc.push_back(sc.coverage_ratio);
      } else {
        ++report.forecasts_undefined_aggregate;
      }
      result.score_lines.push_back(
          score_to_json(sc, "", forecast_order[fi], "").dump());
    }
  }

  auto add_row = [&](const std::string& name, const std::vector<double>& vals) {
    if (!vals.empty()) report.rows.emplace_back(name, aggregate_stats(vals));
  };
  if (want_local) {
    add_row("space_local_s", local_s);
    add_row("space_local_s_m", local_sm);
    add_row("space_local_r_c", local_rc);
  }
  if (want_aggregate) {
    add_row("space_aggregate_s", agg_s);
    add_row("space_aggregate_s_m", agg_sm);
    add_row("space_aggregate_r_c", agg_rc);
  }
  add_row("rouge_l", rouge);
  add_row("token_f1", f1);

  if (want_local && want_aggregate && !local_s.empty() && !agg_s.empty()) {
    double local_mean = aggregate_stats(local_s).mean;
    double agg_mean = aggregate_stats(agg_s).mean;
    if (agg_mean < local_mean) {
      report.warnings.push_back(
          "mean aggregate score below mean local score; expected the "
          "opposite on realistic station spreads");
    }
  }
  return result;
}

std::string Report::to_json() const {
  json rows_json = json::object();
  json model_rows = json::object();
  for (const auto& [name, st] : rows) {
    json row;
    row["mean"] = st.mean;
    if (st.sem) row["sem"] = *st.sem;
    else row["sem"] = nullptr;
    row["n"] = st.n;
    model_rows[name] = row;
  }
  rows_json[model_name] = model_rows;

  json j;
  j["metadata"] = {
      {"phenomenon", phenomenon},
      {"mode", mode},
      {"corpus_hash", corpus_hash},
      {"tool_version", kToolVersion},
      {"schema_version", kSchemaVersion},
      {"samples_total", samples_total},
      {"samples_undefined_local", samples_undefined_local},
      {"forecasts_total", forecasts_total},
      {"forecasts_undefined_aggregate", forecasts_undefined_aggregate},
      {"warnings", warnings},
  };
  j["rows"] = rows_json;
  return j.dump(2);
}

std::string Report::to_table() const {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "model: %s  phenomenon: %s  mode: %s\n",
                model_name.c_str(), phenomenon.c_str(), mode.c_str());
  out += line;
  std::snprintf(line, sizeof(line),
                "samples: %ld (undefined local: %ld)  forecasts: %ld "
                "(undefined aggregate: %ld)\n",
                samples_total, samples_undefined_local, forecasts_total,
                forecasts_undefined_aggregate);
  out += line;
  std::snprintf(line, sizeof(line), "%-22s %10s %10s %8s\n", "metric", "mean",
                "sem", "n");
  out += line;
  for (const auto& [name, st] : rows) {
    if (st.sem) {
      std::snprintf(line, sizeof(line), "%-22s %10.4f %10.4f %8ld\n",
                    name.c_str(), st.mean, *st.sem, st.n);
    } else {
      std::snprintf(line, sizeof(line), "%-22s %10.4f %10s %8ld\n",
                    name.c_str(), st.mean, "-", st.n);
    }
    out += line;
  }
  for (const std::string& w : warnings) {
    out += "warning: " + w + "\n";
  }
  return out;
}

}  // namespace space
