#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "space/corpus.hpp"
#include "test_util.hpp"

using namespace space;

namespace {

LocationHierarchy& shipped_hierarchy() {
  static LocationHierarchy h = LocationHierarchy::load(
      testutil::read_file(testutil::data_path("hierarchy.txt")));
  return h;
}

PhenomenonConfig& pressure_config() {
  static PhenomenonConfig cfg = PhenomenonConfig::load(
      testutil::read_file(testutil::data_path("pressure.cfg")));
  return cfg;
}

std::unordered_map<std::string, std::string> station_nodes() {
  std::unordered_map<std::string, std::string> nodes;
  for (const Station& s : load_stations(
           testutil::read_file(testutil::data_path("stations.txt")))) {
    nodes[s.office] = s.node;
  }
  return nodes;
}

struct Corpus {
  std::vector<Sample> samples;
  std::unordered_map<std::string, std::string> predictions;
};

Corpus load_fixture_corpus() {
  Corpus c;
  std::ifstream in(testutil::fixture_path("corpus") + "/samples.jsonl");
  REQUIRE(in.good());
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) c.samples.push_back(Sample::from_json(line));
  }
  std::ifstream pin(testutil::fixture_path("corpus") + "/predictions.jsonl");
  REQUIRE(pin.good());
  while (std::getline(pin, line)) {
    if (line.empty()) continue;
    Sample p = Sample::from_json(line);
    c.predictions[p.sample_id] = p.predicted_text.value();
  }
  return c;
}

Sample make_sample(const std::string& id, const std::string& office,
                   const std::string& issue, const std::string& ref) {
  Sample s;
  s.sample_id = id;
  s.station = office;
  s.issue_time = parse_iso8601(issue).value();
  s.forecast_id = id.substr(id.find('-') + 1);
  s.reference_text = ref;
  return s;
}

}  // namespace

TEST_CASE("aggregate_stats mean and standard error") {
  MetricStats s = aggregate_stats({1.0, 2.0, 3.0});
  CHECK(s.mean == doctest::Approx(2.0));
  REQUIRE(s.sem.has_value());
  CHECK(*s.sem == doctest::Approx(0.5773502691896258));
  CHECK(s.n == 3);

  MetricStats half = aggregate_stats({0.0, 1.0});
  CHECK(half.mean == doctest::Approx(0.5));
  CHECK(*half.sem == doctest::Approx(0.5));

  MetricStats one = aggregate_stats({0.75});
  CHECK(one.mean == 0.75);
  CHECK(!one.sem.has_value());
  CHECK(one.n == 1);

  CHECK_THROWS_AS(aggregate_stats({}), CorpusError);
}

TEST_CASE("filter_by_issue_range is inclusive on both endpoints") {
  std::vector<Sample> samples = {
      make_sample("BOU-2025-01-05T12Z", "BOU", "2025-01-05T12:10:00Z", "a"),
      make_sample("BOU-2025-01-06T12Z", "BOU", "2025-01-06T12:10:00Z", "b"),
      make_sample("BOU-2025-01-07T12Z", "BOU", "2025-01-07T12:10:00Z", "c"),
      make_sample("BOU-2025-01-08T12Z", "BOU", "2025-01-08T12:10:00Z", "d"),
  };
  auto mid = filter_by_issue_range(samples, "2025-01-06", "2025-01-07");
  REQUIRE(mid.size() == 2);
  CHECK(mid[0].reference_text == "b");
  CHECK(mid[1].reference_text == "c");
}

TEST_CASE("climatology draws from the station and month stratum only") {
  std::vector<Sample> pool = {
      make_sample("BOU-2025-01-01T00Z", "BOU", "2025-01-01T00:10:00Z", "jan bou 1"),
      make_sample("BOU-2025-01-02T00Z", "BOU", "2025-01-02T00:10:00Z", "jan bou 2"),
      make_sample("BOU-2025-02-01T00Z", "BOU", "2025-02-01T00:10:00Z", "feb bou"),
      make_sample("PSR-2025-01-01T00Z", "PSR", "2025-01-01T00:10:00Z", "jan psr"),
  };
  Sample test =
      make_sample("BOU-2025-01-15T00Z", "BOU", "2025-01-15T00:10:00Z", "query");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::string draw = climatology_baseline(test, pool, seed);
    CHECK((draw == "jan bou 1" || draw == "jan bou 2"));
  }
  // Deterministic per (seed, sample).
  CHECK(climatology_baseline(test, pool, 7) == climatology_baseline(test, pool, 7));

  Sample march =
      make_sample("BOU-2025-03-01T00Z", "BOU", "2025-03-01T00:10:00Z", "query");
  CHECK_THROWS_AS(climatology_baseline(march, pool, 1), CorpusError);
}

TEST_CASE("climatology varies across both seed and sample id") {
  std::vector<Sample> pool;
  for (int i = 1; i <= 20; ++i) {
    char id[40], issue[40], text[16];
    std::snprintf(id, sizeof(id), "BOU-2025-01-%02dT00Z", i);
    std::snprintf(issue, sizeof(issue), "2025-01-%02dT00:10:00Z", i);
    std::snprintf(text, sizeof(text), "text-%02d", i);
    pool.push_back(make_sample(id, "BOU", issue, text));
  }
  Sample a = make_sample("BOU-2025-01-21T00Z", "BOU", "2025-01-21T00:10:00Z", "q");
  Sample b = make_sample("BOU-2025-01-22T00Z", "BOU", "2025-01-22T00:10:00Z", "q");
  std::set<std::string> across_seeds, across_samples;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    across_seeds.insert(climatology_baseline(a, pool, seed));
  }
  for (int i = 0; i < 30; ++i) {
    Sample s = a;
    s.sample_id += "-" + std::to_string(i);
    across_samples.insert(climatology_baseline(s, pool, 42));
  }
  CHECK(across_seeds.size() > 1);
  CHECK(across_samples.size() > 1);
  CHECK(climatology_baseline(a, pool, 5) == climatology_baseline(a, pool, 5));
  // Different samples generally draw differently under one seed.
  CHECK(across_samples.count(climatology_baseline(b, pool, 42)) <= 20);
}

TEST_CASE("evaluate_corpus on an identity corpus yields perfect means") {
  Corpus c = load_fixture_corpus();
  std::unordered_map<std::string, std::string> identity;
  for (const Sample& s : c.samples) identity[s.sample_id] = s.reference_text;
  EvaluateOptions opt;
  opt.mode = EvalMode::Both;
  EvalResult r = evaluate_corpus(c.samples, identity, pressure_config(),
                                 shipped_hierarchy(), station_nodes(), opt);
  CHECK(r.report.samples_total == 200);
  bool saw_local = false, saw_rouge = false;
  for (const auto& [name, stats] : r.report.rows) {
    if (name == "space_local_s") {
      saw_local = true;
      CHECK(stats.mean == doctest::Approx(1.0));
    }
    if (name == "space_aggregate_s") CHECK(stats.mean == doctest::Approx(1.0));
    if (name == "rouge_l") {
      saw_rouge = true;
      CHECK(stats.mean == doctest::Approx(1.0));
    }
    if (name == "token_f1") CHECK(stats.mean == doctest::Approx(1.0));
  }
  CHECK(saw_local);
  CHECK(saw_rouge);
}

TEST_CASE("evaluate_corpus with inverted phases yields zero space means") {
  Corpus c = load_fixture_corpus();
  std::unordered_map<std::string, std::string> inverted;
  for (const Sample& s : c.samples) {
    std::string text = s.reference_text;
    auto replace_all = [&text](const std::string& from, const std::string& to) {
      for (std::size_t pos = 0; (pos = text.find(from, pos)) != std::string::npos;
           pos += to.size()) {
        text.replace(pos, from.size(), to);
      }
    };
    // Swap phases while keeping every location mention intact.
    replace_all("High pressure", "ZZPHASEZZ");
    replace_all("Low pressure", "High pressure");
    replace_all("ZZPHASEZZ", "Low pressure");
    replace_all("ridge", "ZZPHASEZZ");
    replace_all("trough", "ridge");
    replace_all("ZZPHASEZZ", "trough");
    inverted[s.sample_id] = text;
  }
  EvaluateOptions opt;
  opt.mode = EvalMode::Local;
  EvalResult r = evaluate_corpus(c.samples, inverted, pressure_config(),
                                 shipped_hierarchy(), station_nodes(), opt);
  for (const auto& [name, stats] : r.report.rows) {
    if (name == "space_local_s_m" || name == "space_local_s") {
      CHECK(stats.mean == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("evaluate_corpus output is identical for any jobs count") {
  Corpus c = load_fixture_corpus();
  EvaluateOptions one;
  one.jobs = 1;
  EvaluateOptions eight;
  eight.jobs = 8;
  EvalResult a = evaluate_corpus(c.samples, c.predictions, pressure_config(),
                                 shipped_hierarchy(), station_nodes(), one);
  EvalResult b = evaluate_corpus(c.samples, c.predictions, pressure_config(),
                                 shipped_hierarchy(), station_nodes(), eight);
  CHECK(a.report.to_json() == b.report.to_json());
  REQUIRE(a.score_lines.size() == b.score_lines.size());
  for (std::size_t i = 0; i < a.score_lines.size(); ++i) {
    CHECK(a.score_lines[i] == b.score_lines[i]);
  }
}

TEST_CASE("evaluate_corpus validates its inputs") {
  Corpus c = load_fixture_corpus();
  EvaluateOptions opt;
  std::unordered_map<std::string, std::string> missing = c.predictions;
  missing.erase(c.samples.front().sample_id);
  CHECK_THROWS_AS(evaluate_corpus(c.samples, missing, pressure_config(),
                                  shipped_hierarchy(), station_nodes(), opt),
                  CorpusError);

  std::unordered_map<std::string, std::string> extra = c.predictions;
  extra["no-such-sample"] = "text";
  CHECK_THROWS_AS(evaluate_corpus(c.samples, extra, pressure_config(),
                                  shipped_hierarchy(), station_nodes(), opt),
                  CorpusError);
}

TEST_CASE("report json carries versions, counters, and metric rows") {
  Corpus c = load_fixture_corpus();
  EvaluateOptions opt;
  opt.model_name = "fixture-model";
  EvalResult r = evaluate_corpus(c.samples, c.predictions, pressure_config(),
                                 shipped_hierarchy(), station_nodes(), opt);
  std::string j = r.report.to_json();
  CHECK(j.find("\"tool_version\": \"0.1.0\"") != std::string::npos);
  CHECK(j.find("\"schema_version\": \"1\"") != std::string::npos);
  CHECK(j.find("fixture-model") != std::string::npos);
  CHECK(j.find("space_local_s") != std::string::npos);
  CHECK(j.find("corpus_hash") != std::string::npos);
  CHECK(r.report.samples_total == 200);
  CHECK(r.report.forecasts_total > 0);
  CHECK(!r.report.to_table().empty());

  // Score lines: one per sample in local mode plus one per forecast.
  long locals = 0, aggregates = 0;
  for (const std::string& line : r.score_lines) {
    if (line.find("\"mode\":\"local\"") != std::string::npos) ++locals;
    if (line.find("\"mode\":\"aggregate\"") != std::string::npos) ++aggregates;
  }
  CHECK(locals == 200);
  CHECK(aggregates == r.report.forecasts_total);
}
