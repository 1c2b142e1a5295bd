#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "space/timeutil.hpp"

namespace space {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One predicted/reference discussion pair, keyed to a station and a
// forecast cycle.
struct Sample {
  std::string sample_id;
  std::string station;            // NWS office identifier
  UtcTime issue_time = 0;
  std::string forecast_id;        // "YYYY-MM-DDTHHZ", cycle in {00,06,12,18}
  std::string reference_text;
  std::optional<std::string> predicted_text;

  std::string to_json() const;
  static Sample from_json(std::string_view line);
};

// Station registry row: office id, city, state, home hierarchy node.
struct Station {
  std::string office;
  std::string city;
  std::string state;
  std::string node;  // small-scale hierarchy node id
};

// Parses `office|city|state|node` lines.
std::vector<Station> load_stations(std::string_view definition_text);

// Transport abstraction so every fetch can be recorded and replayed;
// tests never touch the live archive.
class Transport {
 public:
  virtual ~Transport() = default;
  // Returns the response body for a GET of path (path includes query).
  virtual std::string get(const std::string& path) = 0;
};

// Live HTTP transport with bounded exponential backoff on transient
// failures (connection errors, 5xx).
std::unique_ptr<Transport> make_http_transport(const std::string& base_url,
                                               int max_retries = 3);

// Replays verbatim response bodies from a fixture directory; file names
// are derived from the request path (sanitized + fnv1a suffix).
std::unique_ptr<Transport> make_fixture_transport(const std::string& dir);

// Wraps `inner`, writing each response body into `dir` under the replay
// file name before returning it.
std::unique_ptr<Transport> make_recording_transport(
    std::unique_ptr<Transport> inner, const std::string& dir);

// Fixture file name for a request path.
std::string fixture_file_name(const std::string& path);

struct DateRange {
  std::string start;  // "YYYY-MM-DD", inclusive
  std::string end;    // "YYYY-MM-DD", inclusive
};

// Fetches raw AFD product texts for a station over a date range,
// chronologically ordered, following the archive's pagination.
std::vector<std::string> fetch_afds(const std::string& station,
                                    const DateRange& range,
                                    Transport& transport);

// Extracts the product-header issuance line ("330 PM MST Tue Jan 7 2025")
// and converts it to UTC. Throws IngestError when no header is found.
UtcTime parse_issue_time(std::string_view raw_text);

// Nearest 6-hourly GFS cycle; ties toward the earlier cycle; nullopt if
// the difference exceeds 12 hours (unreachable on the 6-hourly grid,
// kept as the quality-control guard).
std::optional<std::string> pair_to_cycle(UtcTime issue_time);

}  // namespace space
