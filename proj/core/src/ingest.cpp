#include "space/ingest.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <regex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "space/text.hpp"

namespace space {

using nlohmann::json;

std::string Sample::to_json() const {
  json j;
  j["sample_id"] = sample_id;
  j["station"] = station;
  j["issue_time"] = format_iso8601(issue_time);
  j["forecast_id"] = forecast_id;
  j["reference_text"] = reference_text;
  if (predicted_text) j["predicted_text"] = *predicted_text;
  return j.dump();
}

Sample Sample::from_json(std::string_view line) {
  json j = json::parse(line);
  Sample s;
  s.sample_id = j.value("sample_id", "");
  s.station = j.value("station", "");
  std::string issue = j.value("issue_time", "");
  if (!issue.empty()) {
    auto t = parse_iso8601(issue);
    if (!t) throw IngestError("bad issue_time '" + issue + "'");
    s.issue_time = *t;
  }
  s.forecast_id = j.value("forecast_id", "");
  s.reference_text = j.value("reference_text", "");
  if (j.contains("predicted_text")) {
    s.predicted_text = j["predicted_text"].get<std::string>();
  }
  return s;
}

std::vector<Station> load_stations(std::string_view definition_text) {
  std::vector<Station> out;
  std::string text(definition_text);
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string t = normalize_ws(line);
    if (t.empty() || t[0] == '#') continue;
    Station st;
    std::size_t a = t.find('|');
    std::size_t b = t.find('|', a + 1);
    std::size_t c = t.find('|', b + 1);
    if (a == std::string::npos || b == std::string::npos || c == std::string::npos) {
      throw IngestError("stations line " + std::to_string(lineno) +
                        ": expected 'office|city|state|node'");
    }
    st.office = t.substr(0, a);
    st.city = t.substr(a + 1, b - a - 1);
    st.state = t.substr(b + 1, c - b - 1);
    st.node = t.substr(c + 1);
    out.push_back(std::move(st));
  }
  return out;
}

std::string fixture_file_name(const std::string& path) {
  std::string sanitized;
  for (char ch : path) {
    sanitized.push_back(is_word_char(ch) ? ch : '_');
  }
  if (sanitized.size() > 80) sanitized.resize(80);
  char hash[20];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a(path)));
  return sanitized + "." + hash + ".body";
}

namespace {

class FixtureTransport : public Transport {
 public:
  explicit FixtureTransport(std::string dir) : dir_(std::move(dir)) {}

  std::string get(const std::string& path) override {
    std::filesystem::path file =
        std::filesystem::path(dir_) / fixture_file_name(path);
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      throw IngestError("no fixture for request '" + path + "' (expected " +
                        file.string() + ")");
    }
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return body;
  }

 private:
  std::string dir_;
};

class RecordingTransport : public Transport {
 public:
  RecordingTransport(std::unique_ptr<Transport> inner, std::string dir)
      : inner_(std::move(inner)), dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  std::string get(const std::string& path) override {
    std::string body = inner_->get(path);
    std::filesystem::path file =
        std::filesystem::path(dir_) / fixture_file_name(path);
    std::ofstream out(file, std::ios::binary);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    return body;
  }

 private:
  std::unique_ptr<Transport> inner_;
  std::string dir_;
};

class HttpTransport : public Transport {
 public:
  HttpTransport(std::string base_url, int max_retries)
      : base_url_(std::move(base_url)), max_retries_(max_retries) {}

  std::string get(const std::string& path) override;

 private:
  std::string base_url_;
  int max_retries_;
};

}  // namespace

std::unique_ptr<Transport> make_fixture_transport(const std::string& dir) {
  return std::make_unique<FixtureTransport>(dir);
}

std::unique_ptr<Transport> make_recording_transport(
    std::unique_ptr<Transport> inner, const std::string& dir) {
  return std::make_unique<RecordingTransport>(std::move(inner), dir);
}

std::unique_ptr<Transport> make_http_transport(const std::string& base_url,
                                               int max_retries) {
  return std::make_unique<HttpTransport>(base_url, max_retries);
}

std::vector<std::string> fetch_afds(const std::string& station,
                                    const DateRange& range,
                                    Transport& transport) {
  std::vector<std::string> texts;
  int page = 1;
  while (true) {
    std::string path = "/list.json?pil=AFD" + station + "&sdate=" + range.start +
                       "&edate=" + range.end + "&page=" + std::to_string(page);
    std::string body = transport.get(path);
    json listing;
    try {
      listing = json::parse(body);
    } catch (const json::exception& e) {
      std::string excerpt = body.substr(0, 120);
      throw IngestError("malformed listing response for '" + path +
                        "': " + e.what() + "; payload: " + excerpt);
    }
    if (!listing.contains("products") || !listing["products"].is_array()) {
      throw IngestError("listing response for '" + path +
                        "' has no products array; payload: " +
                        body.substr(0, 120));
    }
    for (const json& product : listing["products"]) {
      if (!product.contains("id")) {
        throw IngestError("listing entry without id for '" + path + "'");
      }
      std::string id = product["id"].get<std::string>();
      texts.push_back(transport.get("/product/" + id + ".txt"));
    }
    if (listing.contains("next_page") && listing["next_page"].is_number()) {
      page = listing["next_page"].get<int>();
    } else {
      break;
    }
  }
  return texts;
}

std::string HttpTransport::get(const std::string& path) {
  httplib::Client client(base_url_);
  client.set_follow_location(true);
  std::string last_error;
  for (int attempt = 0; attempt <= max_retries_; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(250L << (attempt - 1)));
    }
    httplib::Result res = client.Get(path);
    if (!res) {
      last_error = "connection error: " + httplib::to_string(res.error());
      continue;  // transient
    }
    if (res->status >= 500) {
      last_error = "server status " + std::to_string(res->status);
      continue;  // transient
    }
    if (res->status != 200) {
      throw IngestError("GET " + path + " failed with status " +
                        std::to_string(res->status));
    }
    return res->body;
  }
  throw IngestError("GET " + path + " failed after " +
                    std::to_string(max_retries_ + 1) + " attempts: " +
                    last_error);
}

UtcTime parse_issue_time(std::string_view raw_text) {
  // "330 PM MST Tue Jan 7 2025" header family.
  static const std::regex header(
      R"((\d{3,4})\s+(AM|PM)\s+([A-Za-z]{1,4})\s+[A-Za-z]{3}\s+([A-Za-z]{3})\s+(\d{1,2})\s+(\d{4}))",
      std::regex::icase);
  std::cmatch m;
  const char* begin = raw_text.data();
  const char* end = begin + raw_text.size();
  if (!std::regex_search(begin, end, m, header)) {
    throw IngestError("no issuance timestamp header found");
  }

  std::string clock = m[1].str();
  int minute = std::stoi(clock.substr(clock.size() - 2));
  int hour = std::stoi(clock.substr(0, clock.size() - 2));
  std::string ampm = fold(m[2].str());
  if (hour == 12) hour = 0;
  if (ampm == "pm") hour += 12;

  std::optional<int> offset = zone_offset_hours(m[3].str());
  if (!offset) {
    throw IngestError("unknown time zone abbreviation '" + m[3].str() + "'");
  }

  static const std::unordered_map<std::string, int> months = {
      {"jan", 1}, {"feb", 2}, {"mar", 3}, {"apr", 4},  {"may", 5},  {"jun", 6},
      {"jul", 7}, {"aug", 8}, {"sep", 9}, {"oct", 10}, {"nov", 11}, {"dec", 12}};
  auto month_it = months.find(fold(m[4].str()));
  if (month_it == months.end()) {
    throw IngestError("unknown month abbreviation '" + m[4].str() + "'");
  }

  CivilTime local;
  local.year = std::stoi(m[6].str());
  local.month = month_it->second;
  local.day = std::stoi(m[5].str());
  local.hour = hour;
  local.minute = minute;
  return to_utc(local) - static_cast<UtcTime>(*offset) * 3600;
}

std::optional<std::string> pair_to_cycle(UtcTime issue_time) {
  UtcTime best = 0;
  UtcTime best_diff = -1;
  UtcTime day = (issue_time / 86400) * 86400;
  if (issue_time < 0 && issue_time % 86400 != 0) day -= 86400;
  for (UtcTime base = day - 86400; base <= day + 86400; base += 86400) {
    for (int hour : {0, 6, 12, 18}) {
      UtcTime cycle = base + hour * 3600;
      UtcTime diff = std::abs(cycle - issue_time);
      // Ties go to the earlier cycle; candidates iterate ascending.
      if (best_diff < 0 || diff < best_diff) {
        best_diff = diff;
        best = cycle;
      }
    }
  }
  if (best_diff > 12 * 3600) return std::nullopt;
  CivilTime c = from_utc(best);
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02dZ", c.year, c.month,
                c.day, c.hour);
  return std::string(buf);
}

}  // namespace space
