#include "space/timeutil.hpp"

#include <cctype>
#include <cstdio>
#include <unordered_map>

namespace space {

namespace {

// Howard Hinnant's days_from_civil.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<int>(yoe) + static_cast<int>(era) * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y += m <= 2;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

UtcTime to_utc(const CivilTime& c) {
  return days_from_civil(c.year, c.month, c.day) * 86400 + c.hour * 3600 +
         c.minute * 60 + c.second;
}

CivilTime from_utc(UtcTime t) {
  std::int64_t days = t / 86400;
  std::int64_t rem = t % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  CivilTime c;
  civil_from_days(days, c.year, c.month, c.day);
  c.hour = static_cast<int>(rem / 3600);
  c.minute = static_cast<int>((rem % 3600) / 60);
  c.second = static_cast<int>(rem % 60);
  return c;
}

int weekday(UtcTime t) {
  std::int64_t days = t / 86400;
  if (t % 86400 < 0) --days;
  // 1970-01-01 was a Thursday (3 with Monday = 0).
  return static_cast<int>(((days + 3) % 7 + 7) % 7);
}

std::string format_iso8601(UtcTime t) {
  CivilTime c = from_utc(t);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", c.year,
                c.month, c.day, c.hour, c.minute, c.second);
  return buf;
}

std::optional<UtcTime> parse_iso8601(std::string_view s) {
  CivilTime c;
  int n = 0;
  std::string str(s);
  int matched = std::sscanf(str.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%n", &c.year,
                            &c.month, &c.day, &c.hour, &c.minute, &c.second, &n);
  if (matched < 5) return std::nullopt;
  if (matched == 5) c.second = 0;
  if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31) return std::nullopt;
  if (c.hour > 23 || c.minute > 59 || c.second > 60) return std::nullopt;
  return to_utc(c);
}

std::optional<int> zone_offset_hours(std::string_view abbrev) {
  static const std::unordered_map<std::string, int> zones = {
      {"ast", -4},  {"adt", -3},  {"est", -5},  {"edt", -4},   {"cst", -6},
      {"cdt", -5},  {"mst", -7},  {"mdt", -6},  {"pst", -8},   {"pdt", -7},
      {"akst", -9}, {"akdt", -8}, {"hst", -10}, {"hdt", -9},   {"sst", -11},
      {"chst", 10}, {"gmt", 0},   {"utc", 0},   {"z", 0},
  };
  auto it = zones.find(lower(abbrev));
  if (it == zones.end()) return std::nullopt;
  return it->second;
}

std::optional<int> weekday_from_name(std::string_view name) {
  static const std::unordered_map<std::string, int> days = {
      {"monday", 0},   {"tuesday", 1}, {"wednesday", 2}, {"thursday", 3},
      {"friday", 4},   {"saturday", 5}, {"sunday", 6},
  };
  auto it = days.find(lower(name));
  if (it == days.end()) return std::nullopt;
  return it->second;
}

}  // namespace space
