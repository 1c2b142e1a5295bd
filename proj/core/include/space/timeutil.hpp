#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace space {

// Seconds since the Unix epoch, always UTC.
using UtcTime = std::int64_t;

struct CivilTime {
  int year = 1970;
  int month = 1;  // 1-12
  int day = 1;    // 1-31
  int hour = 0;
  int minute = 0;
  int second = 0;
};

UtcTime to_utc(const CivilTime& c);
CivilTime from_utc(UtcTime t);

// 0 = Monday ... 6 = Sunday.
int weekday(UtcTime t);

// "2025-01-07T22:30:00Z"; parse accepts the same shape (seconds optional).
std::string format_iso8601(UtcTime t);
std::optional<UtcTime> parse_iso8601(std::string_view s);

// US time-zone abbreviation -> offset from UTC in hours (EST -> -5).
// Covers standard and daylight variants plus GMT/UTC/Z.
std::optional<int> zone_offset_hours(std::string_view abbrev);

// Weekday name ("monday") -> 0-6; case-insensitive.
std::optional<int> weekday_from_name(std::string_view name);

}  // namespace space
