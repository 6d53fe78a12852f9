#pragma once

#include <stdexcept>
#include <string>

// ISO-8601 week calendar arithmetic. Weeks run Monday-Sunday; week 1 of a
// year is the week containing the first Thursday of January.
namespace wmort::cal {

struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;
};

// days since 1970-01-01 (Howard Hinnant's civil-days algorithm)
inline long days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2u) / 5u + d - 1u;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

inline long days_from_civil(const Date& d) { return days_from_civil(d.year, d.month, d.day); }

inline Date civil_from_days(long z) {
  z += 719468;
  const long era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const long y = static_cast<long>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return {static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

// 0 = Monday .. 6 = Sunday
inline int weekday(long days) {
  long w = (days + 3) % 7;  // 1970-01-01 was a Thursday
  return static_cast<int>(w < 0 ? w + 7 : w);
}

// serial day of the Monday starting ISO week 1 of `year`
inline long iso_week1_monday(int year) {
  const long jan4 = days_from_civil(year, 1, 4);  // Jan 4 is always in week 1
  return jan4 - weekday(jan4);
}

// 52 or 53
inline int iso_weeks_in_year(int year) {
  return static_cast<int>((iso_week1_monday(year + 1) - iso_week1_monday(year)) / 7);
}

// serial day of the Monday starting ISO week w (1-based) of `year`
inline long iso_week_start(int year, int week) {
  if (week < 1 || week > iso_weeks_in_year(year))
    throw std::invalid_argument("iso_week_start: week " + std::to_string(week) +
                                " out of range for year " + std::to_string(year));
  return iso_week1_monday(year) + 7L * (week - 1);
}

// (iso_year, iso_week) of a serial day
inline void iso_year_week(long days, int& iso_year, int& iso_week) {
  Date d = civil_from_days(days);
  int y = d.year;
  if (days < iso_week1_monday(y)) --y;
  else if (days >= iso_week1_monday(y + 1)) ++y;
  iso_year = y;
  iso_week = static_cast<int>((days - iso_week1_monday(y)) / 7) + 1;
}

inline Date parse_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw std::invalid_argument("expected YYYY-MM-DD date, got '" + s + "'");
  return {std::stoi(s.substr(0, 4)), std::stoi(s.substr(5, 2)), std::stoi(s.substr(8, 2))};
}

}  // namespace wmort::cal
