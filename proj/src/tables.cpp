#include "computus/tables.hpp"

#include <stdexcept>

#include "computus/recurrence.hpp"

namespace computus {

namespace {

// First January lunation: from Jan 1 to the day the raw age reaches 30.
bool in_first_january_lunation(int epact_value, CalendarDate date) {
  return date.month == 1 && date.day + epact_value <= 30;
}

LunarTableEntry make_entry(CalendarDate date, MoonAge age) {
  return LunarTableEntry{date, age, age.value == kNewMoonAge, age.value == kFullMoonAge};
}

CalendarDate next_day(std::int64_t year, CalendarDate date) {
  if (date.day < days_in_month(year, date.month)) return CalendarDate{date.month, date.day + 1};
  return CalendarDate{date.month + 1, 1};
}

}  // namespace

std::string_view to_string(MoonAgeMode mode) {
  switch (mode) {
    case MoonAgeMode::Raw: return "raw";
    case MoonAgeMode::Pronounced: return "pronounced";
    case MoonAgeMode::Corrected: return "corrected";
  }
  return "raw";
}

std::optional<MoonAgeMode> parse_mode(std::string_view text) {
  if (text == "raw") return MoonAgeMode::Raw;
  if (text == "pronounced") return MoonAgeMode::Pronounced;
  if (text == "corrected") return MoonAgeMode::Corrected;
  return std::nullopt;
}

MoonAge pronounced_age(std::int64_t year, CalendarDate date) {
  const MoonAge raw = moon_age(year, date);
  const int e = detail::epact_value(year);
  if (detail::golden(year) == 1 && e > 0 && in_first_january_lunation(e, date)) return MoonAge{raw.value - 1};
  return raw;
}

MoonAge corrected_age(std::int64_t year, CalendarDate date) {
  const MoonAge raw = moon_age(year, date);
  const int e = detail::epact_value(year);
  if (!in_first_january_lunation(e, date)) return raw;
  int shifted = raw.value - jump(year).value;
  if (shifted <= 0) shifted += 30;
  return MoonAge{shifted};
}

MoonAge age_in_mode(std::int64_t year, CalendarDate date, MoonAgeMode mode) {
  switch (mode) {
    case MoonAgeMode::Raw: return moon_age(year, date);
    case MoonAgeMode::Pronounced: return pronounced_age(year, date);
    case MoonAgeMode::Corrected: return corrected_age(year, date);
  }
  throw std::invalid_argument("unknown moon age mode");
}

YearLunarTable::YearLunarTable(std::int64_t year, MoonAgeMode mode) : year_(year), mode_(mode) {
  require_year(year);
  for (int n = 0; n < static_cast<int>(kDays); ++n) {
    const CalendarDate date = date_from_day_number(DayOfYear{n});
    entries_[n] = make_entry(date, age_in_mode(year, date, mode));
  }
}

int YearLunarTable::new_moon_count() const noexcept {
  int count = 0;
  for (const auto& e : entries_) count += e.is_new_moon ? 1 : 0;
  return count;
}

YearLunarTable year_table(std::int64_t year, MoonAgeMode mode) { return YearLunarTable(year, mode); }

TransitionTable transition_table(std::int64_t year, MoonAgeMode mode) {
  require_year(year, kMinYear + 1, kMaxYear);
  TransitionTable table{year, mode, {}, {}};
  for (int d = 1; d <= 31; ++d) {
    const CalendarDate dec{12, d};
    const CalendarDate jan{1, d};
    table.december[d - 1] = make_entry(dec, moon_age(year - 1, dec));
    table.january[d - 1] = make_entry(jan, age_in_mode(year, jan, mode));
  }
  return table;
}

std::vector<CalendarDate> new_moon_dates(std::int64_t year, MoonAgeMode mode) {
  const YearLunarTable table(year, mode);
  std::vector<CalendarDate> dates;
  for (const auto& e : table.entries())
    if (e.is_new_moon) dates.push_back(e.date);
  return dates;
}

std::string_view to_string(Weekday day) {
  static constexpr std::string_view kNames[] = {"Sunday",   "Monday", "Tuesday", "Wednesday",
                                                "Thursday", "Friday", "Saturday"};
  return kNames[static_cast<int>(day)];
}

Weekday day_of_week(std::int64_t year, CalendarDate date) {
  require_year(year);
  require_date(year, date);
  // Zeller's congruence with January and February counted in the previous year.
  std::int64_t y = year;
  int m = date.month;
  if (m < 3) {
    m += 12;
    --y;
  }
  const std::int64_t k = floor_mod(y, 100);
  const std::int64_t j = floor_div(y, 100);
  const std::int64_t h = floor_mod(date.day + (13 * (m + 1)) / 5 + k + k / 4 + floor_div(j, 4) + 5 * j, 7);
  // h: 0 = Saturday, 1 = Sunday, ...
  return static_cast<Weekday>(floor_mod(h + 6, 7));
}

CalendarDate paschal_full_moon(std::int64_t year, MoonAgeMode mode) {
  require_year(year);
  CalendarDate date{3, 21};
  // A lunation is at most 31 days, so the 14th day is reached well within May.
  while (date.month < 6) {
    if (age_in_mode(year, date, mode).value == kFullMoonAge) return date;
    date = next_day(year, date);
  }
  throw std::logic_error("no ecclesiastical full moon found after March 21");
}

CalendarDate easter_date(std::int64_t year, MoonAgeMode /*mode*/) {
  CalendarDate date = next_day(year, paschal_full_moon(year, MoonAgeMode::Raw));
  while (day_of_week(year, date) != Weekday::Sunday) date = next_day(year, date);
  return date;
}

}  // namespace computus
