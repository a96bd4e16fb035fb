#include "computus/core.hpp"

#include <array>

namespace computus {

namespace {

constexpr std::array<int, 12> kMonthLengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

std::string range_message(std::int64_t year, std::int64_t lo, std::int64_t hi) {
  return "year " + std::to_string(year) + " outside supported range [" + std::to_string(lo) + ", " +
         std::to_string(hi) + "]";
}

void require_month_day(CalendarDate date) {
  if (date.month < 1 || date.month > 12)
    throw InvalidDate("month " + std::to_string(date.month) + " is not in 1..12");
  const int limit = date.month == 2 ? 29 : kMonthLengths[date.month - 1];
  if (date.day < 1 || date.day > limit)
    throw InvalidDate("day " + std::to_string(date.day) + " is not valid for month " + std::to_string(date.month));
}

}  // namespace

YearOutOfRange::YearOutOfRange(std::int64_t year, std::int64_t lo, std::int64_t hi)
    : std::out_of_range(range_message(year, lo, hi)), year_(year) {}

bool is_leap_year(std::int64_t year) {
  return floor_mod(year, 4) == 0 && (floor_mod(year, 100) != 0 || floor_mod(year, 400) == 0);
}

int days_in_month(std::int64_t year, int month) {
  if (month < 1 || month > 12) throw InvalidDate("month " + std::to_string(month) + " is not in 1..12");
  if (month == 2 && is_leap_year(year)) return 29;
  return kMonthLengths[month - 1];
}

void require_year(std::int64_t year, std::int64_t lo, std::int64_t hi) {
  if (year < lo || year > hi) throw YearOutOfRange(year, lo, hi);
}

void require_date(std::int64_t year, CalendarDate date) {
  require_month_day(date);
  if (date.day > days_in_month(year, date.month))
    throw InvalidDate("February 29 does not exist in " + std::to_string(year));
}

GoldenNumber golden_number(std::int64_t year) {
  require_year(year);
  return GoldenNumber{detail::golden(year)};
}

CenturyNumber century_number(std::int64_t year) {
  require_year(year);
  return CenturyNumber{detail::century(year)};
}

Epact make_epact(int value, GoldenNumber golden) {
  if (value < 0 || value > 29) throw std::invalid_argument("epact " + std::to_string(value) + " is not in 0..29");
  return Epact{value, value == 25 && golden.value >= 12};
}

Epact epact(std::int64_t year) {
  require_year(year);
  return make_epact(detail::epact_value(year), GoldenNumber{detail::golden(year)});
}

DayOfYear day_number(CalendarDate date) {
  require_month_day(date);
  return DayOfYear{detail::day_number(date.month, date.day)};
}

CalendarDate date_from_day_number(DayOfYear n) {
  if (n.value < 0 || n.value > 364) throw std::invalid_argument("day number " + std::to_string(n.value) + " is not in 0..364");
  int remaining = n.value;
  int month = 1;
  while (remaining >= kMonthLengths[month - 1]) {
    remaining -= kMonthLengths[month - 1];
    ++month;
  }
  return CalendarDate{month, remaining + 1};
}

MoonAge lunation_value(std::int64_t x) {
  if (x < 0) throw std::invalid_argument("lunation index must be non-negative");
  return MoonAge{detail::lunation(x)};
}

LunationBranch lunation_branch(Epact e, GoldenNumber g) {
  return detail::short_first(e.value, g.value) ? LunationBranch::ShortFirst : LunationBranch::LongFirst;
}

MoonAge moon_age(std::int64_t year, CalendarDate date) {
  require_year(year);
  require_date(year, date);
  return MoonAge{detail::age(detail::epact_value(year), detail::golden(year),
                             detail::day_number(date.month, date.day))};
}

}  // namespace computus
