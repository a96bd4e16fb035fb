#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

// Closed-form arithmetic of the Gregorian ecclesiastical moon: golden number,
// century number, epact, leap-blind day number and the raw moon age.

namespace computus {

inline constexpr std::int64_t kReformYear = 1582;
inline constexpr std::int64_t kMinYear = 1583;
inline constexpr std::int64_t kMaxYear = 4'000'000;

class YearOutOfRange : public std::out_of_range {
 public:
  YearOutOfRange(std::int64_t year, std::int64_t lo, std::int64_t hi);
  std::int64_t year() const noexcept { return year_; }

 private:
  std::int64_t year_;
};

class InvalidDate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Euclidean division helpers. The remainder is always in [0, |b|).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

struct GoldenNumber {
  int value;
  friend constexpr auto operator<=>(GoldenNumber, GoldenNumber) = default;
};

struct CenturyNumber {
  std::int64_t value;
  friend constexpr auto operator<=>(CenturyNumber, CenturyNumber) = default;
};

/// Epact of a year: the age of the moon on January 1 minus one, in 0..29.
/// `special25` marks the Arabic "25" used when the golden number is >= 12.
struct Epact {
  int value;
  bool special25;
  friend constexpr bool operator==(Epact, Epact) = default;
};

struct CalendarDate {
  int month;
  int day;
  friend constexpr auto operator<=>(CalendarDate, CalendarDate) = default;
};

struct DayOfYear {
  int value;
  friend constexpr auto operator<=>(DayOfYear, DayOfYear) = default;
};

struct MoonAge {
  int value;
  friend constexpr auto operator<=>(MoonAge, MoonAge) = default;
};

/// ShortFirst follows the lunation sequence 29, 30, 29, ... after the first
/// new moon of the year; LongFirst follows 30, 29, 30, ...
enum class LunationBranch { ShortFirst, LongFirst };

bool is_leap_year(std::int64_t year);
int days_in_month(std::int64_t year, int month);

/// Throws YearOutOfRange unless lo <= year <= hi.
void require_year(std::int64_t year, std::int64_t lo = kMinYear, std::int64_t hi = kMaxYear);
/// Throws InvalidDate if the date does not exist in `year`.
void require_date(std::int64_t year, CalendarDate date);

GoldenNumber golden_number(std::int64_t year);
CenturyNumber century_number(std::int64_t year);
Epact epact(std::int64_t year);
Epact make_epact(int value, GoldenNumber golden);

/// Leap-blind ordinal of (month, day): Jan 1 is 0, Dec 31 is 364, and
/// Feb 29 shares Feb 28's number. Accepts Feb 29 without a year.
DayOfYear day_number(CalendarDate date);

/// Inverse of day_number over 0..364 (never yields Feb 29).
CalendarDate date_from_day_number(DayOfYear n);

/// Periodic lunation sequence with period 59: 1..30 followed by 1..29.
MoonAge lunation_value(std::int64_t x);

LunationBranch lunation_branch(Epact e, GoldenNumber g);

/// Raw age of the ecclesiastical moon, 1..30.
MoonAge moon_age(std::int64_t year, CalendarDate date);

namespace detail {

constexpr int golden(std::int64_t y) { return static_cast<int>(floor_mod(y, 19)) + 1; }
constexpr std::int64_t century(std::int64_t y) { return floor_div(y, 100) + 1; }

constexpr int epact_value(std::int64_t y) {
  const std::int64_t c = century(y);
  return static_cast<int>(floor_mod(11 * golden(y) - floor_div(3 * c, 4) + floor_div(8 * c + 5, 25) + 27, 30));
}

constexpr int day_number(int month, int day) {
  if (month == 2 && day == 29) day = 28;
  return day - 1 + 30 * (month - 1) + (7 * month - 2) / 12 - 2 * ((month + 9) / 12);
}

constexpr int lunation(std::int64_t x) { return static_cast<int>(floor_mod(x + floor_div(x, 59), 30)) + 1; }

constexpr bool short_first(int e, int g) { return e < 25 || (e == 25 && g >= 12); }

constexpr int age(int e, int g, int n) {
  if (short_first(e, g)) return lunation(e + n);
  return lunation(e + n + 29) + (n + e < 30 ? 1 : 0);
}

}  // namespace detail

}  // namespace computus
