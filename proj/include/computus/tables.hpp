#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "computus/core.hpp"

// Year-level products built on the raw moon age: the Martyrology's pronounced
// age, the fully corrected age, per-year and Dec/Jan transition tables,
// new-moon lists and the date of Easter.

namespace computus {

enum class MoonAgeMode { Raw, Pronounced, Corrected };

std::string_view to_string(MoonAgeMode mode);
std::optional<MoonAgeMode> parse_mode(std::string_view text);

/// Raw age decreased by one through the first January lunation in years with
/// golden number 1 and a non-zero epact.
MoonAge pronounced_age(std::int64_t year, CalendarDate date);

/// Raw age minus the year's jump through the first January lunation,
/// wrapped into 1..30; may reach 31 when the jump is -1.
MoonAge corrected_age(std::int64_t year, CalendarDate date);

MoonAge age_in_mode(std::int64_t year, CalendarDate date, MoonAgeMode mode);

inline constexpr int kNewMoonAge = 1;
inline constexpr int kFullMoonAge = 14;

struct LunarTableEntry {
  CalendarDate date;
  MoonAge age;
  bool is_new_moon;
  bool is_full_moon;
  friend bool operator==(const LunarTableEntry&, const LunarTableEntry&) = default;
};

/// One entry per leap-blind day number 0..364 (Feb 29 is never listed).
class YearLunarTable {
 public:
  static constexpr std::size_t kDays = 365;

  YearLunarTable(std::int64_t year, MoonAgeMode mode);

  std::int64_t year() const noexcept { return year_; }
  MoonAgeMode mode() const noexcept { return mode_; }
  std::span<const LunarTableEntry> entries() const noexcept { return entries_; }
  const LunarTableEntry& operator[](std::size_t n) const { return entries_.at(n); }
  int new_moon_count() const noexcept;

 private:
  std::int64_t year_;
  MoonAgeMode mode_;
  std::array<LunarTableEntry, kDays> entries_{};
};

YearLunarTable year_table(std::int64_t year, MoonAgeMode mode);

/// December of year - 1 (always raw) beside January of `year` in `mode`.
struct TransitionTable {
  std::int64_t year;
  MoonAgeMode mode;
  std::array<LunarTableEntry, 31> december;
  std::array<LunarTableEntry, 31> january;
};

TransitionTable transition_table(std::int64_t year, MoonAgeMode mode);

std::vector<CalendarDate> new_moon_dates(std::int64_t year, MoonAgeMode mode);

enum class Weekday { Sunday, Monday, Tuesday, Wednesday, Thursday, Friday, Saturday };

std::string_view to_string(Weekday day);
Weekday day_of_week(std::int64_t year, CalendarDate date);

/// First day on or after March 21 whose age in `mode` is 14.
CalendarDate paschal_full_moon(std::int64_t year, MoonAgeMode mode = MoonAgeMode::Raw);

/// First Sunday strictly after the paschal full moon. Always searched on raw
/// ages; the corrections never reach past January, so `mode` does not change
/// the result.
CalendarDate easter_date(std::int64_t year, MoonAgeMode mode = MoonAgeMode::Raw);

}  // namespace computus
