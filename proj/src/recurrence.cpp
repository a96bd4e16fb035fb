#include "computus/recurrence.hpp"

namespace computus {

namespace {

int metonic_unchecked(std::int64_t y) { return floor_mod(y, 19) == 0 ? 1 : 0; }

int solar_unchecked(std::int64_t y) { return (floor_mod(y, 100) == 0 && floor_mod(y, 400) != 0) ? 1 : 0; }

// 1800 + 300k + 2500m with k in 0..7.
int lunar_unchecked(std::int64_t y) {
  const std::int64_t r = floor_mod(y - 1800, 2500);
  return (r % 300 == 0 && r / 300 <= 7) ? 1 : 0;
}

void require_recurrence_year(std::int64_t year) { require_year(year, kMinYear, kRecurrenceCeiling); }

}  // namespace

int metonic_correction(std::int64_t year) {
  require_recurrence_year(year);
  return metonic_unchecked(year);
}

int solar_correction(std::int64_t year) {
  require_recurrence_year(year);
  return solar_unchecked(year);
}

int lunar_correction(std::int64_t year) {
  require_recurrence_year(year);
  return lunar_unchecked(year);
}

CorrectionFlags corrections(std::int64_t year) {
  require_recurrence_year(year);
  return CorrectionFlags{metonic_unchecked(year), solar_unchecked(year), lunar_unchecked(year)};
}

Epact EpactRecurrence::epact() const {
  return Epact{value_, value_ == 25 && floor_mod(year_, 19) + 1 >= 12};
}

int EpactRecurrence::advance() {
  ++year_;
  value_ = static_cast<int>(
      floor_mod(value_ + 11 + metonic_unchecked(year_) - solar_unchecked(year_) + lunar_unchecked(year_), 30));
  return value_;
}

Epact epact_by_recurrence(std::int64_t year) {
  require_year(year, kReformYear, kRecurrenceCeiling);
  EpactRecurrence walk;
  while (walk.year() < year) walk.advance();
  return walk.epact();
}

std::int64_t solar_sum(std::int64_t year) {
  require_recurrence_year(year);
  return floor_div(3 * detail::century(year), 4) - 12;
}

std::int64_t lunar_sum(std::int64_t year) {
  require_recurrence_year(year);
  return floor_div(8 * detail::century(year) + 5, 25) - 5;
}

std::int64_t lunar_sum_alt(std::int64_t year) {
  require_recurrence_year(year);
  const std::int64_t c = detail::century(year);
  const std::int64_t centuries = floor_div(year, 100);
  // 5 is the expression's value for c = 16, where no correction has occurred.
  return floor_div(centuries - floor_div(c - 18, 25), 3) - 5;
}

Jump jump(std::int64_t year) {
  require_year(year);
  const int current = detail::epact_value(year);
  const int previous = detail::epact_value(year - 1);
  return Jump{static_cast<int>(floor_mod(current - previous, 30)) - 11};
}

}  // namespace computus
