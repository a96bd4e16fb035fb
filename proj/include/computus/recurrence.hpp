#pragma once

#include <cstdint>

#include "computus/core.hpp"

// Epacts by year-over-year recurrence, the three correction predicates, and
// the cumulative correction sums. Kept independent of the closed form in
// core.hpp so each can check the other.

namespace computus {

inline constexpr std::int64_t kRecurrenceCeiling = 10'000'000;
inline constexpr int kReformEpact = 26;

struct CorrectionFlags {
  int metonic;
  int solar;
  int lunar;
  friend constexpr bool operator==(CorrectionFlags, CorrectionFlags) = default;
};

/// Change of the moon age across Dec 31 -> Jan 1 beyond the regular +1; -1..2.
struct Jump {
  int value;
  friend constexpr auto operator<=>(Jump, Jump) = default;
};

int metonic_correction(std::int64_t year);
int solar_correction(std::int64_t year);
int lunar_correction(std::int64_t year);
CorrectionFlags corrections(std::int64_t year);

/// Iterates from the 1582 anchor; cost is linear in year - 1582.
Epact epact_by_recurrence(std::int64_t year);

/// Number of solar corrections in 1583..year.
std::int64_t solar_sum(std::int64_t year);
/// Number of lunar corrections in 1583..year, via floor(8n/25).
std::int64_t lunar_sum(std::int64_t year);
/// Same count via the older Clavian-correction expression, anchored so that
/// centuries 16 and 17 contribute nothing.
std::int64_t lunar_sum_alt(std::int64_t year);

Jump jump(std::int64_t year);

/// Stepwise walker over the recurrence for sweeps that need every year.
class EpactRecurrence {
 public:
  EpactRecurrence() = default;

  std::int64_t year() const noexcept { return year_; }
  int value() const noexcept { return value_; }
  Epact epact() const;

  /// Moves to the next year and returns its epact value.
  int advance();

 private:
  std::int64_t year_ = kReformYear;
  int value_ = kReformEpact;
};

}  // namespace computus
