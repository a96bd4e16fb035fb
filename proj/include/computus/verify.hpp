#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "computus/core.hpp"

// Year-range sweep over the library's identities and invariants.

namespace computus {

struct PropertyResult {
  std::string name;
  std::int64_t checked = 0;
  bool passed = true;
  std::optional<std::int64_t> counterexample;
  std::string detail;
};

struct VerifyReport {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
  const PropertyResult* find(const std::string& name) const;
};

/// The closed forms under test. Replacing one lets a sweep be pointed at a
/// deliberately broken implementation.
struct VerifyRoutes {
  std::function<Epact(std::int64_t)> epact;
  std::function<std::int64_t(std::int64_t)> solar_sum;
  std::function<std::int64_t(std::int64_t)> lunar_sum;
  std::function<std::int64_t(std::int64_t)> lunar_sum_alt;

  static VerifyRoutes library();
};

namespace property {
inline constexpr const char* kRecurrence = "closed-form epact = recurrence";
inline constexpr const char* kSolarSum = "solar sum = count of solar corrections";
inline constexpr const char* kLunarSum = "lunar sum = count of lunar corrections";
inline constexpr const char* kLunarSumAlt = "lunar sum = alternate lunar sum";
inline constexpr const char* kJump = "jump = metonic - solar + lunar";
inline constexpr const char* kRawSuccession = "raw ages step by +1 or reset from 29/30";
inline constexpr const char* kNewMoonCount = "12 or 13 new moons per year";
inline constexpr const char* kContinuity = "corrected Jan 1 continues Dec 31";
inline constexpr const char* kCorrectedSuccession = "corrected Dec-Jan steps are regular";
inline constexpr const char* kEasterWindow = "Easter within Mar 22 - Apr 25";
inline constexpr const char* kEasterUnaffected = "paschal full moon same raw and corrected";
}  // namespace property

/// Requires kMinYear <= from <= to <= kRecurrenceCeiling. Checks that need the
/// closed-form moon age stop at kMaxYear. `threads` = 0 picks the hardware
/// concurrency; results do not depend on it.
VerifyReport run_verification(std::int64_t from, std::int64_t to, const VerifyRoutes& routes = VerifyRoutes::library(),
                              unsigned threads = 0);

std::string format_report(const VerifyReport& report);

}  // namespace computus
