#include "computus/verify.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "computus/format.hpp"
#include "computus/recurrence.hpp"
#include "computus/tables.hpp"

namespace computus {

namespace {

void fail(PropertyResult& result, std::int64_t year, std::string detail) {
  if (!result.passed) return;
  result.passed = false;
  result.counterexample = year;
  result.detail = std::move(detail);
}

std::string step_text(int from, int to) { return std::to_string(from) + " -> " + std::to_string(to); }

// Properties that are checked year by year, independently of other years.
enum PerYear { kRawSucc, kCount, kCont, kCorrSucc, kEaster, kEasterSame, kPerYearCount };

constexpr const char* kPerYearNames[kPerYearCount] = {
    property::kRawSuccession, property::kNewMoonCount, property::kContinuity,
    property::kCorrectedSuccession, property::kEasterWindow, property::kEasterUnaffected};

using PerYearResults = std::array<PropertyResult, kPerYearCount>;

void check_year(std::int64_t y, PerYearResults& r) {
  const int e = detail::epact_value(y);
  const int g = detail::golden(y);

  std::array<int, 365> raw{};
  for (int n = 0; n < 365; ++n) raw[n] = detail::age(e, g, n);

  ++r[kRawSucc].checked;
  for (int n = 0; n + 1 < 365; ++n) {
    const int a = raw[n], b = raw[n + 1];
    if (!(b == a + 1 || (b == 1 && (a == 29 || a == 30)))) {
      const CalendarDate d = date_from_day_number(DayOfYear{n});
      fail(r[kRawSucc], y, step_text(a, b) + " after " + iso_date(y, d));
      break;
    }
  }

  ++r[kCount].checked;
  const auto new_moons = std::count(raw.begin(), raw.end(), 1);
  if (new_moons != 12 && new_moons != 13) fail(r[kCount], y, std::to_string(new_moons) + " new moons");

  if (y >= kMinYear + 1) {
    const int dec31 = moon_age(y - 1, {12, 31}).value;
    const int jan1 = corrected_age(y, {1, 1}).value;
    ++r[kCont].checked;
    if (floor_mod(jan1, 30) != floor_mod(dec31 + 1, 30))
      fail(r[kCont], y, "Dec 31 age " + std::to_string(dec31) + ", corrected Jan 1 age " + std::to_string(jan1));

    // The corrected first January lunation ends at 30 - J; that is the only
    // reset allowed from outside 29..31.
    const int j = jump(y).value;
    const int region_end = 30 - e;
    std::array<int, 62> seq{};
    for (int d = 1; d <= 31; ++d) {
      seq[d - 1] = moon_age(y - 1, {12, d}).value;
      seq[30 + d] = corrected_age(y, {1, d}).value;
    }
    ++r[kCorrSucc].checked;
    for (int i = 0; i + 1 < 62; ++i) {
      const int a = seq[i], b = seq[i + 1];
      const bool at_region_end = i == 30 + region_end;
      const bool ok = b == a + 1 || (b == 1 && (a == 29 || a == 30 || a == 31 || (at_region_end && a == 30 - j)));
      if (!ok) {
        fail(r[kCorrSucc], y, step_text(a, b) + " at index " + std::to_string(i) + " of Dec-Jan");
        break;
      }
    }
  }

  ++r[kEaster].checked;
  const CalendarDate easter = easter_date(y);
  if (easter < CalendarDate{3, 22} || easter > CalendarDate{4, 25}) fail(r[kEaster], y, iso_date(y, easter));

  ++r[kEasterSame].checked;
  const CalendarDate raw_pfm = paschal_full_moon(y, MoonAgeMode::Raw);
  const CalendarDate corr_pfm = paschal_full_moon(y, MoonAgeMode::Corrected);
  if (raw_pfm != corr_pfm) fail(r[kEasterSame], y, iso_date(y, raw_pfm) + " vs " + iso_date(y, corr_pfm));
}

PerYearResults check_years(std::int64_t lo, std::int64_t hi) {
  PerYearResults r;
  for (int i = 0; i < kPerYearCount; ++i) r[i].name = kPerYearNames[i];
  for (std::int64_t y = lo; y <= hi; ++y) check_year(y, r);
  return r;
}

// Chunks are merged in year order, so the first counterexample is the same
// whatever the thread count.
void merge(PerYearResults& into, const PerYearResults& chunk) {
  for (int i = 0; i < kPerYearCount; ++i) {
    into[i].checked += chunk[i].checked;
    if (!chunk[i].passed) fail(into[i], *chunk[i].counterexample, chunk[i].detail);
  }
}

std::vector<PropertyResult> sequential_properties(std::int64_t from, std::int64_t to, const VerifyRoutes& routes) {
  PropertyResult rec;
  rec.name = property::kRecurrence;
  PropertyResult solar;
  solar.name = property::kSolarSum;
  PropertyResult lunar;
  lunar.name = property::kLunarSum;
  PropertyResult alt;
  alt.name = property::kLunarSumAlt;
  PropertyResult jmp;
  jmp.name = property::kJump;

  EpactRecurrence walk;
  std::int64_t solar_total = 0;
  std::int64_t lunar_total = 0;
  while (walk.year() < to) {
    walk.advance();
    const std::int64_t y = walk.year();
    const CorrectionFlags f = corrections(y);
    solar_total += f.solar;
    lunar_total += f.lunar;
    if (y < from) continue;

    if (y <= kMaxYear) {
      ++rec.checked;
      const Epact closed = routes.epact(y);
      if (closed != walk.epact())
        fail(rec, y, "closed form " + std::to_string(closed.value) + ", recurrence " + std::to_string(walk.value()));

      ++jmp.checked;
      const int expected = f.metonic - f.solar + f.lunar;
      const int actual = jump(y).value;
      if (actual != expected)
        fail(jmp, y, "jump " + std::to_string(actual) + ", corrections give " + std::to_string(expected));
    }

    ++solar.checked;
    if (const auto v = routes.solar_sum(y); v != solar_total)
      fail(solar, y, "closed form " + std::to_string(v) + ", count " + std::to_string(solar_total));
    ++lunar.checked;
    if (const auto v = routes.lunar_sum(y); v != lunar_total)
      fail(lunar, y, "closed form " + std::to_string(v) + ", count " + std::to_string(lunar_total));
    ++alt.checked;
    if (const auto a = routes.lunar_sum(y), b = routes.lunar_sum_alt(y); a != b)
      fail(alt, y, "lunar sum " + std::to_string(a) + ", alternate " + std::to_string(b));
  }
  return {rec, solar, lunar, alt, jmp};
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

const PropertyResult* VerifyReport::find(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

VerifyRoutes VerifyRoutes::library() {
  VerifyRoutes routes;
  routes.epact = [](std::int64_t y) { return computus::epact(y); };
  routes.solar_sum = [](std::int64_t y) { return computus::solar_sum(y); };
  routes.lunar_sum = [](std::int64_t y) { return computus::lunar_sum(y); };
  routes.lunar_sum_alt = [](std::int64_t y) { return computus::lunar_sum_alt(y); };
  return routes;
}

VerifyReport run_verification(std::int64_t from, std::int64_t to, const VerifyRoutes& routes, unsigned threads) {
  require_year(from, kMinYear, kRecurrenceCeiling);
  require_year(to, kMinYear, kRecurrenceCeiling);
  if (from > to) throw std::invalid_argument("verification range is empty: from > to");

  VerifyReport report;
  report.from = from;
  report.to = to;
  report.properties = sequential_properties(from, to, routes);

  PerYearResults per_year;
  for (int i = 0; i < kPerYearCount; ++i) per_year[i].name = kPerYearNames[i];
  const std::int64_t hi = std::min(to, kMaxYear);
  if (from <= hi) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t span = hi - from + 1;
    const std::int64_t chunks = std::min<std::int64_t>(threads, span);
    std::vector<std::future<PerYearResults>> parts;
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::int64_t lo = from + span * c / chunks;
      const std::int64_t up = from + span * (c + 1) / chunks - 1;
      parts.push_back(std::async(chunks == 1 ? std::launch::deferred : std::launch::async, check_years, lo, up));
    }
    for (auto& part : parts) merge(per_year, part.get());
  }
  report.properties.insert(report.properties.end(), per_year.begin(), per_year.end());
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "verify " << report.from << ".." << report.to << '\n';
  for (const auto& p : report.properties) {
    out << (p.passed ? "PASS " : "FAIL ") << p.name << " (" << p.checked << " years)";
    if (!p.passed) out << ": first counterexample " << *p.counterexample << ", " << p.detail;
    out << '\n';
  }
  out << (report.passed() ? "all properties hold" : "verification FAILED") << '\n';
  return out.str();
}

}  // namespace computus
