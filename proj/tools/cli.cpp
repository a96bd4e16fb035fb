#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <regex>
#include <stdexcept>

#include "CLI11.hpp"
#include "computus/core.hpp"
#include "computus/format.hpp"
#include "computus/letters.hpp"
#include "computus/recurrence.hpp"
#include "computus/tables.hpp"
#include "computus/verify.hpp"

namespace computus::cli {

namespace {

enum class OutputFormat { Text, Csv, Json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::int64_t year = 0;
  std::string date;
  std::string mode = "raw";
  std::string format = "text";
  std::string letters;
  bool color = false;
  std::int64_t from = kMinYear;
  std::int64_t to = 25000;
  unsigned threads = 0;
};

MoonAgeMode mode_of(const Options& o) {
  if (auto m = parse_mode(o.mode)) return *m;
  throw UsageError("unknown mode '" + o.mode + "' (expected raw, pronounced or corrected)");
}

OutputFormat format_of(const Options& o) {
  if (o.format == "text") return OutputFormat::Text;
  if (o.format == "csv") return OutputFormat::Csv;
  if (o.format == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + o.format + "' (expected text, csv or json)");
}

std::pair<std::int64_t, CalendarDate> parse_iso_date(const std::string& text) {
  static const std::regex kIso(R"(^(\d{1,9})-(\d{1,2})-(\d{1,2})$)");
  std::smatch m;
  if (!std::regex_match(text, m, kIso)) throw UsageError("date '" + text + "' is not in YYYY-MM-DD form");
  const std::int64_t year = std::stoll(m[1].str());
  const CalendarDate date{std::stoi(m[2].str()), std::stoi(m[3].str())};
  require_year(year);
  require_date(year, date);
  return {year, date};
}

int cmd_epact(const Options& o, std::ostream& out) {
  const LetterTable letters = o.letters.empty() ? LetterTable::builtin() : LetterTable::load(o.letters);
  const Epact e = epact(o.year);
  const MartyrologyLetter letter = letters.letter(e);
  out << "epact " << epact_symbol(e) << " (" << e.value << "), golden " << golden_number(o.year).value << ", letter "
      << letter.symbol << (letter.distinct_color ? " (distinct color)" : "") << ", century "
      << century_number(o.year).value << '\n';
  return kExitOk;
}

int cmd_moon_age(const Options& o, std::ostream& out) {
  const auto [year, date] = parse_iso_date(o.date);
  out << age_in_mode(year, date, mode_of(o)).value << '\n';
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const YearLunarTable table = year_table(o.year, mode_of(o));
  switch (format_of(o)) {
    case OutputFormat::Text: out << render_year_text(table, {o.color}); break;
    case OutputFormat::Csv: out << to_csv(table); break;
    case OutputFormat::Json: out << to_json(table).dump(2) << '\n'; break;
  }
  return kExitOk;
}

int cmd_transition(const Options& o, std::ostream& out) {
  const TransitionTable table = transition_table(o.year, mode_of(o));
  switch (format_of(o)) {
    case OutputFormat::Text: out << render_transition_text(table, {o.color}); break;
    case OutputFormat::Csv: out << to_csv(table); break;
    case OutputFormat::Json: out << to_json(table).dump(2) << '\n'; break;
  }
  return kExitOk;
}

int cmd_new_moons(const Options& o, std::ostream& out) {
  const auto dates = new_moon_dates(o.year, mode_of(o));
  switch (format_of(o)) {
    case OutputFormat::Text:
      for (const auto& d : dates) out << iso_date(o.year, d) << '\n';
      break;
    case OutputFormat::Csv:
      out << "date\n";
      for (const auto& d : dates) out << iso_date(o.year, d) << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["year"] = o.year;
      j["mode"] = to_string(mode_of(o));
      j["new_moons"] = nlohmann::ordered_json::array();
      for (const auto& d : dates) j["new_moons"].push_back(iso_date(o.year, d));
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_easter(const Options& o, std::ostream& out) {
  out << iso_date(o.year, easter_date(o.year, mode_of(o))) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.from > o.to) throw UsageError("--from must not exceed --to");
  require_year(o.from, kMinYear, kRecurrenceCeiling);
  require_year(o.to, kMinYear, kRecurrenceCeiling);
  const VerifyReport report = run_verification(o.from, o.to, VerifyRoutes::library(), o.threads);
  out << format_report(report);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Age of the Gregorian ecclesiastical moon", "computus"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--letters", o.letters, "JSON file mapping epacts to Martyrology letters");

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "raw, pronounced or corrected")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, csv or json")->capture_default_str();
  };

  auto* epact_cmd = app.add_subcommand("epact", "Epact, golden number, century and Martyrology letter");
  epact_cmd->add_option("year", o.year)->required();

  auto* age_cmd = app.add_subcommand("moon-age", "Age of the moon on a date (YYYY-MM-DD)");
  age_cmd->add_option("date", o.date)->required();
  add_mode(age_cmd);

  auto* table_cmd = app.add_subcommand("table", "Moon ages for every day of a year");
  table_cmd->add_option("year", o.year)->required();
  add_mode(table_cmd);
  add_format(table_cmd);
  table_cmd->add_flag("--color", o.color, "ANSI color for new moons and 14th days");

  auto* transition_cmd = app.add_subcommand("transition", "December of year-1 beside January of year");
  transition_cmd->add_option("year", o.year)->required();
  add_mode(transition_cmd);
  add_format(transition_cmd);
  transition_cmd->add_flag("--color", o.color, "ANSI color for new moons and 14th days");

  auto* new_moons_cmd = app.add_subcommand("new-moons", "Dates of the new moons of a year");
  new_moons_cmd->add_option("year", o.year)->required();
  add_mode(new_moons_cmd);
  add_format(new_moons_cmd);

  auto* easter_cmd = app.add_subcommand("easter", "Date of Easter Sunday");
  easter_cmd->add_option("year", o.year)->required();
  add_mode(easter_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check all identities over a range of years");
  verify_cmd->add_option("--from", o.from)->capture_default_str();
  verify_cmd->add_option("--to", o.to)->capture_default_str();
  verify_cmd->add_option("--threads", o.threads, "worker threads, 0 = hardware concurrency");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (epact_cmd->parsed()) return cmd_epact(o, out);
    if (age_cmd->parsed()) return cmd_moon_age(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
    if (transition_cmd->parsed()) return cmd_transition(o, out);
    if (new_moons_cmd->parsed()) return cmd_new_moons(o, out);
    if (easter_cmd->parsed()) return cmd_easter(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace computus::cli
