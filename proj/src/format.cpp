#include "computus/format.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace computus {

namespace {

constexpr std::string_view kRed = "\x1b[31m";
constexpr std::string_view kBlue = "\x1b[34m";
constexpr std::string_view kReset = "\x1b[0m";

void rtrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

std::string padded(int value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), ' ');
  return s;
}

nlohmann::ordered_json entry_json(const LunarTableEntry& e) {
  nlohmann::ordered_json j;
  j["month"] = e.date.month;
  j["day"] = e.date.day;
  j["age"] = e.age.value;
  j["new_moon"] = e.is_new_moon;
  j["full_moon"] = e.is_full_moon;
  return j;
}

void csv_row(std::ostream& out, const LunarTableEntry& e) {
  out << e.date.month << ',' << e.date.day << ',' << e.age.value << ',' << (e.is_new_moon ? "true" : "false") << ','
      << (e.is_full_moon ? "true" : "false") << '\n';
}

}  // namespace

std::string roman_lower(int value) {
  static constexpr std::array<std::pair<int, std::string_view>, 9> kNumerals = {
      {{100, "c"}, {90, "xc"}, {50, "l"}, {40, "xl"}, {10, "x"}, {9, "ix"}, {5, "v"}, {4, "iv"}, {1, "i"}}};
  std::string out;
  for (const auto& [weight, glyph] : kNumerals)
    while (value >= weight) {
      out += glyph;
      value -= weight;
    }
  return out;
}

std::string epact_symbol(Epact e) {
  if (e.value == 0) return "*";
  if (e.special25) return "25";
  std::string s = roman_lower(e.value);
  if (s.back() == 'i') s.back() = 'j';
  return s;
}

std::string_view month_abbrev(int month) {
  static constexpr std::array<std::string_view, 12> kNames = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                              "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  return kNames.at(month - 1);
}

std::string iso_date(std::int64_t year, CalendarDate date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "-%02d-%02d", date.month, date.day);
  return std::to_string(year) + buf;
}

std::string render_row(std::string_view label, std::span<const LunarTableEntry> entries, RenderOptions opts) {
  std::string line(label);
  for (const auto& e : entries) {
    const char marker = e.is_new_moon ? '*' : (e.is_full_moon ? '^' : ' ');
    const std::string cell = padded(e.age.value, 3);
    if (opts.color && marker != ' ') {
      line += e.is_new_moon ? kRed : kBlue;
      line += cell;
      line += kReset;
    } else {
      line += cell;
    }
    line += marker;
  }
  rtrim(line);
  return line;
}

std::string render_transition_rows(const TransitionTable& table, RenderOptions opts) {
  return render_row("Dec", table.december, opts) + '\n' + render_row("Jan", table.january, opts) + '\n';
}

std::string render_transition_text(const TransitionTable& table, RenderOptions opts) {
  std::string header = "   ";
  for (int d = 1; d <= 31; ++d) header += padded(d, 3) + ' ';
  rtrim(header);
  std::ostringstream out;
  out << table.year - 1 << '/' << table.year << " (" << to_string(table.mode) << ")\n"
      << header << '\n'
      << render_transition_rows(table, opts);
  return out.str();
}

std::string render_year_text(const YearLunarTable& table, RenderOptions opts) {
  std::ostringstream out;
  out << table.year() << " (" << to_string(table.mode()) << ")\n";
  std::string header = "   ";
  for (int d = 1; d <= 31; ++d) header += padded(d, 3) + ' ';
  rtrim(header);
  out << header << '\n';
  const auto entries = table.entries();
  std::size_t begin = 0;
  for (int month = 1; month <= 12; ++month) {
    std::size_t end = begin;
    while (end < entries.size() && entries[end].date.month == month) ++end;
    out << render_row(month_abbrev(month), entries.subspan(begin, end - begin), opts) << '\n';
    begin = end;
  }
  return out.str();
}

nlohmann::ordered_json to_json(const YearLunarTable& table) {
  nlohmann::ordered_json j;
  j["year"] = table.year();
  j["mode"] = to_string(table.mode());
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : table.entries()) j["entries"].push_back(entry_json(e));
  return j;
}

nlohmann::ordered_json to_json(const TransitionTable& table) {
  nlohmann::ordered_json j;
  j["year"] = table.year;
  j["mode"] = to_string(table.mode);
  j["december"] = nlohmann::ordered_json::array();
  for (const auto& e : table.december) j["december"].push_back(entry_json(e));
  j["january"] = nlohmann::ordered_json::array();
  for (const auto& e : table.january) j["january"].push_back(entry_json(e));
  return j;
}

std::string to_csv(const YearLunarTable& table) {
  std::ostringstream out;
  out << "month,day,age,new_moon,full_moon\n";
  for (const auto& e : table.entries()) csv_row(out, e);
  return out.str();
}

std::string to_csv(const TransitionTable& table) {
  std::ostringstream out;
  out << "year,month,day,age,new_moon,full_moon\n";
  for (const auto& e : table.december) {
    out << table.year - 1 << ',';
    csv_row(out, e);
  }
  for (const auto& e : table.january) {
    out << table.year << ',';
    csv_row(out, e);
  }
  return out.str();
}

}  // namespace computus
