#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "computus/core.hpp"
#include "computus/tables.hpp"
#include "json.hpp"

namespace computus {

/// "*" for 0, "25" for the special 25, otherwise lowercase Roman numerals with
/// a final "i" printed as "j" (16 -> "xvj").
std::string epact_symbol(Epact e);
std::string roman_lower(int value);

std::string_view month_abbrev(int month);
std::string iso_date(std::int64_t year, CalendarDate date);

struct RenderOptions {
  bool color = false;
};

/// Cells are three columns wide followed by a marker: '*' new moon, '^' 14th
/// day, ' ' otherwise. Trailing blanks are trimmed.
std::string render_row(std::string_view label, std::span<const LunarTableEntry> entries, RenderOptions opts = {});

/// The December and January rows only, one per line.
std::string render_transition_rows(const TransitionTable& table, RenderOptions opts = {});
std::string render_transition_text(const TransitionTable& table, RenderOptions opts = {});
std::string render_year_text(const YearLunarTable& table, RenderOptions opts = {});

nlohmann::ordered_json to_json(const YearLunarTable& table);
nlohmann::ordered_json to_json(const TransitionTable& table);

std::string to_csv(const YearLunarTable& table);
std::string to_csv(const TransitionTable& table);

}  // namespace computus
