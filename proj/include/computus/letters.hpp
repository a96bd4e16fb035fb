#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "computus/core.hpp"

namespace computus {

/// Martyrology letter of a year's epact. `distinct_color` is set only for the
/// letter standing for the special (Arabic) epact 25.
struct MartyrologyLetter {
  std::string symbol;
  bool distinct_color;
  friend bool operator==(const MartyrologyLetter&, const MartyrologyLetter&) = default;
};

/// Epact -> letter mapping. Loaded from a JSON file of the form
///   {"letters": {"0": "P", "1": "a", ..., "29": "N"}, "special25": "F"}
/// where every epact 0..29 must be present.
class LetterTable {
 public:
  static LetterTable builtin();
  static LetterTable from_json_text(const std::string& text);
  static LetterTable load(const std::filesystem::path& path);

  MartyrologyLetter letter(Epact e) const;

  friend bool operator==(const LetterTable&, const LetterTable&) = default;

 private:
  std::array<std::string, 30> regular_{};
  std::string special25_;
};

/// Letter from the built-in table.
MartyrologyLetter martyrology_letter(Epact e);

}  // namespace computus
