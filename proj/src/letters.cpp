#include "computus/letters.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace computus {

namespace {

constexpr std::array<const char*, 30> kDefaultLetters = {
    "P", "a", "b", "c", "d", "e", "f", "g", "h", "i", "k", "l", "m", "n", "p",
    "q", "r", "s", "t", "u", "A", "B", "C", "D", "E", "F", "G", "H", "M", "N"};

}  // namespace

LetterTable LetterTable::builtin() {
  LetterTable table;
  for (std::size_t i = 0; i < kDefaultLetters.size(); ++i) table.regular_[i] = kDefaultLetters[i];
  table.special25_ = "F";
  return table;
}

LetterTable LetterTable::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("letter table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("letters") || !doc["letters"].is_object())
    throw std::invalid_argument("letter table needs a \"letters\" object");
  if (!doc.contains("special25") || !doc["special25"].is_string())
    throw std::invalid_argument("letter table needs a \"special25\" string");

  LetterTable table;
  const auto& letters = doc["letters"];
  for (int e = 0; e < 30; ++e) {
    const std::string key = std::to_string(e);
    if (!letters.contains(key) || !letters[key].is_string() || letters[key].get<std::string>().empty())
      throw std::invalid_argument("letter table has no symbol for epact " + key);
    table.regular_[e] = letters[key].get<std::string>();
  }
  table.special25_ = doc["special25"].get<std::string>();
  if (table.special25_.empty()) throw std::invalid_argument("letter table has an empty special25 symbol");
  return table;
}

LetterTable LetterTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open letter table " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

MartyrologyLetter LetterTable::letter(Epact e) const {
  if (e.value < 0 || e.value > 29) throw std::invalid_argument("epact " + std::to_string(e.value) + " is not in 0..29");
  if (e.special25) return MartyrologyLetter{special25_, true};
  return MartyrologyLetter{regular_[e.value], false};
}

MartyrologyLetter martyrology_letter(Epact e) {
  static const LetterTable table = LetterTable::builtin();
  return table.letter(e);
}

}  // namespace computus
