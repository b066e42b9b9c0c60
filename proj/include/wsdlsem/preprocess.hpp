#pragma once

// Turns raw identifiers ("ASessionId_02") into clean dictionary words
// ("session", "identity") in three stages: decomposition, normalization
// and filtering.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsdlsem/model.hpp"

namespace wsdlsem {

struct StageSet {
  bool decompose = true;
  bool normalize = true;
  bool filter = true;

  static constexpr StageSet none() { return {false, false, false}; }
  static constexpr StageSet all() { return {true, true, true}; }
  bool operator==(const StageSet&) const = default;
};

struct PreprocessConfig {
  std::map<std::string, std::string> abbreviations;  // lowercase key -> full word
  std::set<std::string, std::less<>> stop_words;     // lowercase
  StageSet stages = StageSet::all();
};

// Splits an identifier at case changes and at every non-letter character.
// "XMLParser" -> {"XML", "Parser"}; "Number3Format" -> {"Number", "Format"}.
// Diacritics are folded to their base letter; letters with no ASCII base are
// dropped.
std::vector<std::string> decompose(std::string_view raw);

// Lowercases each token and expands whole-token abbreviations (once).
std::vector<Word> normalize(std::span<const std::string> tokens, const PreprocessConfig& config);

// Removes stop-words, preserving the order of survivors.
std::vector<Word> filter(std::span<const Word> words, const PreprocessConfig& config);

// Applies the enabled stages in fixed order. Lowercasing always happens.
std::vector<Word> preprocess(std::string_view raw, const PreprocessConfig& config);

// `abbr=expansion` per line, '#' comments, blank lines ignored.
// Throws LineError(MalformedConfig).
std::map<std::string, std::string> parse_abbreviations(std::string_view document);

// One word per line, '#' comments, blank lines ignored.
// Throws LineError(MalformedConfig).
std::set<std::string, std::less<>> parse_stop_words(std::string_view document);

}  // namespace wsdlsem
