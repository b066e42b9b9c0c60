#pragma once

// Word -> ontology concept lookup. A lexicon lists ranked senses per word;
// lookups take the rank-1 sense unless the override map pins another
// concept for that word.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsdlsem/model.hpp"

namespace wsdlsem {

inline constexpr std::string_view kDefaultOntology = "SUMO";

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::string ontology_tag) : ontology_(std::move(ontology_tag)) {}

  // Senses in ascending rank order, or empty when the word is absent.
  std::span<const Concept> senses(std::string_view word) const;

  const std::string& ontology() const { return ontology_; }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::vector<Concept>, std::less<>>& entries() const {
    return entries_;
  }

 private:
  friend Lexicon load_lexicon(std::string_view, std::string);

  std::string ontology_ = std::string(kDefaultOntology);
  std::map<std::string, std::vector<Concept>, std::less<>> entries_;
};

// Parses `word<TAB>rank<TAB>concept` lines ('#' comments, blank lines
// ignored). Ranks of each word must be exactly 1..k.
// Throws LineError(MalformedLexiconLine | DuplicateSense) and
// Error(NonContiguousRanks).
Lexicon load_lexicon(std::string_view document, std::string ontology_tag = std::string(kDefaultOntology));

using OverrideMap = std::map<std::string, Concept, std::less<>>;

// `word=Concept` per line. Throws LineError(MalformedConfig).
OverrideMap parse_overrides(std::string_view document,
                            std::string ontology_tag = std::string(kDefaultOntology));

std::optional<Concept> associate(const Word& word, const Lexicon& lexicon,
                                 const OverrideMap& overrides);

// Per-word associate, hits only, input order and duplicates kept.
std::vector<std::pair<Word, Concept>> associate_words(std::span<const Word> words,
                                                      const Lexicon& lexicon,
                                                      const OverrideMap& overrides);

}  // namespace wsdlsem
