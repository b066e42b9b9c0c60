#include "wsdlsem/lexicon.hpp"

#include <algorithm>
#include <charconv>

#include "text.hpp"
#include "wsdlsem/error.hpp"

namespace wsdlsem {

namespace {

bool valid_concept_id(std::string_view id) {
  return !id.empty() && std::none_of(id.begin(), id.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '"' || c == '<' ||
           c == '>' || c == '&';
  });
}

}  // namespace

std::span<const Concept> Lexicon::senses(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) return {};
  return it->second;
}

Lexicon load_lexicon(std::string_view document, std::string ontology_tag) {
  // word -> rank -> (concept, line)
  std::map<std::string, std::map<int, std::pair<std::string, std::size_t>>, std::less<>> ranked;

  detail::for_each_config_line(document, [&](std::size_t line, std::string_view content) {
    auto tab1 = content.find('\t');
    auto tab2 = tab1 == std::string_view::npos ? tab1 : content.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos || content.find('\t', tab2 + 1) != std::string_view::npos)
      throw LineError(ErrorCode::MalformedLexiconLine, line,
                      "expected three tab-separated fields: word, rank, concept");
    std::string word = detail::to_lower(detail::trim(content.substr(0, tab1)));
    std::string_view rank_text = detail::trim(content.substr(tab1 + 1, tab2 - tab1 - 1));
    std::string_view concept_id = detail::trim(content.substr(tab2 + 1));

    if (!Word::is_valid(word))
      throw LineError(ErrorCode::MalformedLexiconLine, line,
                      "word must consist of letters a-z only");
    int rank = 0;
    auto [ptr, ec] = std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), rank);
    if (ec != std::errc() || ptr != rank_text.data() + rank_text.size() || rank < 1)
      throw LineError(ErrorCode::MalformedLexiconLine, line, "rank must be a positive integer");
    if (!valid_concept_id(concept_id))
      throw LineError(ErrorCode::MalformedLexiconLine, line,
                      "concept must be a non-empty name without whitespace or markup");

    auto& senses = ranked[word];
    if (senses.contains(rank))
      throw LineError(ErrorCode::DuplicateSense, line,
                      "sense " + std::to_string(rank) + " of '" + word + "' already defined on line " +
                          std::to_string(senses[rank].second));
    senses.emplace(rank, std::make_pair(std::string(concept_id), line));
  });

  Lexicon lexicon(std::move(ontology_tag));
  for (auto& [word, senses] : ranked) {
    std::vector<Concept> list;
    int expected = 1;
    for (auto& [rank, entry] : senses) {
      if (rank != expected)
        throw Error(ErrorCode::NonContiguousRanks,
                    "senses of '" + word + "' must be ranked 1.." + std::to_string(senses.size()) +
                        " but rank " + std::to_string(expected) + " is missing");
      list.push_back(Concept{std::move(entry.first), lexicon.ontology_});
      ++expected;
    }
    lexicon.entries_.emplace(word, std::move(list));
  }
  return lexicon;
}

OverrideMap parse_overrides(std::string_view document, std::string ontology_tag) {
  OverrideMap out;
  detail::for_each_config_line(document, [&](std::size_t line, std::string_view content) {
    auto eq = content.find('=');
    if (eq == std::string_view::npos)
      throw LineError(ErrorCode::MalformedConfig, line, "expected 'word=Concept'");
    std::string word = detail::to_lower(detail::trim(content.substr(0, eq)));
    std::string_view concept_id = detail::trim(content.substr(eq + 1));
    if (!Word::is_valid(word))
      throw LineError(ErrorCode::MalformedConfig, line, "word must consist of letters a-z only");
    if (!valid_concept_id(concept_id))
      throw LineError(ErrorCode::MalformedConfig, line,
                      "concept must be a non-empty name without whitespace or markup");
    out.insert_or_assign(std::move(word), Concept{std::string(concept_id), ontology_tag});
  });
  return out;
}

std::optional<Concept> associate(const Word& word, const Lexicon& lexicon,
                                 const OverrideMap& overrides) {
  if (auto it = overrides.find(word.text()); it != overrides.end()) return it->second;
  auto senses = lexicon.senses(word.text());
  if (senses.empty()) return std::nullopt;
  return senses.front();
}

std::vector<std::pair<Word, Concept>> associate_words(std::span<const Word> words,
                                                      const Lexicon& lexicon,
                                                      const OverrideMap& overrides) {
  std::vector<std::pair<Word, Concept>> out;
  for (const auto& w : words)
    if (auto c = associate(w, lexicon, overrides)) out.emplace_back(w, std::move(*c));
  return out;
}

}  // namespace wsdlsem
