#include "wsdlsem/preprocess.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

#include "text.hpp"
#include "wsdlsem/error.hpp"

namespace wsdlsem {

namespace {

using detail::is_letter;
using detail::is_lower;
using detail::is_upper;

constexpr char kSeparator = ' ';

// Canonical decomposition, then: ASCII letters kept, combining marks and
// non-ASCII letters dropped, everything else becomes a separator.
std::string fold(std::string_view raw) {
  bool ascii = true;
  for (char c : raw)
    if (static_cast<unsigned char>(c) >= 0x80) ascii = false;
  if (ascii) {
    std::string out(raw);
    for (char& c : out)
      if (!is_letter(c)) c = kSeparator;
    return out;
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD normalizer unavailable");
  icu::UnicodeString decomposed =
      nfd->normalize(icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(),
                                                                   static_cast<int32_t>(raw.size()))),
                     status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");

  std::string out;
  out.reserve(raw.size());
  for (int32_t i = 0; i < decomposed.length(); i = decomposed.moveIndex32(i, 1)) {
    UChar32 cp = decomposed.char32At(i);
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      out += is_letter(c) ? c : kSeparator;
    } else if (u_getCombiningClass(cp) != 0 || u_charType(cp) == U_NON_SPACING_MARK ||
               u_charType(cp) == U_ENCLOSING_MARK || u_charType(cp) == U_COMBINING_SPACING_MARK) {
      continue;
    } else if (u_isalpha(cp)) {
      continue;
    } else {
      out += kSeparator;
    }
  }
  return out;
}

void split_case(std::string_view segment, std::vector<std::string>& out) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < segment.size(); ++i) {
    char prev = segment[i - 1];
    char cur = segment[i];
    bool boundary = (is_lower(prev) && is_upper(cur)) ||
                    (is_upper(prev) && is_upper(cur) && i + 1 < segment.size() &&
                     is_lower(segment[i + 1]));
    if (boundary) {
      out.emplace_back(segment.substr(start, i - start));
      start = i;
    }
  }
  out.emplace_back(segment.substr(start));
}

std::string letters_only(std::string_view s) {
  std::string out;
  for (char c : s)
    if (is_letter(c)) out += c;
  return out;
}

}  // namespace

std::vector<std::string> decompose(std::string_view raw) {
  std::string folded = fold(raw);
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < folded.size()) {
    auto end = folded.find(kSeparator, pos);
    if (end == std::string::npos) end = folded.size();
    if (end > pos) split_case(std::string_view(folded).substr(pos, end - pos), out);
    pos = end + 1;
  }
  return out;
}

std::vector<Word> normalize(std::span<const std::string> tokens, const PreprocessConfig& config) {
  std::vector<Word> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    std::string lower = detail::to_lower(letters_only(token));
    if (lower.empty()) continue;
    if (auto it = config.abbreviations.find(lower); it != config.abbreviations.end())
      out.emplace_back(it->second);
    else
      out.emplace_back(std::move(lower));
  }
  return out;
}

std::vector<Word> filter(std::span<const Word> words, const PreprocessConfig& config) {
  std::vector<Word> out;
  for (const auto& w : words)
    if (!config.stop_words.contains(w.text())) out.push_back(w);
  return out;
}

std::vector<Word> preprocess(std::string_view raw, const PreprocessConfig& config) {
  std::vector<std::string> tokens;
  if (config.stages.decompose) {
    tokens = decompose(raw);
  } else {
    std::string whole = letters_only(fold(raw));
    if (!whole.empty()) tokens.push_back(std::move(whole));
  }

  std::vector<Word> words;
  if (config.stages.normalize) {
    words = normalize(tokens, config);
  } else {
    for (const auto& t : tokens) words.emplace_back(detail::to_lower(t));
  }

  if (config.stages.filter) return filter(words, config);
  return words;
}

std::map<std::string, std::string> parse_abbreviations(std::string_view document) {
  std::map<std::string, std::string> out;
  detail::for_each_config_line(document, [&](std::size_t line, std::string_view content) {
    auto eq = content.find('=');
    if (eq == std::string_view::npos)
      throw LineError(ErrorCode::MalformedConfig, line, "expected 'abbreviation=expansion'");
    std::string key = detail::to_lower(detail::trim(content.substr(0, eq)));
    std::string value = detail::to_lower(detail::trim(content.substr(eq + 1)));
    if (!Word::is_valid(key) || !Word::is_valid(value))
      throw LineError(ErrorCode::MalformedConfig, line,
                      "abbreviation and expansion must be single words of letters a-z");
    out.insert_or_assign(std::move(key), std::move(value));
  });
  return out;
}

std::set<std::string, std::less<>> parse_stop_words(std::string_view document) {
  std::set<std::string, std::less<>> out;
  detail::for_each_config_line(document, [&](std::size_t line, std::string_view content) {
    std::string word = detail::to_lower(content);
    if (!Word::is_valid(word))
      throw LineError(ErrorCode::MalformedConfig, line,
                      "stop-word must be a single word of letters a-z");
    out.insert(std::move(word));
  });
  return out;
}

}  // namespace wsdlsem
