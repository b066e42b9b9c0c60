#pragma once

// Second, deliberately naive implementation of the annotation pipeline used
// only as a test reference. It shares nothing with the library except the
// parsed model types: tokenizing, lookup and the staged search are
// rewritten from the rules, favouring obviousness over speed.

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wsdlsem/model.hpp"

namespace oracle {

struct Config {
  std::map<std::string, std::string> abbreviations;
  std::set<std::string> stop_words;
  std::map<std::string, std::vector<std::string>> senses;  // rank order
  std::map<std::string, std::string> overrides;
  bool decompose = true;
  bool normalize = true;
  bool filter = true;
  bool type_name = true;
  bool explore = true;
  int max_depth = 8;
};

std::vector<std::string> words(std::string_view raw, const Config& cfg);

struct Hit {
  std::string concept_id;
  std::string word;
  wsdlsem::SourceKind source;
  std::vector<std::string> path;
  int depth;
  bool operator==(const Hit&) const = default;
};

// Hits of the first successful step, empty on failure. `seen` collects
// every word produced on the way.
std::vector<Hit> annotate(const wsdlsem::Parameter& param, const wsdlsem::WsDescription& desc,
                          const Config& cfg, std::vector<std::string>* seen = nullptr);

// Stage n (1..5) of the cumulative ablation.
Config stage(const Config& base, int n);

struct Row {
  std::size_t annotated = 0;
  std::size_t total = 0;
};
std::array<Row, 5> ablation(const std::vector<wsdlsem::WsDescription>& descs, const Config& base);

std::map<std::string, std::size_t> word_counts(const std::vector<wsdlsem::WsDescription>& descs,
                                               const Config& base);

// Reads the shipped config formats independently of the library parsers.
Config load_config(const std::string& lexicon_tsv, const std::string& abbreviations,
                   const std::string& stop_words, const std::string& overrides = "");

}  // namespace oracle
