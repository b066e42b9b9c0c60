#pragma once

// Corpus-level runs: full annotation, the cumulative five-stage ablation and
// word frequency tables.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsdlsem/explorer.hpp"
#include "wsdlsem/ingest.hpp"
#include "wsdlsem/lexicon.hpp"
#include "wsdlsem/preprocess.hpp"

namespace wsdlsem {

// Everything needed to annotate, owned in one place.
struct Pipeline {
  PreprocessConfig preprocess;
  Lexicon lexicon;
  OverrideMap overrides;
  ExplorerConfig explorer;

  AnnotationContext context() const { return {preprocess, lexicon, overrides, explorer}; }
};

// Cumulative stages: each one adds a functionality to the previous.
enum class AblationStage {
  NoPreprocessing = 1,  // whole name, lowercased
  Decomposition,
  Normalization,
  Filtering,
  TypeExplorer,  // type-name lookup and structural descent
};

inline constexpr std::array<AblationStage, 5> kAblationStages = {
    AblationStage::NoPreprocessing, AblationStage::Decomposition, AblationStage::Normalization,
    AblationStage::Filtering, AblationStage::TypeExplorer};

std::string_view stage_name(AblationStage stage);

// Copy of `base` with stages and explorer switches set for `stage`.
// Stages below TypeExplorer disable both the type-name step and descent.
Pipeline configure_stage(const Pipeline& base, AblationStage stage);

// `result[i]` annotates `corpus.descriptions[i]`; parallel over descriptions.
std::vector<std::vector<Annotation>> annotate_corpus(const Corpus& corpus,
                                                     const AnnotationContext& ctx,
                                                     unsigned jobs = 1);

struct AblationRow {
  std::string stage_name;
  std::size_t annotated = 0;
  std::size_t total = 0;
  double rate = 0.0;
};

struct AblationReport {
  std::vector<AblationRow> rows;
};

AblationReport run_ablation(const Corpus& corpus, const Pipeline& base, unsigned jobs = 1);

std::string ablation_json(const AblationReport& report);
std::string ablation_table(const AblationReport& report);

struct WordFrequencyRow {
  Word word;
  std::size_t occurrences = 0;
  std::optional<Concept> ontology_concept;
};

// Counts every word the full pipeline produces while annotating the corpus,
// including words reached through the type explorer. Sorted by occurrences
// descending, then word ascending.
std::vector<WordFrequencyRow> word_frequency(const Corpus& corpus, const Pipeline& pipeline,
                                             unsigned jobs = 1);

// `word,occurrences,concept` with a header line.
std::string word_frequency_csv(const std::vector<WordFrequencyRow>& rows);

}  // namespace wsdlsem
