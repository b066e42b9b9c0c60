#include "wsdlsem/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "json.hpp"
#include "parallel.hpp"

namespace wsdlsem {

std::string_view stage_name(AblationStage stage) {
  switch (stage) {
    case AblationStage::NoPreprocessing: return "NoPreprocessing";
    case AblationStage::Decomposition: return "+Decomposition";
    case AblationStage::Normalization: return "+Normalization";
    case AblationStage::Filtering: return "+Filtering";
    case AblationStage::TypeExplorer: return "+TypeExplorer";
  }
  return "";
}

Pipeline configure_stage(const Pipeline& base, AblationStage stage) {
  Pipeline p = base;
  const int n = static_cast<int>(stage);
  p.preprocess.stages = StageSet{n >= 2, n >= 3, n >= 4};
  p.explorer.type_name_enabled = n >= 5;
  p.explorer.type_explorer_enabled = n >= 5;
  return p;
}

std::vector<std::vector<Annotation>> annotate_corpus(const Corpus& corpus,
                                                     const AnnotationContext& ctx,
                                                     unsigned jobs) {
  std::vector<std::vector<Annotation>> out(corpus.descriptions.size());
  detail::parallel_for(corpus.descriptions.size(), jobs, [&](std::size_t i) {
    out[i] = annotate_description(corpus.descriptions[i], ctx);
  });
  return out;
}

AblationReport run_ablation(const Corpus& corpus, const Pipeline& base, unsigned jobs) {
  AblationReport report;
  for (AblationStage stage : kAblationStages) {
    Pipeline p = configure_stage(base, stage);
    AblationRow row;
    row.stage_name = std::string(stage_name(stage));
    for (const auto& list : annotate_corpus(corpus, p.context(), jobs)) {
      row.total += list.size();
      row.annotated += static_cast<std::size_t>(
          std::count_if(list.begin(), list.end(), [](const Annotation& a) { return a.annotated(); }));
    }
    row.rate = row.total == 0 ? 0.0
                              : static_cast<double>(row.annotated) / static_cast<double>(row.total);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string ablation_json(const AblationReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json j;
    j["stage"] = r.stage_name;
    j["annotated"] = r.annotated;
    j["total"] = r.total;
    j["rate"] = r.rate;
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["counting"] = "per-occurrence";
  doc["directions"] = "inputs and outputs combined";
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string ablation_table(const AblationReport& report) {
  std::string out;
  out += "# parameters counted per occurrence, inputs and outputs combined\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-18s %10s %8s %12s\n", "Added modification", "Annotated",
                "Total", "Proportion");
  out += line;
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line, "%-18s %10zu %8zu %11.2f%%\n", r.stage_name.c_str(),
                  r.annotated, r.total, r.rate * 100.0);
    out += line;
  }
  return out;
}

std::vector<WordFrequencyRow> word_frequency(const Corpus& corpus, const Pipeline& pipeline,
                                             unsigned jobs) {
  Pipeline full = configure_stage(pipeline, AblationStage::TypeExplorer);
  AnnotationContext ctx = full.context();

  std::vector<std::map<std::string, std::size_t>> partial(corpus.descriptions.size());
  detail::parallel_for(corpus.descriptions.size(), jobs, [&](std::size_t i) {
    const WsDescription& desc = corpus.descriptions[i];
    for (const Parameter* p : desc.parameters())
      for (const Word& w : search_parameter(*p, desc, ctx).words_seen) ++partial[i][w.text()];
  });

  std::map<std::string, std::size_t> counts;
  for (const auto& m : partial)
    for (const auto& [w, n] : m) counts[w] += n;

  std::vector<WordFrequencyRow> rows;
  rows.reserve(counts.size());
  for (const auto& [text, n] : counts) {
    Word w(text);
    auto hit = associate(w, full.lexicon, full.overrides);
    rows.push_back(WordFrequencyRow{std::move(w), n, std::move(hit)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.occurrences > b.occurrences;
  });
  return rows;
}

std::string word_frequency_csv(const std::vector<WordFrequencyRow>& rows) {
  std::string out = "word,occurrences,concept\n";
  for (const auto& r : rows) {
    out += r.word.text();
    out += ',';
    out += std::to_string(r.occurrences);
    out += ',';
    if (r.ontology_concept) out += r.ontology_concept->id;
    out += '\n';
  }
  return out;
}

}  // namespace wsdlsem
