#include "wsdlsem.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>
#include <vector>

#include "wsdlsem/error.hpp"
#include "wsdlsem/ingest.hpp"
#include "wsdlsem/lexicon.hpp"
#include "wsdlsem/metrics.hpp"
#include "wsdlsem/preprocess.hpp"
#include "wsdlsem/writer.hpp"

struct wsdlsem_pipeline {
  wsdlsem::Pipeline pipeline;
  wsdlsem::WriterConfig writer;
};

struct wsdlsem_corpus {
  wsdlsem::Corpus corpus;
};

struct wsdlsem_run {
  std::vector<std::string> sawsdl;
  std::string report;
  std::size_t total = 0;
  std::size_t annotated = 0;
};

namespace {

thread_local std::string last_error;

wsdlsem_status status_of(wsdlsem::ErrorCode code) {
  using wsdlsem::ErrorCode;
  switch (code) {
    case ErrorCode::MalformedXml: return WSDLSEM_ERR_MALFORMED_XML;
    case ErrorCode::NotWsdl: return WSDLSEM_ERR_NOT_WSDL;
    case ErrorCode::Io: return WSDLSEM_ERR_IO;
    case ErrorCode::EmptyCorpus: return WSDLSEM_ERR_EMPTY_CORPUS;
    case ErrorCode::MalformedLexiconLine: return WSDLSEM_ERR_MALFORMED_LEXICON;
    case ErrorCode::DuplicateSense: return WSDLSEM_ERR_DUPLICATE_SENSE;
    case ErrorCode::NonContiguousRanks: return WSDLSEM_ERR_NONCONTIGUOUS_RANKS;
    case ErrorCode::MalformedConfig: return WSDLSEM_ERR_MALFORMED_CONFIG;
    case ErrorCode::StructureMismatch: return WSDLSEM_ERR_STRUCTURE_MISMATCH;
  }
  return WSDLSEM_ERR_INTERNAL;
}

wsdlsem_status fail(wsdlsem_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Fn>
wsdlsem_status guarded(Fn&& body) {
  try {
    last_error.clear();
    body();
    return WSDLSEM_OK;
  } catch (const wsdlsem::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WSDLSEM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WSDLSEM_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

#define WSDLSEM_REQUIRE(cond)                                                           \
  do {                                                                                  \
    if (!(cond)) return fail(WSDLSEM_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* wsdlsem_last_error(void) { return last_error.c_str(); }

const char* wsdlsem_status_name(wsdlsem_status status) {
  switch (status) {
    case WSDLSEM_OK: return "ok";
    case WSDLSEM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WSDLSEM_ERR_IO: return "I/O error";
    case WSDLSEM_ERR_MALFORMED_XML: return "malformed XML";
    case WSDLSEM_ERR_NOT_WSDL: return "not a WSDL document";
    case WSDLSEM_ERR_EMPTY_CORPUS: return "empty corpus";
    case WSDLSEM_ERR_MALFORMED_LEXICON: return "malformed lexicon line";
    case WSDLSEM_ERR_DUPLICATE_SENSE: return "duplicate sense";
    case WSDLSEM_ERR_NONCONTIGUOUS_RANKS: return "non-contiguous ranks";
    case WSDLSEM_ERR_MALFORMED_CONFIG: return "malformed configuration";
    case WSDLSEM_ERR_STRUCTURE_MISMATCH: return "structure mismatch";
    case WSDLSEM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void wsdlsem_free(char* text) { std::free(text); }

wsdlsem_status wsdlsem_pipeline_create(wsdlsem_pipeline** out) {
  WSDLSEM_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new wsdlsem_pipeline(); });
}

void wsdlsem_pipeline_destroy(wsdlsem_pipeline* pipeline) { delete pipeline; }

wsdlsem_status wsdlsem_pipeline_load_lexicon(wsdlsem_pipeline* pipeline, const char* path,
                                             const char* ontology_tag) {
  WSDLSEM_REQUIRE(pipeline && path);
  return guarded([&] {
    std::string tag = ontology_tag ? ontology_tag : std::string(wsdlsem::kDefaultOntology);
    wsdlsem::Lexicon lex = wsdlsem::load_lexicon(wsdlsem::read_file(path), tag);
    wsdlsem::OverrideMap overrides = pipeline->pipeline.overrides;
    for (auto& [w, c] : overrides) c.ontology = tag;
    pipeline->pipeline.lexicon = std::move(lex);
    pipeline->pipeline.overrides = std::move(overrides);
  });
}

wsdlsem_status wsdlsem_pipeline_load_abbreviations(wsdlsem_pipeline* pipeline, const char* path) {
  WSDLSEM_REQUIRE(pipeline && path);
  return guarded([&] {
    pipeline->pipeline.preprocess.abbreviations =
        wsdlsem::parse_abbreviations(wsdlsem::read_file(path));
  });
}

wsdlsem_status wsdlsem_pipeline_load_stop_words(wsdlsem_pipeline* pipeline, const char* path) {
  WSDLSEM_REQUIRE(pipeline && path);
  return guarded([&] {
    pipeline->pipeline.preprocess.stop_words = wsdlsem::parse_stop_words(wsdlsem::read_file(path));
  });
}

wsdlsem_status wsdlsem_pipeline_load_overrides(wsdlsem_pipeline* pipeline, const char* path) {
  WSDLSEM_REQUIRE(pipeline && path);
  return guarded([&] {
    pipeline->pipeline.overrides =
        wsdlsem::parse_overrides(wsdlsem::read_file(path), pipeline->pipeline.lexicon.ontology());
  });
}

wsdlsem_status wsdlsem_pipeline_set_stages(wsdlsem_pipeline* pipeline, unsigned stage_mask) {
  WSDLSEM_REQUIRE(pipeline);
  WSDLSEM_REQUIRE((stage_mask & ~WSDLSEM_STAGE_ALL) == 0);
  auto& p = pipeline->pipeline;
  p.preprocess.stages = wsdlsem::StageSet{(stage_mask & WSDLSEM_STAGE_DECOMPOSE) != 0,
                                          (stage_mask & WSDLSEM_STAGE_NORMALIZE) != 0,
                                          (stage_mask & WSDLSEM_STAGE_FILTER) != 0};
  p.explorer.type_name_enabled = (stage_mask & WSDLSEM_STAGE_TYPE_EXPLORER) != 0;
  p.explorer.type_explorer_enabled = p.explorer.type_name_enabled;
  return WSDLSEM_OK;
}

wsdlsem_status wsdlsem_pipeline_set_max_depth(wsdlsem_pipeline* pipeline, int max_depth) {
  WSDLSEM_REQUIRE(pipeline);
  WSDLSEM_REQUIRE(max_depth >= 0);
  pipeline->pipeline.explorer.max_depth = max_depth;
  return WSDLSEM_OK;
}

wsdlsem_status wsdlsem_pipeline_set_uri_prefix(wsdlsem_pipeline* pipeline,
                                               const char* uri_prefix) {
  WSDLSEM_REQUIRE(pipeline && uri_prefix);
  return guarded([&] {
    wsdlsem::WriterConfig cfg = pipeline->writer;
    cfg.uri_prefix = uri_prefix;
    wsdlsem::validate(cfg);
    pipeline->writer = std::move(cfg);
  });
}

wsdlsem_status wsdlsem_pipeline_preprocess(const wsdlsem_pipeline* pipeline,
                                           const char* identifier, char** words) {
  WSDLSEM_REQUIRE(pipeline && identifier && words);
  *words = nullptr;
  return guarded([&] {
    std::string joined;
    for (const auto& w : wsdlsem::preprocess(identifier, pipeline->pipeline.preprocess)) {
      if (!joined.empty()) joined += ' ';
      joined += w.text();
    }
    *words = duplicate(joined);
  });
}

wsdlsem_status wsdlsem_corpus_load(const char* const* paths, size_t count, unsigned jobs,
                                   wsdlsem_corpus** out) {
  WSDLSEM_REQUIRE(out);
  *out = nullptr;
  WSDLSEM_REQUIRE(paths || count == 0);
  WSDLSEM_REQUIRE(jobs >= 1);
  for (size_t i = 0; i < count; ++i) WSDLSEM_REQUIRE(paths[i]);
  return guarded([&] {
    std::vector<std::filesystem::path> list(paths, paths + count);
    auto handle = std::make_unique<wsdlsem_corpus>();
    handle->corpus = wsdlsem::load_corpus(list, jobs);
    *out = handle.release();
  });
}

void wsdlsem_corpus_destroy(wsdlsem_corpus* corpus) { delete corpus; }

size_t wsdlsem_corpus_description_count(const wsdlsem_corpus* corpus) {
  return corpus ? corpus->corpus.descriptions.size() : 0;
}

const char* wsdlsem_corpus_source_id(const wsdlsem_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->corpus.descriptions.size()) return nullptr;
  return corpus->corpus.descriptions[index].source_id.c_str();
}

size_t wsdlsem_corpus_parameter_count(const wsdlsem_corpus* corpus) {
  return corpus ? corpus->corpus.parameter_count() : 0;
}

size_t wsdlsem_corpus_skipped_count(const wsdlsem_corpus* corpus) {
  return corpus ? corpus->corpus.skipped.size() : 0;
}

const char* wsdlsem_corpus_skipped_path(const wsdlsem_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->corpus.skipped.size()) return nullptr;
  return corpus->corpus.skipped[index].path.c_str();
}

const char* wsdlsem_corpus_skipped_message(const wsdlsem_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->corpus.skipped.size()) return nullptr;
  return corpus->corpus.skipped[index].message.c_str();
}

wsdlsem_status wsdlsem_annotate(const wsdlsem_pipeline* pipeline, const wsdlsem_corpus* corpus,
                                unsigned jobs, wsdlsem_run** out) {
  WSDLSEM_REQUIRE(out);
  *out = nullptr;
  WSDLSEM_REQUIRE(pipeline && corpus && jobs >= 1);
  return guarded([&] {
    const wsdlsem::Corpus& c = corpus->corpus;
    auto annotations = wsdlsem::annotate_corpus(c, pipeline->pipeline.context(), jobs);
    auto run = std::make_unique<wsdlsem_run>();
    run->sawsdl.resize(c.descriptions.size());
    for (std::size_t i = 0; i < c.descriptions.size(); ++i) {
      const auto& desc = c.descriptions[i];
      run->sawsdl[i] = wsdlsem::write_sawsdl(c.raw_documents.at(desc.source_id), desc,
                                             annotations[i], pipeline->writer);
      for (const auto& a : annotations[i]) {
        ++run->total;
        if (a.annotated()) ++run->annotated;
      }
    }
    run->report = wsdlsem::write_report(c, annotations, pipeline->writer);
    *out = run.release();
  });
}

void wsdlsem_run_destroy(wsdlsem_run* run) { delete run; }

size_t wsdlsem_run_total(const wsdlsem_run* run) { return run ? run->total : 0; }

size_t wsdlsem_run_annotated(const wsdlsem_run* run) { return run ? run->annotated : 0; }

wsdlsem_status wsdlsem_run_sawsdl(const wsdlsem_run* run, size_t index, const char** data,
                                  size_t* size) {
  WSDLSEM_REQUIRE(run && data && size);
  WSDLSEM_REQUIRE(index < run->sawsdl.size());
  *data = run->sawsdl[index].data();
  *size = run->sawsdl[index].size();
  return WSDLSEM_OK;
}

wsdlsem_status wsdlsem_run_report(const wsdlsem_run* run, const char** data, size_t* size) {
  WSDLSEM_REQUIRE(run && data && size);
  *data = run->report.data();
  *size = run->report.size();
  return WSDLSEM_OK;
}

wsdlsem_status wsdlsem_ablate(const wsdlsem_pipeline* pipeline, const wsdlsem_corpus* corpus,
                              unsigned jobs, char** json, char** table) {
  WSDLSEM_REQUIRE(pipeline && corpus && jobs >= 1 && json && table);
  *json = nullptr;
  *table = nullptr;
  return guarded([&] {
    auto report = wsdlsem::run_ablation(corpus->corpus, pipeline->pipeline, jobs);
    char* j = duplicate(wsdlsem::ablation_json(report));
    try {
      *table = duplicate(wsdlsem::ablation_table(report));
    } catch (...) {
      std::free(j);
      throw;
    }
    *json = j;
  });
}

wsdlsem_status wsdlsem_word_frequency(const wsdlsem_pipeline* pipeline,
                                      const wsdlsem_corpus* corpus, unsigned jobs, char** csv) {
  WSDLSEM_REQUIRE(pipeline && corpus && jobs >= 1 && csv);
  *csv = nullptr;
  return guarded([&] {
    *csv = duplicate(wsdlsem::word_frequency_csv(
        wsdlsem::word_frequency(corpus->corpus, pipeline->pipeline, jobs)));
  });
}

}  // extern "C"
