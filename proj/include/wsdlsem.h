/*
 * wsdlsem C API.
 *
 * Opaque handles wrap the C++ pipeline. Every fallible call returns a
 * wsdlsem_status; on failure, wsdlsem_last_error() returns a message that
 * stays valid until the next API call on the same thread. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * wsdlsem_free(). Pointers returned by accessor functions are owned by the
 * handle they came from.
 *
 * Handles are immutable once configured: a pipeline and a corpus may be
 * shared by concurrent annotate/ablate calls as long as no setter runs at
 * the same time.
 */
#ifndef WSDLSEM_H
#define WSDLSEM_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef WSDLSEM_BUILDING
#    define WSDLSEM_API __declspec(dllexport)
#  else
#    define WSDLSEM_API __declspec(dllimport)
#  endif
#else
#  define WSDLSEM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wsdlsem_status {
  WSDLSEM_OK = 0,
  WSDLSEM_ERR_INVALID_ARGUMENT = 1,
  WSDLSEM_ERR_IO = 2,
  WSDLSEM_ERR_MALFORMED_XML = 3,
  WSDLSEM_ERR_NOT_WSDL = 4,
  WSDLSEM_ERR_EMPTY_CORPUS = 5,
  WSDLSEM_ERR_MALFORMED_LEXICON = 6,
  WSDLSEM_ERR_DUPLICATE_SENSE = 7,
  WSDLSEM_ERR_NONCONTIGUOUS_RANKS = 8,
  WSDLSEM_ERR_MALFORMED_CONFIG = 9,
  WSDLSEM_ERR_STRUCTURE_MISMATCH = 10,
  WSDLSEM_ERR_INTERNAL = 99
} wsdlsem_status;

/* Stage bits for wsdlsem_pipeline_set_stages. TYPE_EXPLORER enables both the
 * type-name lookup and the structural descent. */
#define WSDLSEM_STAGE_DECOMPOSE 0x1u
#define WSDLSEM_STAGE_NORMALIZE 0x2u
#define WSDLSEM_STAGE_FILTER 0x4u
#define WSDLSEM_STAGE_TYPE_EXPLORER 0x8u
#define WSDLSEM_STAGE_ALL 0xFu

typedef struct wsdlsem_pipeline wsdlsem_pipeline;
typedef struct wsdlsem_corpus wsdlsem_corpus;
typedef struct wsdlsem_run wsdlsem_run;

WSDLSEM_API const char* wsdlsem_last_error(void);
WSDLSEM_API const char* wsdlsem_status_name(wsdlsem_status status);
WSDLSEM_API void wsdlsem_free(char* text);

/* Pipeline: lexicon, preprocessing configuration, explorer and writer
 * settings. A new pipeline has an empty lexicon, no abbreviations, no
 * stop-words, all stages enabled, max depth 8 and the SUMO URI prefix. */
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_create(wsdlsem_pipeline** out);
WSDLSEM_API void wsdlsem_pipeline_destroy(wsdlsem_pipeline* pipeline);

/* ontology_tag may be NULL for "SUMO". */
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_load_lexicon(wsdlsem_pipeline* pipeline,
                                                         const char* path,
                                                         const char* ontology_tag);
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_load_abbreviations(wsdlsem_pipeline* pipeline,
                                                               const char* path);
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_load_stop_words(wsdlsem_pipeline* pipeline,
                                                            const char* path);
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_load_overrides(wsdlsem_pipeline* pipeline,
                                                           const char* path);
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_set_stages(wsdlsem_pipeline* pipeline,
                                                       unsigned stage_mask);
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_set_max_depth(wsdlsem_pipeline* pipeline,
                                                          int max_depth);
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_set_uri_prefix(wsdlsem_pipeline* pipeline,
                                                           const char* uri_prefix);

/* Preprocesses one identifier; *words receives the space-separated words. */
WSDLSEM_API wsdlsem_status wsdlsem_pipeline_preprocess(const wsdlsem_pipeline* pipeline,
                                                       const char* identifier, char** words);

/* Corpus: parses every file. Unparseable files are skipped and listed, not
 * fatal. Fails with WSDLSEM_ERR_EMPTY_CORPUS when nothing parsed. */
WSDLSEM_API wsdlsem_status wsdlsem_corpus_load(const char* const* paths, size_t count,
                                               unsigned jobs, wsdlsem_corpus** out);
WSDLSEM_API void wsdlsem_corpus_destroy(wsdlsem_corpus* corpus);
WSDLSEM_API size_t wsdlsem_corpus_description_count(const wsdlsem_corpus* corpus);
WSDLSEM_API const char* wsdlsem_corpus_source_id(const wsdlsem_corpus* corpus, size_t index);
WSDLSEM_API size_t wsdlsem_corpus_parameter_count(const wsdlsem_corpus* corpus);
WSDLSEM_API size_t wsdlsem_corpus_skipped_count(const wsdlsem_corpus* corpus);
WSDLSEM_API const char* wsdlsem_corpus_skipped_path(const wsdlsem_corpus* corpus, size_t index);
WSDLSEM_API const char* wsdlsem_corpus_skipped_message(const wsdlsem_corpus* corpus,
                                                       size_t index);

/* Annotation run: annotations, SAWSDL documents and the JSON report. */
WSDLSEM_API wsdlsem_status wsdlsem_annotate(const wsdlsem_pipeline* pipeline,
                                            const wsdlsem_corpus* corpus, unsigned jobs,
                                            wsdlsem_run** out);
WSDLSEM_API void wsdlsem_run_destroy(wsdlsem_run* run);
WSDLSEM_API size_t wsdlsem_run_total(const wsdlsem_run* run);
WSDLSEM_API size_t wsdlsem_run_annotated(const wsdlsem_run* run);
/* SAWSDL output for corpus description `index`; bytes owned by the run. */
WSDLSEM_API wsdlsem_status wsdlsem_run_sawsdl(const wsdlsem_run* run, size_t index,
                                              const char** data, size_t* size);
WSDLSEM_API wsdlsem_status wsdlsem_run_report(const wsdlsem_run* run, const char** data,
                                              size_t* size);

/* Cumulative five-stage ablation: JSON document and aligned text table. */
WSDLSEM_API wsdlsem_status wsdlsem_ablate(const wsdlsem_pipeline* pipeline,
                                          const wsdlsem_corpus* corpus, unsigned jobs,
                                          char** json, char** table);

/* Word frequencies as CSV (word,occurrences,concept). */
WSDLSEM_API wsdlsem_status wsdlsem_word_frequency(const wsdlsem_pipeline* pipeline,
                                                  const wsdlsem_corpus* corpus, unsigned jobs,
                                                  char** csv);

#ifdef __cplusplus
}
#endif

#endif /* WSDLSEM_H */
