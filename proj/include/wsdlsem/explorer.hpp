#pragma once

// Parameter annotation search. The parameter name is tried first; when it
// yields no concept, the custom type name is tried, then the structure of
// sequence-typed parameters is explored level by level: all subparameter
// names of a level, then all their custom type names, then the next level.
// The search stops at the first step that produces at least one concept.

#include <vector>

#include "wsdlsem/lexicon.hpp"
#include "wsdlsem/model.hpp"
#include "wsdlsem/preprocess.hpp"

namespace wsdlsem {

struct ExplorerConfig {
  int max_depth = 8;
  bool type_name_enabled = true;      // depth-0 type-name step
  bool type_explorer_enabled = true;  // structural descent
};

// Everything a search reads. All members are shared read-only across
// concurrent searches.
struct AnnotationContext {
  const PreprocessConfig& preprocess;
  const Lexicon& lexicon;
  const OverrideMap& overrides;
  ExplorerConfig explorer;
};

struct ParameterSearch {
  Annotation annotation;
  // Every word the preprocessor produced during the search, in order.
  std::vector<Word> words_seen;
};

ParameterSearch search_parameter(const Parameter& param, const WsDescription& desc,
                                 const AnnotationContext& ctx);

Annotation annotate_parameter(const Parameter& param, const WsDescription& desc,
                              const AnnotationContext& ctx);

// One annotation per parameter, in document order.
std::vector<Annotation> annotate_description(const WsDescription& desc,
                                             const AnnotationContext& ctx);

}  // namespace wsdlsem
