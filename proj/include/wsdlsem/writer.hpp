#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsdlsem/ingest.hpp"
#include "wsdlsem/model.hpp"

namespace wsdlsem {

inline constexpr std::string_view kDefaultUriPrefix = "http://www.ontologyportal.org/SUMO.owl#";

struct WriterConfig {
  std::string uri_prefix = std::string(kDefaultUriPrefix);
  bool report_pretty = true;
};

// Throws Error(MalformedConfig) unless the prefix starts with a URI scheme
// and contains no whitespace.
void validate(const WriterConfig& config);

// Returns a copy of `original` where the declaration of every annotated
// parameter carries a sawsdl:modelReference listing its concept URIs. Only
// start tags are edited; all other bytes are copied through. A parameter
// declared with `element=` is annotated on the schema element when that
// element lives in this document, otherwise on the message part. Existing
// modelReference values are kept and extended, so rewriting is idempotent.
//
// Throws Error(StructureMismatch) when `desc` was not parsed from
// `original` or an annotation names an unknown parameter.
std::string write_sawsdl(std::string_view original, const WsDescription& desc,
                         std::span<const Annotation> annotations, const WriterConfig& config);

// JSON report: summary counts, per-source metadata, skipped files and one
// record per parameter. Byte-deterministic for a given input.
// `annotations[i]` belongs to `corpus.descriptions[i]`.
std::string write_report(const Corpus& corpus, std::span<const std::vector<Annotation>> annotations,
                         const WriterConfig& config);

struct RateSummary {
  std::size_t total = 0;
  std::size_t annotated = 0;
  double rate() const;  // 0.0 when total is 0
};

}  // namespace wsdlsem
