#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsdlsem/error.hpp"
#include "wsdlsem/model.hpp"

namespace wsdlsem {

// Schema documents available for xsd:import / xsd:include resolution, keyed
// by file name (last path segment of the schemaLocation).
using ExternalSchemas = std::map<std::string, std::string, std::less<>>;

// Parses a WSDL 1.1 document with inline XSD schemas.
//
// Each portType operation contributes one Parameter per input/output message
// part. A part declared with `type=` is named after the part; a part declared
// with `element=` takes the element's name and type. Operations referring to
// an undeclared message are skipped and a warning is recorded on the result.
//
// Throws Error(MalformedXml) for unparseable bytes and Error(NotWsdl) when
// the root element is not wsdl:definitions.
WsDescription parse_wsdl(std::string source_id, std::string_view document,
                         const ExternalSchemas* externals = nullptr);

// Builtin refs yield a synthesized Builtin definition, refs that match
// nothing yield Unknown. Never throws.
TypeDefinition resolve_type(const WsDescription& description, const QName& ref);

struct SkippedFile {
  std::string path;
  ErrorCode code;
  std::string message;
};

struct Corpus {
  std::vector<WsDescription> descriptions;               // input order
  std::map<std::string, std::string> raw_documents;      // source_id -> bytes
  std::vector<std::string> schema_documents;             // standalone .xsd inputs
  std::vector<SkippedFile> skipped;

  std::size_t parameter_count() const;
};

// Reads and parses every path. Per-file failures land in `skipped` and never
// abort the batch. Standalone schema files are not descriptions but serve
// imports from the other files. `jobs` bounds parsing parallelism; results
// are ordered by input position regardless.
Corpus collect_corpus(std::span<const std::filesystem::path> paths, unsigned jobs = 1);

// As collect_corpus, but throws Error(EmptyCorpus) when no description parsed.
Corpus load_corpus(std::span<const std::filesystem::path> paths, unsigned jobs = 1);

// Reads a whole file; throws Error(Io).
std::string read_file(const std::filesystem::path& path);

}  // namespace wsdlsem
