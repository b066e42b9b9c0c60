#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsdlsem {

enum class ErrorCode {
  MalformedXml,
  NotWsdl,
  Io,
  EmptyCorpus,
  MalformedLexiconLine,
  DuplicateSense,
  NonContiguousRanks,
  MalformedConfig,
  StructureMismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Configuration file errors carry the 1-based line that failed.
class LineError : public Error {
 public:
  LineError(ErrorCode code, std::size_t line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wsdlsem
