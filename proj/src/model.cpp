#include "wsdlsem/model.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "wsdlsem/error.hpp"

namespace wsdlsem {

namespace {

// XML Schema Part 2 primitive and derived datatypes, plus the ur-types.
constexpr std::array<std::string_view, 47> kBuiltinTypes = {
    "anyType", "anySimpleType",
    // primitive
    "string", "boolean", "decimal", "float", "double", "duration", "dateTime", "time",
    "date", "gYearMonth", "gYear", "gMonthDay", "gDay", "gMonth", "hexBinary",
    "base64Binary", "anyURI", "QName", "NOTATION",
    // derived
    "normalizedString", "token", "language", "NMTOKEN", "NMTOKENS", "Name", "NCName",
    "ID", "IDREF", "IDREFS", "ENTITY", "ENTITIES", "integer", "nonPositiveInteger",
    "negativeInteger", "long", "int", "short", "byte", "nonNegativeInteger",
    "unsignedLong", "unsignedInt", "unsignedShort", "unsignedByte", "positiveInteger",
    "ur-type"};

// Pre-2001 drafts still show up in older service descriptions.
constexpr std::array<std::string_view, 3> kSchemaNamespaces = {
    kXsdNamespace, "http://www.w3.org/2000/10/XMLSchema", "http://www.w3.org/1999/XMLSchema"};

}  // namespace

std::string QName::to_string() const {
  if (namespace_uri.empty()) return local_name;
  return "{" + namespace_uri + "}" + local_name;
}

bool is_builtin(const QName& name) {
  if (std::find(kSchemaNamespaces.begin(), kSchemaNamespaces.end(), name.namespace_uri) ==
      kSchemaNamespaces.end())
    return false;
  return std::find(kBuiltinTypes.begin(), kBuiltinTypes.end(), name.local_name) !=
         kBuiltinTypes.end();
}

std::string_view to_string(Direction d) {
  return d == Direction::Input ? "input" : "output";
}

std::string_view to_string(TypeKind k) {
  switch (k) {
    case TypeKind::Builtin: return "Builtin";
    case TypeKind::CustomSimple: return "CustomSimple";
    case TypeKind::ComplexSequence: return "ComplexSequence";
    case TypeKind::ComplexOther: return "ComplexOther";
    case TypeKind::EmptyComplex: return "EmptyComplex";
    case TypeKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(SourceKind s) {
  switch (s) {
    case SourceKind::ParameterName: return "ParameterName";
    case SourceKind::TypeName: return "TypeName";
    case SourceKind::SubParameterName: return "SubParameterName";
    case SourceKind::SubParameterTypeName: return "SubParameterTypeName";
  }
  return "ParameterName";
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml: return "MalformedXml";
    case ErrorCode::NotWsdl: return "NotWsdl";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::MalformedLexiconLine: return "MalformedLexiconLine";
    case ErrorCode::DuplicateSense: return "DuplicateSense";
    case ErrorCode::NonContiguousRanks: return "NonContiguousRanks";
    case ErrorCode::MalformedConfig: return "MalformedConfig";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
  }
  return "Error";
}

std::vector<const Parameter*> WsDescription::parameters() const {
  std::vector<const Parameter*> out;
  out.reserve(parameter_count());
  for (const auto& op : operations) {
    for (const auto& p : op.inputs) out.push_back(&p);
    for (const auto& p : op.outputs) out.push_back(&p);
  }
  return out;
}

std::size_t WsDescription::parameter_count() const {
  std::size_t n = 0;
  for (const auto& op : operations) n += op.inputs.size() + op.outputs.size();
  return n;
}

bool Word::is_valid(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

Word::Word(std::string text) : text_(std::move(text)) {
  if (!is_valid(text_)) throw std::invalid_argument("invalid word: '" + text_ + "'");
}

}  // namespace wsdlsem
