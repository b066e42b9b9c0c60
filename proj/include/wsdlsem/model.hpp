#pragma once

// In-memory description of a parsed WSDL document and of the annotations
// produced for its parameters. No I/O lives here.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wsdlsem {

inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema";
inline constexpr std::string_view kWsdlNamespace = "http://schemas.xmlsoap.org/wsdl/";
inline constexpr std::string_view kSawsdlNamespace = "http://www.w3.org/ns/sawsdl";

struct QName {
  std::string namespace_uri;
  std::string local_name;

  auto operator<=>(const QName&) const = default;
  bool operator==(const QName&) const = default;

  std::string to_string() const;  // "{ns}local" (Clark notation)
};

// True iff `name` is one of the XML Schema Part 2 primitive or derived
// builtin datatypes (plus anyType) in an XML Schema namespace.
bool is_builtin(const QName& name);

enum class Direction : std::uint8_t { Input, Output };
std::string_view to_string(Direction d);

// Where a parameter was declared in the source document. Message parts are
// always known; `element` is set for parts using the `element=` style.
struct Declaration {
  QName message;
  std::string part;
  std::optional<QName> element;

  bool operator==(const Declaration&) const = default;
};

struct Parameter {
  std::string name;
  Direction direction = Direction::Input;
  QName type_ref;
  std::string param_id;
  Declaration declaration;

  bool operator==(const Parameter&) const = default;
};

struct Operation {
  std::string port_type;
  std::string name;
  std::vector<Parameter> inputs;
  std::vector<Parameter> outputs;

  bool operator==(const Operation&) const = default;
};

enum class TypeKind : std::uint8_t {
  Builtin,
  CustomSimple,
  ComplexSequence,
  ComplexOther,
  EmptyComplex,
  Unknown,
};
std::string_view to_string(TypeKind k);

struct SubParameter {
  std::string name;  // empty for an unnamed element
  QName type_ref;

  bool operator==(const SubParameter&) const = default;
};

struct TypeDefinition {
  QName name;
  TypeKind kind = TypeKind::Unknown;
  // Inline types declared inside an element have a synthesized name that
  // carries no meaning and is never fed to the preprocessor.
  bool anonymous = false;
  std::vector<SubParameter> subparameters;

  bool operator==(const TypeDefinition&) const = default;

  // Custom types have a user-chosen name worth mining for words.
  bool has_custom_name() const {
    return !anonymous && kind != TypeKind::Builtin && kind != TypeKind::Unknown;
  }
};

struct WsDescription {
  std::string source_id;
  std::vector<Operation> operations;
  std::map<QName, TypeDefinition> types;
  std::vector<std::string> warnings;

  bool operator==(const WsDescription&) const = default;

  // Document order: operations in order, inputs before outputs.
  std::vector<const Parameter*> parameters() const;
  std::size_t parameter_count() const;
};

// Throws std::invalid_argument when `text` is not a non-empty run of
// lowercase ASCII letters.
class Word {
 public:
  explicit Word(std::string text);

  static bool is_valid(std::string_view text);

  const std::string& text() const { return text_; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::string text_;
};

struct Concept {
  std::string id;
  std::string ontology;

  auto operator<=>(const Concept&) const = default;
  bool operator==(const Concept&) const = default;
};

enum class SourceKind : std::uint8_t {
  ParameterName,
  TypeName,
  SubParameterName,
  SubParameterTypeName,
};
std::string_view to_string(SourceKind s);

struct AnnotationEntry {
  Concept ontology_concept;
  Word word;
  SourceKind source = SourceKind::ParameterName;
  std::vector<std::string> path;
  int depth = 0;

  bool operator==(const AnnotationEntry&) const = default;
};

struct Annotation {
  std::string param_id;
  std::vector<AnnotationEntry> entries;

  bool annotated() const { return !entries.empty(); }
  bool operator==(const Annotation&) const = default;
};

}  // namespace wsdlsem
