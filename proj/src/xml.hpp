#pragma once

// Minimal namespace-aware DOM built on expat. Each element remembers the
// byte range of its start tag in the source buffer so the writer can edit
// attributes in place without reserializing the document.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsdlsem/model.hpp"

namespace wsdlsem::xml {

using NamespaceScope = std::map<std::string, std::string>;  // prefix ("" = default) -> uri

struct Attribute {
  QName name;  // unprefixed attributes have an empty namespace
  std::string value;
};

struct Element {
  QName name;
  std::vector<Attribute> attributes;
  std::vector<std::unique_ptr<Element>> children;
  std::shared_ptr<const NamespaceScope> scope;
  std::vector<std::string> declared_prefixes;  // xmlns declarations on this tag
  std::size_t tag_offset = 0;
  std::size_t tag_length = 0;

  bool is(std::string_view ns, std::string_view local) const {
    return name.namespace_uri == ns && name.local_name == local;
  }
  const std::string* attribute(std::string_view local) const;

  // Resolves a QName-valued attribute ("tns:foo" or "foo") against the
  // namespace scope of this element.
  std::optional<QName> resolve_qname(std::string_view lexical) const;
};

struct Document {
  std::unique_ptr<Element> root;
  // Every prefix declared anywhere, mapped to all URIs bound to it.
  std::map<std::string, std::vector<std::string>> all_prefixes;
};

// Throws Error(MalformedXml) on any well-formedness error.
Document parse(std::string_view bytes);

std::string escape_attribute(std::string_view value);

}  // namespace wsdlsem::xml
