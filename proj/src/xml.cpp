#include "xml.hpp"

#include <expat.h>

#include <climits>

#include "wsdlsem/error.hpp"

namespace wsdlsem::xml {

namespace {

constexpr char kNsSeparator = '\x1F';

QName split_name(const char* raw) {
  std::string_view s(raw);
  auto sep = s.find(kNsSeparator);
  if (sep == std::string_view::npos) return QName{"", std::string(s)};
  return QName{std::string(s.substr(0, sep)), std::string(s.substr(sep + 1))};
}

struct Builder {
  XML_Parser parser = nullptr;
  Document doc;
  std::vector<Element*> stack;
  std::shared_ptr<const NamespaceScope> base = std::make_shared<NamespaceScope>();
  std::vector<std::pair<std::string, std::string>> pending;

  const std::shared_ptr<const NamespaceScope>& current_scope() const {
    return stack.empty() ? base : stack.back()->scope;
  }

  static void on_ns_start(void* data, const XML_Char* prefix, const XML_Char* uri) {
    auto* self = static_cast<Builder*>(data);
    std::string p = prefix ? prefix : "";
    std::string u = uri ? uri : "";
    self->doc.all_prefixes[p].push_back(u);
    self->pending.emplace_back(std::move(p), std::move(u));
  }

  static void on_start(void* data, const XML_Char* name, const XML_Char** atts) {
    auto* self = static_cast<Builder*>(data);
    auto el = std::make_unique<Element>();
    el->name = split_name(name);
    for (const XML_Char** a = atts; *a; a += 2)
      el->attributes.push_back(Attribute{split_name(a[0]), a[1]});

    if (self->pending.empty()) {
      el->scope = self->current_scope();
    } else {
      auto scope = std::make_shared<NamespaceScope>(*self->current_scope());
      for (auto& [p, u] : self->pending) {
        if (u.empty())
          scope->erase(p);
        else
          (*scope)[p] = u;
        el->declared_prefixes.push_back(p);
      }
      self->pending.clear();
      el->scope = std::move(scope);
    }
    el->tag_offset = static_cast<std::size_t>(XML_GetCurrentByteIndex(self->parser));
    el->tag_length = static_cast<std::size_t>(XML_GetCurrentByteCount(self->parser));

    Element* raw = el.get();
    if (self->stack.empty())
      self->doc.root = std::move(el);
    else
      self->stack.back()->children.push_back(std::move(el));
    self->stack.push_back(raw);
  }

  static void on_end(void* data, const XML_Char*) {
    static_cast<Builder*>(data)->stack.pop_back();
  }
};

}  // namespace

const std::string* Element::attribute(std::string_view local) const {
  for (const auto& a : attributes)
    if (a.name.namespace_uri.empty() && a.name.local_name == local) return &a.value;
  return nullptr;
}

std::optional<QName> Element::resolve_qname(std::string_view lexical) const {
  while (!lexical.empty() && (lexical.front() == ' ' || lexical.front() == '\t' ||
                              lexical.front() == '\n' || lexical.front() == '\r'))
    lexical.remove_prefix(1);
  while (!lexical.empty() && (lexical.back() == ' ' || lexical.back() == '\t' ||
                              lexical.back() == '\n' || lexical.back() == '\r'))
    lexical.remove_suffix(1);
  if (lexical.empty()) return std::nullopt;

  std::string prefix;
  std::string_view local = lexical;
  if (auto colon = lexical.find(':'); colon != std::string_view::npos) {
    prefix = std::string(lexical.substr(0, colon));
    local = lexical.substr(colon + 1);
  }
  if (local.empty()) return std::nullopt;
  auto it = scope->find(prefix);
  if (it == scope->end()) {
    if (!prefix.empty()) return std::nullopt;
    return QName{"", std::string(local)};
  }
  return QName{it->second, std::string(local)};
}

Document parse(std::string_view bytes) {
  if (bytes.size() > static_cast<std::size_t>(INT_MAX))
    throw Error(ErrorCode::MalformedXml, "document too large");

  Builder b;
  b.parser = XML_ParserCreateNS(nullptr, kNsSeparator);
  if (!b.parser) throw std::bad_alloc();
  struct ParserGuard {
    XML_Parser p;
    ~ParserGuard() { XML_ParserFree(p); }
  } guard{b.parser};

  XML_SetUserData(b.parser, &b);
  XML_SetElementHandler(b.parser, &Builder::on_start, &Builder::on_end);
  XML_SetStartNamespaceDeclHandler(b.parser, &Builder::on_ns_start);

  if (XML_Parse(b.parser, bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    throw Error(ErrorCode::MalformedXml,
                std::string(XML_ErrorString(XML_GetErrorCode(b.parser))) + " at line " +
                    std::to_string(XML_GetCurrentLineNumber(b.parser)) + ", column " +
                    std::to_string(XML_GetCurrentColumnNumber(b.parser)));
  }
  if (!b.doc.root) throw Error(ErrorCode::MalformedXml, "no root element");
  return std::move(b.doc);
}

std::string escape_attribute(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace wsdlsem::xml
