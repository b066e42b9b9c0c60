#include "wsdlsem/ingest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "xml.hpp"

namespace wsdlsem {

namespace {

const QName kAnyType{std::string(kXsdNamespace), "anyType"};

bool in_schema_ns(const xml::Element& e) {
  return is_builtin(QName{e.name.namespace_uri, "string"});
}

bool is_xsd(const xml::Element& e, std::string_view local) {
  return e.name.local_name == local && in_schema_ns(e);
}

bool is_wsdl(const xml::Element& e, std::string_view local) {
  return e.is(kWsdlNamespace, local);
}

std::string attr_or_empty(const xml::Element& e, std::string_view local) {
  const std::string* v = e.attribute(local);
  return v ? *v : std::string();
}

std::string file_name_of(std::string_view location) {
  auto cut = location.find_first_of("?#");
  if (cut != std::string_view::npos) location = location.substr(0, cut);
  auto slash = location.find_last_of("/\\");
  if (slash != std::string_view::npos) location = location.substr(slash + 1);
  return std::string(location);
}

enum class RootKind { Wsdl, Schema, Other };

RootKind root_kind(const xml::Document& doc) {
  if (is_wsdl(*doc.root, "definitions")) return RootKind::Wsdl;
  if (is_xsd(*doc.root, "schema")) return RootKind::Schema;
  return RootKind::Other;
}

class DescriptionBuilder {
 public:
  DescriptionBuilder(std::string source_id, const ExternalSchemas* externals)
      : externals_(externals) {
    desc_.source_id = std::move(source_id);
  }

  WsDescription build(const xml::Document& doc) {
    const xml::Element& defs = *doc.root;
    target_ns_ = attr_or_empty(defs, "targetNamespace");

    for (const auto& child : defs.children) {
      if (!is_wsdl(*child, "types")) continue;
      for (const auto& schema : child->children)
        if (is_xsd(*schema, "schema")) add_schema(*schema, nullptr);
    }
    index_globals();
    build_types();

    for (const auto& child : defs.children) {
      if (is_wsdl(*child, "message")) {
        std::string name = attr_or_empty(*child, "name");
        if (!name.empty()) messages_.emplace(QName{target_ns_, name}, child.get());
      }
    }
    for (const auto& child : defs.children)
      if (is_wsdl(*child, "portType")) add_port_type(*child);

    return std::move(desc_);
  }

 private:
  struct SchemaSource {
    const xml::Element* schema;
    std::string target_ns;
  };

  void add_schema(const xml::Element& schema, const std::string* chameleon_ns) {
    const std::string* tns = schema.attribute("targetNamespace");
    std::string ns = tns ? *tns : (chameleon_ns ? *chameleon_ns : std::string());
    schemas_.push_back(SchemaSource{&schema, ns});
    for (const auto& child : schema.children) {
      bool include = is_xsd(*child, "include");
      if (!include && !is_xsd(*child, "import")) continue;
      const std::string* location = child->attribute("schemaLocation");
      if (location) load_external(*location, include ? &ns : nullptr);
    }
  }

  // Unresolvable locations are ignored; their types end up Unknown.
  void load_external(const std::string& location, const std::string* chameleon_ns) {
    if (!externals_) return;
    std::string key = file_name_of(location);
    if (!loaded_.insert(key).second) return;
    auto it = externals_->find(key);
    if (it == externals_->end()) return;
    try {
      external_docs_.push_back(xml::parse(it->second));
    } catch (const Error& e) {
      desc_.warnings.push_back("schema " + key + " could not be parsed: " + e.what());
      return;
    }
    const xml::Element& root = *external_docs_.back().root;
    if (is_xsd(root, "schema")) {
      add_schema(root, chameleon_ns);
    } else if (is_wsdl(root, "definitions")) {
      for (const auto& child : root.children) {
        if (!is_wsdl(*child, "types")) continue;
        for (const auto& schema : child->children)
          if (is_xsd(*schema, "schema")) add_schema(*schema, nullptr);
      }
    }
  }

  void index_globals() {
    for (const auto& src : schemas_) {
      for (const auto& child : src.schema->children) {
        std::string name = attr_or_empty(*child, "name");
        if (name.empty()) continue;
        QName q{src.target_ns, name};
        if (is_xsd(*child, "element")) {
          global_elements_.emplace(q, Located{child.get(), &src.target_ns});
        } else if (is_xsd(*child, "complexType") || is_xsd(*child, "simpleType")) {
          named_types_.emplace(q, Located{child.get(), &src.target_ns});
        }
      }
    }
  }

  void build_types() {
    for (const auto& [name, located] : named_types_) {
      TypeDefinition def = is_xsd(*located.node, "simpleType")
                               ? TypeDefinition{name, TypeKind::CustomSimple, false, {}}
                               : build_complex(*located.node, name, false, *located.ns);
      desc_.types.emplace(name, std::move(def));
    }
    for (const auto& [name, located] : global_elements_) global_element_type(name);
  }

  QName qname_attr(const xml::Element& e, std::string_view attr) {
    const std::string* raw = e.attribute(attr);
    if (!raw) return kAnyType;
    if (auto q = e.resolve_qname(*raw)) return *q;
    return QName{"", *raw};
  }

  QName element_type(const xml::Element& el, const std::string& ns) {
    if (el.attribute("type")) return qname_attr(el, "type");
    for (const auto& child : el.children) {
      if (is_xsd(*child, "complexType") || is_xsd(*child, "simpleType")) {
        QName anon = allocate_anonymous(ns);
        add_anonymous(*child, anon, ns);
        return anon;
      }
    }
    return kAnyType;
  }

  QName allocate_anonymous(const std::string& ns) {
    return QName{ns, "#anonymous" + std::to_string(++anonymous_count_)};
  }

  void add_anonymous(const xml::Element& type_node, const QName& name, const std::string& ns) {
    TypeDefinition def = is_xsd(type_node, "simpleType")
                             ? TypeDefinition{name, TypeKind::CustomSimple, true, {}}
                             : build_complex(type_node, name, true, ns);
    desc_.types.emplace(name, std::move(def));
  }

  // Elements that are never found keep their own QName as type reference,
  // which resolves to Unknown unless a same-named type exists.
  QName global_element_type(const QName& element) {
    if (auto it = element_types_.find(element); it != element_types_.end()) return it->second;
    auto found = global_elements_.find(element);
    if (found == global_elements_.end()) return element;
    const xml::Element& el = *found->second.node;
    const std::string& ns = *found->second.ns;
    if (el.attribute("type")) {
      QName t = qname_attr(el, "type");
      element_types_.emplace(element, t);
      return t;
    }
    for (const auto& child : el.children) {
      if (is_xsd(*child, "complexType") || is_xsd(*child, "simpleType")) {
        // Register before descending so self-references terminate.
        QName anon = allocate_anonymous(ns);
        element_types_.emplace(element, anon);
        add_anonymous(*child, anon, ns);
        return anon;
      }
    }
    element_types_.emplace(element, kAnyType);
    return kAnyType;
  }

  TypeDefinition build_complex(const xml::Element& node, const QName& name, bool anonymous,
                               const std::string& ns) {
    TypeDefinition def{name, TypeKind::EmptyComplex, anonymous, {}};
    for (const auto& child : node.children) {
      const xml::Element& c = *child;
      if (!in_schema_ns(c)) continue;
      const std::string& local = c.name.local_name;
      if (local == "annotation" || local == "attribute" || local == "attributeGroup" ||
          local == "anyAttribute")
        continue;
      if (local == "sequence") {
        bool has_content = false;
        collect_sequence(c, ns, def.subparameters, has_content);
        if (!def.subparameters.empty())
          def.kind = TypeKind::ComplexSequence;
        else
          def.kind = has_content ? TypeKind::ComplexOther : TypeKind::EmptyComplex;
      } else {
        // choice, all, group, complexContent, simpleContent
        def.kind = TypeKind::ComplexOther;
      }
      break;
    }
    return def;
  }

  void collect_sequence(const xml::Element& seq, const std::string& ns,
                        std::vector<SubParameter>& out, bool& has_content) {
    for (const auto& child : seq.children) {
      const xml::Element& c = *child;
      if (!in_schema_ns(c) || c.name.local_name == "annotation") continue;
      has_content = true;
      if (c.name.local_name == "sequence") {
        collect_sequence(c, ns, out, has_content);
      } else if (c.name.local_name == "element") {
        if (const std::string* ref = c.attribute("ref")) {
          auto q = c.resolve_qname(*ref);
          QName target = q ? *q : QName{"", *ref};
          out.push_back(SubParameter{target.local_name, global_element_type(target)});
        } else {
          out.push_back(SubParameter{attr_or_empty(c, "name"), element_type(c, ns)});
        }
      }
    }
  }

  const xml::Element* find_message(const QName& q) const {
    if (auto it = messages_.find(q); it != messages_.end()) return it->second;
    // Sloppy prefixes are common; accept a unique local-name match.
    const xml::Element* match = nullptr;
    for (const auto& [name, node] : messages_) {
      if (name.local_name != q.local_name) continue;
      if (match) return nullptr;
      match = node;
    }
    return match;
  }

  void add_port_type(const xml::Element& port_type) {
    std::string pt_name = attr_or_empty(port_type, "name");
    for (const auto& child : port_type.children) {
      if (!is_wsdl(*child, "operation")) continue;
      Operation op;
      op.port_type = pt_name;
      op.name = attr_or_empty(*child, "name");
      if (op.name.empty()) {
        desc_.warnings.push_back("portType " + pt_name + ": unnamed operation skipped");
        continue;
      }
      bool ok = true;
      for (const auto& io : child->children) {
        bool input = is_wsdl(*io, "input");
        if (!input && !is_wsdl(*io, "output")) continue;
        const std::string* msg_attr = io->attribute("message");
        if (!msg_attr) continue;
        auto msg_name = io->resolve_qname(*msg_attr);
        const xml::Element* message = msg_name ? find_message(*msg_name) : nullptr;
        if (!message) {
          desc_.warnings.push_back("portType " + pt_name + " operation " + op.name +
                                   ": message " + *msg_attr +
                                   " is not declared; operation skipped");
          ok = false;
          break;
        }
        QName message_qname{target_ns_, attr_or_empty(*message, "name")};
        auto& list = input ? op.inputs : op.outputs;
        for (const auto& part : message->children) {
          if (!is_wsdl(*part, "part")) continue;
          list.push_back(make_parameter(*part, message_qname, pt_name, op.name,
                                        input ? Direction::Input : Direction::Output));
        }
      }
      if (ok) desc_.operations.push_back(std::move(op));
    }
  }

  Parameter make_parameter(const xml::Element& part, const QName& message,
                           const std::string& port_type, const std::string& operation,
                           Direction direction) {
    Parameter p;
    p.direction = direction;
    p.declaration.message = message;
    p.declaration.part = attr_or_empty(part, "name");
    if (const std::string* el = part.attribute("element")) {
      auto q = part.resolve_qname(*el);
      QName element = q ? *q : QName{"", *el};
      p.name = element.local_name;
      p.type_ref = global_element_type(element);
      p.declaration.element = element;
    } else {
      p.name = p.declaration.part;
      p.type_ref = qname_attr(part, "type");
    }
    std::string id = desc_.source_id + "#" + port_type + "." + operation + "/" +
                     std::string(to_string(direction)) + "/" + p.name;
    std::string unique = id;
    for (int n = 2; !param_ids_.insert(unique).second; ++n) unique = id + "~" + std::to_string(n);
    p.param_id = std::move(unique);
    return p;
  }

  struct Located {
    const xml::Element* node;
    const std::string* ns;
  };

  const ExternalSchemas* externals_;
  WsDescription desc_;
  std::string target_ns_;
  std::vector<xml::Document> external_docs_;
  std::vector<SchemaSource> schemas_;
  std::set<std::string> loaded_;
  std::map<QName, Located> global_elements_;
  std::map<QName, Located> named_types_;
  std::map<QName, QName> element_types_;
  std::map<QName, const xml::Element*> messages_;
  std::set<std::string> param_ids_;
  int anonymous_count_ = 0;
};

}  // namespace

WsDescription parse_wsdl(std::string source_id, std::string_view document,
                         const ExternalSchemas* externals) {
  xml::Document doc = xml::parse(document);
  if (root_kind(doc) != RootKind::Wsdl)
    throw Error(ErrorCode::NotWsdl,
                "root element " + doc.root->name.to_string() + " is not wsdl:definitions");
  return DescriptionBuilder(std::move(source_id), externals).build(doc);
}

TypeDefinition resolve_type(const WsDescription& description, const QName& ref) {
  if (is_builtin(ref)) return TypeDefinition{ref, TypeKind::Builtin, false, {}};
  if (auto it = description.types.find(ref); it != description.types.end()) return it->second;
  return TypeDefinition{ref, TypeKind::Unknown, false, {}};
}

std::size_t Corpus::parameter_count() const {
  std::size_t n = 0;
  for (const auto& d : descriptions) n += d.parameter_count();
  return n;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "read failed for " + path.string());
  return std::move(buf).str();
}

Corpus collect_corpus(std::span<const std::filesystem::path> paths, unsigned jobs) {
  struct Slot {
    std::string bytes;
    bool readable = false;
    RootKind kind = RootKind::Other;
    std::optional<WsDescription> description;
    std::optional<SkippedFile> skipped;
  };
  std::vector<Slot> slots(paths.size());

  detail::parallel_for(paths.size(), jobs, [&](std::size_t i) {
    Slot& s = slots[i];
    try {
      s.bytes = read_file(paths[i]);
      s.readable = true;
      s.kind = root_kind(xml::parse(s.bytes));
    } catch (const Error& e) {
      s.skipped = SkippedFile{paths[i].string(), e.code(), e.what()};
    }
  });

  ExternalSchemas externals;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (slots[i].readable) externals.emplace(paths[i].filename().string(), slots[i].bytes);

  detail::parallel_for(paths.size(), jobs, [&](std::size_t i) {
    Slot& s = slots[i];
    if (s.skipped || s.kind != RootKind::Wsdl) return;
    try {
      s.description = parse_wsdl(paths[i].string(), s.bytes, &externals);
    } catch (const Error& e) {
      s.skipped = SkippedFile{paths[i].string(), e.code(), e.what()};
    }
  });

  Corpus corpus;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Slot& s = slots[i];
    std::string id = paths[i].string();
    if (s.skipped) {
      corpus.skipped.push_back(std::move(*s.skipped));
    } else if (s.kind == RootKind::Schema) {
      corpus.schema_documents.push_back(id);
      corpus.raw_documents.emplace(id, std::move(s.bytes));
    } else if (s.kind == RootKind::Other) {
      corpus.skipped.push_back(SkippedFile{id, ErrorCode::NotWsdl,
                                           "root element is neither wsdl:definitions nor "
                                           "xsd:schema"});
    } else {
      corpus.descriptions.push_back(std::move(*s.description));
      corpus.raw_documents.emplace(id, std::move(s.bytes));
    }
  }
  return corpus;
}

Corpus load_corpus(std::span<const std::filesystem::path> paths, unsigned jobs) {
  Corpus corpus = collect_corpus(paths, jobs);
  if (corpus.descriptions.empty()) {
    std::string msg = "no WSDL description could be parsed (" + std::to_string(paths.size()) +
                      " input file(s))";
    for (const auto& s : corpus.skipped) msg += "\n  " + s.path + ": " + s.message;
    throw Error(ErrorCode::EmptyCorpus, msg);
  }
  return corpus;
}

}  // namespace wsdlsem
