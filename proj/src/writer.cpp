#include "wsdlsem/writer.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "json.hpp"
#include "xml.hpp"

namespace wsdlsem {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Edit {
  std::size_t offset;
  std::size_t length;  // bytes replaced
  std::string text;
  std::size_t seq;
};

struct RawAttribute {
  std::string name;
  std::size_t value_begin;  // absolute offsets of the value, quotes excluded
  std::size_t value_end;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Lexes the attributes of a start tag. The tag was already accepted by the
// XML parser, so only the happy path needs handling.
std::vector<RawAttribute> raw_attributes(std::string_view doc, const xml::Element& el) {
  std::vector<RawAttribute> out;
  std::size_t end = el.tag_offset + el.tag_length;
  std::size_t i = el.tag_offset + 1;
  while (i < end && !is_space(doc[i]) && doc[i] != '>' && doc[i] != '/') ++i;
  while (i < end) {
    while (i < end && is_space(doc[i])) ++i;
    if (i >= end || doc[i] == '>' || doc[i] == '/') break;
    std::size_t name_begin = i;
    while (i < end && !is_space(doc[i]) && doc[i] != '=') ++i;
    std::string name(doc.substr(name_begin, i - name_begin));
    while (i < end && doc[i] != '"' && doc[i] != '\'') ++i;
    if (i >= end) break;
    char quote = doc[i++];
    std::size_t value_begin = i;
    while (i < end && doc[i] != quote) ++i;
    out.push_back(RawAttribute{std::move(name), value_begin, i});
    ++i;
  }
  return out;
}

// Position just after the last attribute (or the element name) of a start tag.
std::size_t insertion_point(std::string_view doc, const xml::Element& el) {
  std::size_t i = el.tag_offset + el.tag_length - 1;  // '>'
  if (i > el.tag_offset && doc[i - 1] == '/') --i;
  while (i > el.tag_offset && is_space(doc[i - 1])) --i;
  return i;
}

bool is_wsdl(const xml::Element& e, std::string_view local) {
  return e.is(kWsdlNamespace, local);
}

bool is_schema_element(const xml::Element& e, std::string_view local) {
  return e.name.local_name == local && is_builtin(QName{e.name.namespace_uri, "string"});
}

const xml::Element* find_part(const xml::Element& defs, const Declaration& decl) {
  const std::string* tns = defs.attribute("targetNamespace");
  if ((tns ? *tns : std::string()) != decl.message.namespace_uri) return nullptr;
  for (const auto& msg : defs.children) {
    if (!is_wsdl(*msg, "message")) continue;
    const std::string* name = msg->attribute("name");
    if (!name || *name != decl.message.local_name) continue;
    for (const auto& part : msg->children) {
      const std::string* pname = part->attribute("name");
      if (is_wsdl(*part, "part") && pname && *pname == decl.part) return part.get();
    }
  }
  return nullptr;
}

const xml::Element* find_global_element(const xml::Element& defs, const QName& element) {
  for (const auto& types : defs.children) {
    if (!is_wsdl(*types, "types")) continue;
    for (const auto& schema : types->children) {
      if (!is_schema_element(*schema, "schema")) continue;
      const std::string* tns = schema->attribute("targetNamespace");
      if ((tns ? *tns : std::string()) != element.namespace_uri) continue;
      for (const auto& child : schema->children) {
        const std::string* name = child->attribute("name");
        if (is_schema_element(*child, "element") && name && *name == element.local_name)
          return child.get();
      }
    }
  }
  return nullptr;
}

bool same_shape(const WsDescription& a, const WsDescription& b) {
  if (a.operations.size() != b.operations.size()) return false;
  auto same_params = [](const std::vector<Parameter>& x, const std::vector<Parameter>& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                      [](const Parameter& p, const Parameter& q) {
                        return p.param_id == q.param_id && p.name == q.name &&
                               p.direction == q.direction && p.declaration == q.declaration;
                      });
  };
  for (std::size_t i = 0; i < a.operations.size(); ++i) {
    const auto& x = a.operations[i];
    const auto& y = b.operations[i];
    if (x.port_type != y.port_type || x.name != y.name || !same_params(x.inputs, y.inputs) ||
        !same_params(x.outputs, y.outputs))
      return false;
  }
  return true;
}

std::vector<std::string> split_uris(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t b = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > b) out.emplace_back(s.substr(b, i - b));
  }
  return out;
}

void append_unique(std::vector<std::string>& list, std::string uri) {
  if (std::find(list.begin(), list.end(), uri) == list.end()) list.push_back(std::move(uri));
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

bool binds_sawsdl(const xml::Element& el, const std::string& prefix) {
  auto it = el.scope->find(prefix);
  return it != el.scope->end() && it->second == kSawsdlNamespace;
}

ordered_json rate_json(const RateSummary& s) {
  ordered_json j;
  j["total"] = s.total;
  j["annotated"] = s.annotated;
  j["rate"] = s.rate();
  return j;
}

}  // namespace

double RateSummary::rate() const {
  return total == 0 ? 0.0 : static_cast<double>(annotated) / static_cast<double>(total);
}

void validate(const WriterConfig& config) {
  static const std::regex kAbsoluteUri(R"(^[A-Za-z][A-Za-z0-9+.\-]*:[^\s"<>]+$)");
  if (!std::regex_match(config.uri_prefix, kAbsoluteUri))
    throw Error(ErrorCode::MalformedConfig,
                "URI prefix '" + config.uri_prefix + "' is not an absolute URI prefix");
}

std::string write_sawsdl(std::string_view original, const WsDescription& desc,
                         std::span<const Annotation> annotations, const WriterConfig& config) {
  validate(config);
  xml::Document doc = xml::parse(original);
  const xml::Element& defs = *doc.root;
  if (!is_wsdl(defs, "definitions"))
    throw Error(ErrorCode::StructureMismatch, "document root is not wsdl:definitions");
  if (!same_shape(parse_wsdl(desc.source_id, original), desc))
    throw Error(ErrorCode::StructureMismatch,
                "description " + desc.source_id + " does not match the document");

  std::map<std::string, const Parameter*, std::less<>> by_id;
  for (const Parameter* p : desc.parameters()) by_id.emplace(p->param_id, p);

  // Targets in first-annotation order so that edits are deterministic.
  std::vector<std::pair<const xml::Element*, std::vector<std::string>>> targets;
  for (const auto& ann : annotations) {
    if (!ann.annotated()) continue;
    auto it = by_id.find(ann.param_id);
    if (it == by_id.end())
      throw Error(ErrorCode::StructureMismatch, "unknown parameter " + ann.param_id);
    const Declaration& decl = it->second->declaration;
    const xml::Element* target = nullptr;
    if (decl.element) target = find_global_element(defs, *decl.element);
    if (!target) target = find_part(defs, decl);
    if (!target)
      throw Error(ErrorCode::StructureMismatch, "declaration of " + ann.param_id + " not found");

    auto slot = std::find_if(targets.begin(), targets.end(),
                             [&](const auto& t) { return t.first == target; });
    if (slot == targets.end()) slot = targets.insert(targets.end(), {target, {}});
    for (const auto& e : ann.entries) append_unique(slot->second, config.uri_prefix + e.ontology_concept.id);
  }

  // Reuse a prefix the root already binds to the SAWSDL namespace when it is
  // in scope at every target; otherwise declare a fresh one on the root.
  std::string prefix;
  bool declare = true;
  for (const auto& [p, uri] : *defs.scope) {
    if (p.empty() || uri != kSawsdlNamespace) continue;
    bool everywhere = std::all_of(targets.begin(), targets.end(),
                                  [&](const auto& t) { return binds_sawsdl(*t.first, p); });
    if (everywhere) {
      prefix = p;
      declare = false;
      break;
    }
  }
  if (declare) {
    prefix = "sawsdl";
    for (int n = 2; doc.all_prefixes.contains(prefix); ++n) prefix = "sawsdl" + std::to_string(n);
  }

  std::vector<Edit> edits;
  std::size_t seq = 0;
  if (declare) {
    edits.push_back(Edit{insertion_point(original, defs), 0,
                         " xmlns:" + prefix + "=\"" + std::string(kSawsdlNamespace) + "\"", seq++});
  }
  for (auto& [target, uris] : targets) {
    std::optional<RawAttribute> existing;
    for (auto& raw : raw_attributes(original, *target)) {
      auto colon = raw.name.find(':');
      if (colon == std::string::npos || raw.name.substr(colon + 1) != "modelReference") continue;
      if (binds_sawsdl(*target, raw.name.substr(0, colon))) {
        existing = raw;
        break;
      }
    }
    if (existing) {
      std::vector<std::string> merged;
      for (const auto& a : target->attributes)
        if (a.name.namespace_uri == kSawsdlNamespace && a.name.local_name == "modelReference")
          merged = split_uris(a.value);
      for (auto& u : uris) append_unique(merged, std::move(u));
      edits.push_back(Edit{existing->value_begin, existing->value_end - existing->value_begin,
                           xml::escape_attribute(join(merged)), seq++});
    } else {
      edits.push_back(Edit{insertion_point(original, *target), 0,
                           " " + prefix + ":modelReference=\"" +
                               xml::escape_attribute(join(uris)) + "\"",
                           seq++});
    }
  }

  std::sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) {
    return a.offset != b.offset ? a.offset > b.offset : a.seq > b.seq;
  });
  std::string out(original);
  for (const auto& e : edits) out.replace(e.offset, e.length, e.text);
  return out;
}

std::string write_report(const Corpus& corpus, std::span<const std::vector<Annotation>> annotations,
                         const WriterConfig& config) {
  if (annotations.size() != corpus.descriptions.size())
    throw Error(ErrorCode::StructureMismatch, "one annotation list per description is required");

  RateSummary all, inputs, outputs;
  ordered_json sources = ordered_json::array();
  ordered_json records = ordered_json::array();

  for (std::size_t d = 0; d < corpus.descriptions.size(); ++d) {
    const WsDescription& desc = corpus.descriptions[d];
    std::vector<const Parameter*> params = desc.parameters();
    if (params.size() != annotations[d].size())
      throw Error(ErrorCode::StructureMismatch,
                  "annotation count does not match parameters of " + desc.source_id);

    ordered_json src;
    src["source_id"] = desc.source_id;
    src["parameters"] = params.size();
    src["warnings"] = desc.warnings;
    sources.push_back(std::move(src));

    for (std::size_t i = 0; i < params.size(); ++i) {
      const Parameter& p = *params[i];
      const Annotation& a = annotations[d][i];
      if (a.param_id != p.param_id)
        throw Error(ErrorCode::StructureMismatch, "annotation order does not match parameters");
      RateSummary& side = p.direction == Direction::Input ? inputs : outputs;
      ++all.total;
      ++side.total;
      if (a.annotated()) {
        ++all.annotated;
        ++side.annotated;
      }

      ordered_json rec;
      rec["param_id"] = p.param_id;
      rec["direction"] = to_string(p.direction);
      rec["status"] = a.annotated() ? "annotated" : "failed";
      ordered_json entries = ordered_json::array();
      for (const auto& e : a.entries) {
        ordered_json entry;
        entry["concept"] = e.ontology_concept.id;
        entry["word"] = e.word.text();
        entry["source"] = to_string(e.source);
        entry["path"] = e.path;
        entry["depth"] = e.depth;
        entries.push_back(std::move(entry));
      }
      rec["entries"] = std::move(entries);
      records.push_back(std::move(rec));
    }
  }

  ordered_json skipped = ordered_json::array();
  for (const auto& s : corpus.skipped) {
    ordered_json j;
    j["path"] = s.path;
    j["error"] = to_string(s.code);
    j["message"] = s.message;
    skipped.push_back(std::move(j));
  }

  ordered_json report;
  ordered_json summary = rate_json(all);
  summary["inputs"] = rate_json(inputs);
  summary["outputs"] = rate_json(outputs);
  summary["counting"] = "per-occurrence";
  report["summary"] = std::move(summary);
  report["uri_prefix"] = config.uri_prefix;
  report["sources"] = std::move(sources);
  report["skipped"] = std::move(skipped);
  report["parameters"] = std::move(records);

  std::string out = config.report_pretty
                        ? report.dump(2, ' ', false, ordered_json::error_handler_t::replace)
                        : report.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
  out += '\n';
  return out;
}

}  // namespace wsdlsem
