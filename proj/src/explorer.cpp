#include "wsdlsem/explorer.hpp"

#include <set>
#include <string>

namespace wsdlsem {

namespace {

struct Candidate {
  const std::string* name;
  const std::vector<std::string>* path;
};

struct Member {
  const SubParameter* sub;
  std::vector<std::string> path;
};

class Search {
 public:
  Search(const WsDescription& desc, const AnnotationContext& ctx, ParameterSearch& out)
      : desc_(desc), ctx_(ctx), out_(out) {}

  // Pools the hits of every candidate name. True when at least one concept
  // was found, in which case the search is over.
  bool attempt(const std::vector<Candidate>& names, SourceKind source, int depth) {
    for (const auto& c : names) {
      if (c.name->empty()) continue;
      std::vector<Word> words = preprocess(*c.name, ctx_.preprocess);
      out_.words_seen.insert(out_.words_seen.end(), words.begin(), words.end());
      for (auto& [word, hit] : associate_words(words, ctx_.lexicon, ctx_.overrides)) {
        out_.annotation.entries.push_back(
            AnnotationEntry{std::move(hit), std::move(word), source, *c.path, depth});
      }
    }
    return out_.annotation.annotated();
  }

  const TypeDefinition* sequence_type(const QName& ref) const {
    auto it = desc_.types.find(ref);
    if (it == desc_.types.end() || it->second.kind != TypeKind::ComplexSequence) return nullptr;
    return &it->second;
  }

  const TypeDefinition* named_type(const QName& ref) const {
    if (is_builtin(ref)) return nullptr;
    auto it = desc_.types.find(ref);
    if (it == desc_.types.end() || !it->second.has_custom_name()) return nullptr;
    return &it->second;
  }

  void run(const Parameter& param) {
    static const std::vector<std::string> kRootPath;
    if (attempt({Candidate{&param.name, &kRootPath}}, SourceKind::ParameterName, 0)) return;

    const ExplorerConfig& cfg = ctx_.explorer;
    if (cfg.type_name_enabled) {
      if (const TypeDefinition* t = named_type(param.type_ref)) {
        if (attempt({Candidate{&t->name.local_name, &kRootPath}}, SourceKind::TypeName, 0))
          return;
      }
    }
    if (!cfg.type_explorer_enabled) return;

    std::set<QName> visited{param.type_ref};
    std::vector<Member> frontier;
    if (const TypeDefinition* root = sequence_type(param.type_ref)) {
      for (const auto& sub : root->subparameters) frontier.push_back(Member{&sub, {sub.name}});
    }

    for (int depth = 1; !frontier.empty() && depth <= cfg.max_depth; ++depth) {
      std::vector<Candidate> names;
      for (const auto& m : frontier) names.push_back(Candidate{&m.sub->name, &m.path});
      if (attempt(names, SourceKind::SubParameterName, depth)) return;

      std::vector<Candidate> type_names;
      for (const auto& m : frontier) {
        if (const TypeDefinition* t = named_type(m.sub->type_ref))
          type_names.push_back(Candidate{&t->name.local_name, &m.path});
      }
      if (attempt(type_names, SourceKind::SubParameterTypeName, depth)) return;

      std::vector<Member> next;
      for (const auto& m : frontier) {
        const TypeDefinition* t = sequence_type(m.sub->type_ref);
        if (!t || !visited.insert(t->name).second) continue;
        for (const auto& sub : t->subparameters) {
          std::vector<std::string> path = m.path;
          path.push_back(sub.name);
          next.push_back(Member{&sub, std::move(path)});
        }
      }
      frontier = std::move(next);
    }
  }

 private:
  const WsDescription& desc_;
  const AnnotationContext& ctx_;
  ParameterSearch& out_;
};

}  // namespace

ParameterSearch search_parameter(const Parameter& param, const WsDescription& desc,
                                 const AnnotationContext& ctx) {
  ParameterSearch out;
  out.annotation.param_id = param.param_id;
  Search(desc, ctx, out).run(param);
  return out;
}

Annotation annotate_parameter(const Parameter& param, const WsDescription& desc,
                              const AnnotationContext& ctx) {
  return search_parameter(param, desc, ctx).annotation;
}

std::vector<Annotation> annotate_description(const WsDescription& desc,
                                             const AnnotationContext& ctx) {
  std::vector<Annotation> out;
  out.reserve(desc.parameter_count());
  for (const Parameter* p : desc.parameters()) out.push_back(annotate_parameter(*p, desc, ctx));
  return out;
}

}  // namespace wsdlsem
