// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli_runner.hpp"
#include "common.hpp"
#include "generators.hpp"
#include "wsdlsem/writer.hpp"

using namespace wsdlsem;
using Clock = std::chrono::steady_clock;
using V = std::vector<std::string>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string show(const V& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + "]";
}

V words(std::string_view raw, const PreprocessConfig& cfg) { return testing::texts(preprocess(raw, cfg)); }

Outcome preprocessing_examples() {
  Outcome o;
  PreprocessConfig cfg = testing::default_pipeline().preprocess;
  auto dec = [&](const char* raw, const V& want) {
    o.expect(decompose(raw) == want, std::string(raw) + " -> " + show(decompose(raw)));
  };
  dec("WhiteMovesNext", {"White", "Moves", "Next"});
  dec("Number3Format", {"Number", "Format"});
  dec("User_name", {"User", "name"});
  auto norm = [&](const V& in, const V& want) {
    V got = testing::texts(normalize(in, cfg));
    o.expect(got == want, show(in) + " -> " + show(got));
  };
  norm({"no"}, {"number"});
  norm({"Password"}, {"password"});
  o.expect(words("Parameter", cfg).empty(), "Parameter not filtered");
  o.expect(words("Body", cfg).empty(), "Body not filtered");
  V u = words("AUsername", cfg);
  o.expect(std::set<std::string>(u.begin(), u.end()) == std::set<std::string>{"username"},
           "AUsername -> " + show(u));
  return o;
}

Outcome worked_trace() {
  Outcome o;
  V got = words("ASessionId_02", testing::default_pipeline().preprocess);
  o.expect(got == V{"session", "identity"}, "ASessionId_02 -> " + show(got));
  return o;
}

Outcome sequence_fallback() {
  Outcome o;
  Pipeline p = testing::default_pipeline();
  WsDescription d = parse_wsdl("cat", testing::kCategoryWsdl);
  const Parameter& param = *d.parameters().at(0);

  p.preprocess.stop_words.insert("category");
  Annotation a = annotate_parameter(param, d, p.context());
  o.expect(a.entries.size() == 2, "expected 2 entries with category stop-worded");
  V concept_ids;
  for (const auto& e : a.entries) {
    concept_ids.push_back(e.ontology_concept.id);
    o.expect(e.depth == 1 && e.source == SourceKind::SubParameterName, "entry not at depth 1 from names");
  }
  o.expect(concept_ids == V{"Musician", "Composer"}, "concepts " + show(concept_ids));

  p.preprocess.stop_words.erase("category");
  ParameterSearch s = search_parameter(param, d, p.context());
  o.expect(s.annotation.annotated(), "no depth-0 annotation");
  for (const auto& e : s.annotation.entries)
    o.expect(e.depth == 0 && e.source == SourceKind::ParameterName, "entry not from the parameter name");
  o.expect(testing::texts(s.words_seen) == V{"category"}, "type consulted: " + show(testing::texts(s.words_seen)));
  return o;
}

Outcome concept_lookups() {
  Outcome o;
  Pipeline p = testing::default_pipeline();
  for (auto [w, c] : {std::pair{"buffalo", "HoofedMammal"}, std::pair{"school", "EducationalProcess"},
                      std::pair{"talk", "Communication"}}) {
    auto got = associate(Word(w), p.lexicon, p.overrides);
    o.expect(got && got->id == c, std::string(w) + " -> " + (got ? got->id : "none"));
  }
  return o;
}

Outcome ablation_shape() {
  Outcome o;
  auto t0 = Clock::now();
  Corpus c = load_corpus(testing::corpus_paths());
  o.expect(c.descriptions.size() == 10, "fixture corpus is not 10 files");
  o.expect(c.parameter_count() >= 20, "fixture corpus has fewer than 20 parameters");
  AblationReport r = run_ablation(c, testing::default_pipeline());
  auto expected = oracle::ablation(c.descriptions, testing::default_oracle());
  std::ostringstream rows;
  for (std::size_t i = 0; i < 5; ++i) {
    rows << (i ? " " : "") << r.rows[i].annotated << "/" << r.rows[i].total;
    o.expect(r.rows[i].annotated == expected[i].annotated && r.rows[i].total == expected[i].total,
             "row " + std::to_string(i + 1) + " differs from the reference");
  }
  o.expect(r.rows[3].annotated <= r.rows[2].annotated, "filtering added successes on the fixture");
  o.expect(r.rows[4].annotated >= r.rows[3].annotated, "explorer lost successes on the fixture");

  gen::Rng rng(5);
  int violations = 0, mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    gen::Setup s = gen::setup(rng);
    Corpus rc = gen::corpus(rng, std::uniform_int_distribution<int>(1, 4)(rng));
    AblationReport rr = run_ablation(rc, s.pipeline);
    if (rr.rows[3].annotated > rr.rows[2].annotated || rr.rows[4].annotated < rr.rows[3].annotated)
      ++violations;
    auto ex = oracle::ablation(rc.descriptions, s.oracle);
    for (std::size_t k = 0; k < 5; ++k)
      if (ex[k].annotated != rr.rows[k].annotated) ++mismatches;
  }
  o.expect(violations == 0, std::to_string(violations) + " random corpora violate stage ordering");
  o.expect(mismatches == 0, std::to_string(mismatches) + " random rows differ from the reference");
  double secs = seconds_since(t0);
  o.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "fixture rows " + rows.str() + ", 200 random corpora";
  return o;
}

Outcome cyclic_termination() {
  Outcome o;
  auto t0 = Clock::now();
  Pipeline p = testing::default_pipeline();
  WsDescription d = parse_wsdl("tree", testing::fixture("corpus/tree.wsdl"));
  for (int depth : {8, 1000000}) {
    p.explorer.max_depth = depth;
    for (const Parameter* param : d.parameters()) {
      Annotation a = annotate_parameter(*param, d, p.context());
      o.expect(a.param_id == param->param_id, "wrong parameter id");
    }
  }
  double secs = seconds_since(t0);
  o.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome round_trip() {
  Outcome o;
  Corpus c = load_corpus(testing::corpus_paths());
  Pipeline p = testing::default_pipeline();
  auto anns = annotate_corpus(c, p.context());
  for (std::size_t i = 0; i < c.descriptions.size(); ++i) {
    const WsDescription& d = c.descriptions[i];
    std::string once = write_sawsdl(c.raw_documents.at(d.source_id), d, anns[i], {});
    WsDescription again;
    try {
      again = parse_wsdl(d.source_id, once);
    } catch (const Error& e) {
      o.expect(false, d.source_id + " does not re-parse: " + e.what());
      continue;
    }
    o.expect(again == d, d.source_id + " re-ingests differently");
    o.expect(write_sawsdl(once, d, anns[i], {}) == once, d.source_id + " second injection differs");
  }
  return o;
}

Outcome jobs_determinism() {
  Outcome o;
  testing::Scratch one, many;
  std::string corpus = (testing::fixtures() / "corpus").string();
  auto a = testing::run_cli({"annotate", "--input", corpus, "--jobs", "1", "--out", one.path().string()}, one);
  auto b = testing::run_cli({"annotate", "--input", corpus, "--jobs", "8", "--out", many.path().string()}, many);
  o.expect(a.exit_code == 0 && b.exit_code == 0, "annotate did not exit 0");
  auto sa = testing::snapshot(one.path());
  o.expect(sa.size() == 11, "expected 10 SAWSDL files and report.json");
  o.expect(sa == testing::snapshot(many.path()), "outputs differ between --jobs 1 and --jobs 8");
  return o;
}

Outcome properties() {
  Outcome o;
  constexpr int kCases = 1000;
  gen::Rng rng(9);
  int word_cases = 0, filter_cases = 0, override_cases = 0, purity_cases = 0, rate_cases = 0;

  for (int i = 0; i < kCases; ++i) {
    gen::Setup s = gen::setup(rng);
    s.pipeline.preprocess.stages = {std::bernoulli_distribution(0.5)(rng), std::bernoulli_distribution(0.5)(rng),
                                    std::bernoulli_distribution(0.5)(rng)};
    std::string raw = i % 3 ? gen::identifier(rng) : gen::noise(rng);
    for (const auto& w : preprocess(raw, s.pipeline.preprocess))
      o.expect(Word::is_valid(w.text()), "invalid word from " + raw);
    ++word_cases;

    std::vector<Word> in = preprocess(raw, PreprocessConfig{s.pipeline.preprocess.abbreviations, {}, StageSet::all()});
    auto out = filter(in, s.pipeline.preprocess);
    std::size_t j = 0;
    for (const auto& w : in)
      if (j < out.size() && out[j] == w) ++j;
    o.expect(j == out.size(), "filter output not a subsequence for " + raw);
    ++filter_cases;

    for (const auto& [word, pinned] : s.pipeline.overrides) {
      auto got = associate(Word(word), s.pipeline.lexicon, s.pipeline.overrides);
      o.expect(got && *got == pinned, "override ignored for " + word);
    }
    std::string w = gen::vocabulary()[static_cast<std::size_t>(i) % gen::vocabulary().size()];
    OverrideMap forced = s.pipeline.overrides;
    forced.insert_or_assign(w, Concept{"Forced", "SUMO"});
    auto got = associate(Word(w), s.pipeline.lexicon, forced);
    o.expect(got && got->id == "Forced", "override ignored for " + w);
    ++override_cases;

    std::size_t total = std::uniform_int_distribution<std::size_t>(0, 50)(rng);
    std::size_t hits = total ? std::uniform_int_distribution<std::size_t>(0, total)(rng) : 0;
    double rate = RateSummary{total, hits}.rate();
    o.expect(total ? rate == double(hits) / double(total) : rate == 0.0, "rate arithmetic");
    ++rate_cases;
  }
  o.expect(RateSummary{0, 0}.rate() == 0.0, "0/0 is not 0.0");

  while (purity_cases < kCases) {
    gen::Setup s = gen::setup(rng);
    Corpus c = gen::corpus(rng, 2);
    for (const auto& d : c.descriptions) {
      for (const auto& a : annotate_description(d, s.pipeline.context())) {
        ++purity_cases;
        for (const auto& e : a.entries) {
          o.expect(e.source == a.entries[0].source && e.depth == a.entries[0].depth, "mixed levels");
          o.expect(e.depth == static_cast<int>(e.path.size()), "depth differs from path length");
        }
      }
    }
    AblationReport r = run_ablation(c, s.pipeline);
    for (const auto& row : r.rows)
      o.expect(row.rate == (row.total ? double(row.annotated) / double(row.total) : 0.0), "row rate");
  }
  if (o.pass)
    o.detail = std::to_string(word_cases) + " word, " + std::to_string(filter_cases) + " filter, " +
               std::to_string(override_cases) + " override, " + std::to_string(purity_cases) +
               " level, " + std::to_string(rate_cases) + " rate cases";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"preprocessing examples", preprocessing_examples},
      {"identifier trace ASessionId_02", worked_trace},
      {"sequence fallback and stop-on-success", sequence_fallback},
      {"concept lookups", concept_lookups},
      {"ablation equals reference; stage ordering", ablation_shape},
      {"termination on cyclic types", cyclic_termination},
      {"SAWSDL round trip and idempotence", round_trip},
      {"determinism under --jobs", jobs_determinism},
      {"invariant properties", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.0f ms", seconds_since(t0) * 1000.0);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << ms
              << ")" << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
