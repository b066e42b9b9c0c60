// wsdlsem: batch semantic annotation of WSDL collections.
//
//   wsdlsem annotate --input DIR_OR_FILE... [--out DIR] [--lexicon FILE] ...
//   wsdlsem ablate   --input DIR_OR_FILE... [--out DIR] ...
//   wsdlsem wordfreq --input DIR_OR_FILE... [--out DIR] ...
//
// Exit status: 0 success, 1 some input files were skipped, 2 fatal error.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsdlsem.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitFatal = 2;

struct FatalError {
  std::string message;
};

struct Options {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  std::string lexicon;
  std::string abbreviations;
  std::string stopwords;
  std::string overrides;
  std::string uri_prefix;
  int max_depth = 8;
  unsigned jobs = 1;
  std::string stages;
};

using PipelinePtr = std::unique_ptr<wsdlsem_pipeline, decltype(&wsdlsem_pipeline_destroy)>;
using CorpusPtr = std::unique_ptr<wsdlsem_corpus, decltype(&wsdlsem_corpus_destroy)>;
using RunPtr = std::unique_ptr<wsdlsem_run, decltype(&wsdlsem_run_destroy)>;

struct CString {
  char* p = nullptr;
  ~CString() { wsdlsem_free(p); }
};

void check(wsdlsem_status status, const std::string& what) {
  if (status != WSDLSEM_OK)
    throw FatalError{what + ": " + wsdlsem_status_name(status) + ": " + wsdlsem_last_error()};
}

std::vector<fs::path> data_dirs(const char* argv0) {
  std::vector<fs::path> dirs;
  std::error_code ec;
  fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (ec) exe = fs::absolute(argv0, ec);
  if (!exe.empty()) {
    dirs.push_back(exe.parent_path() / "data");
    dirs.push_back(exe.parent_path().parent_path() / "share" / "wsdlsem");
  }
#ifdef WSDLSEM_DATA_DIR
  dirs.emplace_back(WSDLSEM_DATA_DIR);
#endif
  return dirs;
}

std::optional<fs::path> find_default(const std::vector<fs::path>& dirs, const char* name) {
  for (const auto& d : dirs) {
    std::error_code ec;
    if (fs::is_regular_file(d / name, ec)) return d / name;
  }
  return std::nullopt;
}

bool has_corpus_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".wsdl" || ext == ".xsd";
}

// Directories contribute their .wsdl/.xsd files in name order; files are
// taken as given. Duplicates are dropped, first position wins.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](const fs::path& p) {
    std::string s = p.lexically_normal().string();
    if (seen.insert(s).second) out.push_back(std::move(s));
  };
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(in, ec))
        if (entry.is_regular_file() && has_corpus_extension(entry.path()))
          files.push_back(entry.path());
      if (ec) throw FatalError{"cannot list directory " + in + ": " + ec.message()};
      std::sort(files.begin(), files.end());
      for (const auto& f : files) add(f);
    } else {
      add(in);
    }
  }
  return out;
}

unsigned parse_stages(const std::string& spec) {
  if (spec.empty() || spec == "all") return WSDLSEM_STAGE_ALL;
  if (spec == "none") return 0;
  unsigned mask = 0;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "decompose") mask |= WSDLSEM_STAGE_DECOMPOSE;
    else if (item == "normalize") mask |= WSDLSEM_STAGE_NORMALIZE;
    else if (item == "filter") mask |= WSDLSEM_STAGE_FILTER;
    else if (item == "explorer" || item == "type-explorer") mask |= WSDLSEM_STAGE_TYPE_EXPLORER;
    else throw FatalError{"unknown stage '" + item + "' in --stages"};
  }
  return mask;
}

PipelinePtr make_pipeline(const Options& opt, const char* argv0) {
  wsdlsem_pipeline* raw = nullptr;
  check(wsdlsem_pipeline_create(&raw), "pipeline");
  PipelinePtr p(raw, &wsdlsem_pipeline_destroy);

  auto dirs = data_dirs(argv0);
  std::string lexicon = opt.lexicon;
  if (lexicon.empty()) {
    auto found = find_default(dirs, "lexicon.tsv");
    if (!found) throw FatalError{"no --lexicon given and no default lexicon.tsv found"};
    lexicon = found->string();
  }
  check(wsdlsem_pipeline_load_lexicon(p.get(), lexicon.c_str(), nullptr), "lexicon " + lexicon);

  auto optional_config = [&](const std::string& given, const char* default_name, auto loader,
                             const char* what) {
    std::string path = given;
    if (path.empty()) {
      auto found = find_default(dirs, default_name);
      if (!found) return;
      path = found->string();
    }
    check(loader(p.get(), path.c_str()), std::string(what) + " " + path);
  };
  optional_config(opt.abbreviations, "abbreviations.txt", &wsdlsem_pipeline_load_abbreviations,
                  "abbreviations");
  optional_config(opt.stopwords, "stopwords.txt", &wsdlsem_pipeline_load_stop_words, "stop-words");
  optional_config(opt.overrides, "overrides.txt", &wsdlsem_pipeline_load_overrides, "overrides");

  if (!opt.uri_prefix.empty())
    check(wsdlsem_pipeline_set_uri_prefix(p.get(), opt.uri_prefix.c_str()), "--uri-prefix");
  check(wsdlsem_pipeline_set_max_depth(p.get(), opt.max_depth), "--max-depth");
  check(wsdlsem_pipeline_set_stages(p.get(), parse_stages(opt.stages)), "--stages");
  return p;
}

CorpusPtr make_corpus(const Options& opt) {
  std::vector<std::string> files = expand_inputs(opt.inputs);
  std::vector<const char*> argv;
  for (const auto& f : files) argv.push_back(f.c_str());
  wsdlsem_corpus* raw = nullptr;
  check(wsdlsem_corpus_load(argv.data(), argv.size(), opt.jobs, &raw), "corpus");
  CorpusPtr c(raw, &wsdlsem_corpus_destroy);
  for (size_t i = 0; i < wsdlsem_corpus_skipped_count(c.get()); ++i)
    std::cerr << "warning: skipped " << wsdlsem_corpus_skipped_path(c.get(), i) << ": "
              << wsdlsem_corpus_skipped_message(c.get(), i) << "\n";
  return c;
}

void write_output(const fs::path& path, const char* data, size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FatalError{"cannot write " + path.string()};
  out.write(data, static_cast<std::streamsize>(size));
  if (!out) throw FatalError{"write failed for " + path.string()};
}

fs::path prepare_out_dir(const Options& opt) {
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) throw FatalError{"cannot create output directory " + opt.out_dir + ": " + ec.message()};
  return fs::path(opt.out_dir);
}

int partial_or_ok(const wsdlsem_corpus* c) {
  return wsdlsem_corpus_skipped_count(c) > 0 ? kExitPartial : kExitOk;
}

int run_annotate(const Options& opt, const char* argv0) {
  auto pipeline = make_pipeline(opt, argv0);
  auto corpus = make_corpus(opt);
  fs::path out_dir = prepare_out_dir(opt);

  wsdlsem_run* raw = nullptr;
  check(wsdlsem_annotate(pipeline.get(), corpus.get(), opt.jobs, &raw), "annotate");
  RunPtr run(raw, &wsdlsem_run_destroy);

  std::set<std::string> used;
  for (size_t i = 0; i < wsdlsem_corpus_description_count(corpus.get()); ++i) {
    std::string stem = fs::path(wsdlsem_corpus_source_id(corpus.get(), i)).stem().string();
    std::string name = stem + ".sawsdl.wsdl";
    for (int n = 2; !used.insert(name).second; ++n)
      name = stem + "-" + std::to_string(n) + ".sawsdl.wsdl";
    const char* data = nullptr;
    size_t size = 0;
    check(wsdlsem_run_sawsdl(run.get(), i, &data, &size), "sawsdl");
    write_output(out_dir / name, data, size);
  }
  const char* data = nullptr;
  size_t size = 0;
  check(wsdlsem_run_report(run.get(), &data, &size), "report");
  write_output(out_dir / "report.json", data, size);

  std::cerr << "annotated " << wsdlsem_run_annotated(run.get()) << " of "
            << wsdlsem_run_total(run.get()) << " parameters in "
            << wsdlsem_corpus_description_count(corpus.get()) << " description(s)\n";
  return partial_or_ok(corpus.get());
}

int run_ablate(const Options& opt, const char* argv0) {
  auto pipeline = make_pipeline(opt, argv0);
  auto corpus = make_corpus(opt);
  fs::path out_dir = prepare_out_dir(opt);
  CString json, table;
  check(wsdlsem_ablate(pipeline.get(), corpus.get(), opt.jobs, &json.p, &table.p), "ablate");
  write_output(out_dir / "ablation.json", json.p, std::char_traits<char>::length(json.p));
  std::cout << table.p;
  return partial_or_ok(corpus.get());
}

int run_wordfreq(const Options& opt, const char* argv0) {
  auto pipeline = make_pipeline(opt, argv0);
  auto corpus = make_corpus(opt);
  fs::path out_dir = prepare_out_dir(opt);
  CString csv;
  check(wsdlsem_word_frequency(pipeline.get(), corpus.get(), opt.jobs, &csv.p), "wordfreq");
  write_output(out_dir / "words.csv", csv.p, std::char_traits<char>::length(csv.p));
  return partial_or_ok(corpus.get());
}

void add_common(CLI::App* cmd, Options& opt, bool with_stages) {
  cmd->add_option("--input", opt.inputs, "WSDL/XSD file or directory (repeatable)")
      ->required()
      ->expected(1, -1);
  cmd->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--lexicon", opt.lexicon, "Lexicon TSV (word, rank, concept)");
  cmd->add_option("--abbreviations", opt.abbreviations, "Abbreviation file (abbr=expansion)");
  cmd->add_option("--stopwords", opt.stopwords, "Stop-word file (one per line)");
  cmd->add_option("--overrides", opt.overrides, "Concept override file (word=Concept)");
  cmd->add_option("--uri-prefix", opt.uri_prefix, "Prefix turning concept names into URIs");
  cmd->add_option("--max-depth", opt.max_depth, "Type explorer depth bound")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", opt.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  if (with_stages)
    cmd->add_option("--stages", opt.stages,
                    "Comma list of decompose,normalize,filter,explorer; or all/none");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic annotation of WSDL service descriptions"};
  app.require_subcommand(1);
  Options opt;
  CLI::App* annotate = app.add_subcommand("annotate", "Write SAWSDL copies and report.json");
  CLI::App* ablate = app.add_subcommand("ablate", "Five-stage ablation (ablation.json + table)");
  CLI::App* wordfreq = app.add_subcommand("wordfreq", "Word frequencies (words.csv)");
  add_common(annotate, opt, true);
  add_common(ablate, opt, false);
  add_common(wordfreq, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFatal;
  }

  try {
    if (annotate->parsed()) return run_annotate(opt, argv[0]);
    if (ablate->parsed()) return run_ablate(opt, argv[0]);
    return run_wordfreq(opt, argv[0]);
  } catch (const FatalError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitFatal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFatal;
  }
}
