#include "common.hpp"
#include "doctest.h"
#include "wsdlsem/error.hpp"
#include "wsdlsem/preprocess.hpp"

using namespace wsdlsem;
using testing::texts;
using V = std::vector<std::string>;

namespace {

PreprocessConfig shipped() { return testing::default_pipeline().preprocess; }

std::vector<Word> ws(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.emplace_back(s);
  return out;
}

}  // namespace

TEST_CASE("decompose") {
  CHECK(decompose("WhiteMovesNext") == V{"White", "Moves", "Next"});
  CHECK(decompose("Number3Format") == V{"Number", "Format"});
  CHECK(decompose("User_name") == V{"User", "name"});
  CHECK(decompose("ASessionId_02") == V{"A", "Session", "Id"});
  CHECK(decompose("_42").empty());
  CHECK(decompose("").empty());
  CHECK(decompose("XMLParser") == V{"XML", "Parser"});
  CHECK(decompose("URL") == V{"URL"});
  CHECK(decompose("getURL") == V{"get", "URL"});
  CHECK(decompose("a.b-c d") == V{"a", "b", "c", "d"});
  CHECK(decompose("lowercase") == V{"lowercase"});
}

TEST_CASE("decompose folds diacritics") {
  CHECK(decompose("Caf\xC3\xA9Name") == V{"Cafe", "Name"});
  CHECK(decompose("N\xC3\xBAmber") == V{"Number"});
  CHECK(decompose("e\xCC\x81t\xC3\xA9") == V{"ete"});  // combining acute
  CHECK(decompose("\xC3\x89tat") == V{"Etat"});
  // letters with no Latin base are dropped without splitting
  CHECK(decompose("a\xCE\xA9" "b") == V{"ab"});
  // other symbols separate
  CHECK(decompose("price\xE2\x82\xAC" "value") == V{"price", "value"});
}

TEST_CASE("normalize") {
  PreprocessConfig cfg;
  cfg.abbreviations = {{"no", "number"}, {"id", "identity"}};
  CHECK(texts(normalize(V{"no"}, cfg)) == V{"number"});
  CHECK(texts(normalize(V{"Password"}, cfg)) == V{"password"});
  CHECK(texts(normalize(V{"Id"}, cfg)) == V{"identity"});
  CHECK(texts(normalize(V{"ID"}, cfg)) == V{"identity"});
  // whole tokens only, never substrings
  CHECK(texts(normalize(V{"node", "ident"}, cfg)) == V{"node", "ident"});
  // expanded once, never transitively
  cfg.abbreviations = {{"a", "b"}, {"b", "c"}};
  CHECK(texts(normalize(V{"a", "b"}, cfg)) == V{"b", "c"});
}

TEST_CASE("filter") {
  PreprocessConfig cfg;
  cfg.stop_words = {"parameter", "body", "a"};
  CHECK(filter(ws({"parameter"}), cfg).empty());
  CHECK(texts(filter(ws({"a", "session", "identity"}), cfg)) == V{"session", "identity"});
  CHECK(texts(filter(ws({"body", "x", "a", "y", "a"}), cfg)) == V{"x", "y"});
  PreprocessConfig none;
  CHECK(texts(filter(ws({"customer"}), none)) == V{"customer"});
}

TEST_CASE("preprocess with the worked example configuration") {
  PreprocessConfig cfg;
  cfg.abbreviations = {{"id", "identity"}};
  cfg.stop_words = {"a"};
  CHECK(texts(preprocess("ASessionId_02", cfg)) == V{"session", "identity"});
}

TEST_CASE("preprocess stage switches") {
  PreprocessConfig cfg = shipped();
  cfg.stages = {true, false, false};
  CHECK(texts(preprocess("Password", cfg)) == V{"password"});
  CHECK(texts(preprocess("UserId", cfg)) == V{"user", "id"});

  cfg.stages = StageSet::none();
  CHECK(texts(preprocess("UserName", cfg)) == V{"username"});
  CHECK(texts(preprocess("User_Name_2", cfg)) == V{"username"});
  CHECK(texts(preprocess("Body", cfg)) == V{"body"});
  CHECK(preprocess("_42", cfg).empty());

  cfg.stages = {true, true, false};
  CHECK(texts(preprocess("ParameterNo", cfg)) == V{"parameter", "number"});
  cfg.stages = StageSet::all();
  CHECK(texts(preprocess("ParameterNo", cfg)) == V{"number"});
}

TEST_CASE("word table with the shipped configuration") {
  PreprocessConfig cfg = shipped();
  CHECK(texts(preprocess("WhiteMovesNext", cfg)) == V{"white", "moves", "next"});
  CHECK(texts(preprocess("Number3Format", cfg)) == V{"number", "format"});
  CHECK(texts(preprocess("User_name", cfg)) == V{"user", "name"});
  CHECK(texts(preprocess("no", cfg)) == V{"number"});
  CHECK(texts(preprocess("Password", cfg)) == V{"password"});
  CHECK(preprocess("Parameter", cfg).empty());
  CHECK(preprocess("Body", cfg).empty());
  CHECK(texts(preprocess("AUsername", cfg)) == V{"username"});
  CHECK(texts(preprocess("ASessionId_02", cfg)) == V{"session", "identity"});
}

TEST_CASE("abbreviation file") {
  auto m = parse_abbreviations("# comment\n\nno = number\r\nID=Identity  # trailing\n");
  CHECK(m.size() == 2);
  CHECK(m.at("no") == "number");
  CHECK(m.at("id") == "identity");

  auto line_of = [](const char* doc) -> std::size_t {
    try {
      parse_abbreviations(doc);
    } catch (const LineError& e) {
      CHECK(e.code() == ErrorCode::MalformedConfig);
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("no=number\nbroken\n") == 2);
  CHECK(line_of("=number\n") == 1);
  CHECK(line_of("no=\n") == 1);
  CHECK(line_of("\n\nno=num ber\n") == 3);
  CHECK(line_of("n-o=number\n") == 1);
}

TEST_CASE("stop-word file") {
  auto s = parse_stop_words("\xEF\xBB\xBF" "a\nThe\n# x\n\n  body  \n");
  CHECK(s == std::set<std::string, std::less<>>{"a", "the", "body"});
  CHECK_THROWS_AS(parse_stop_words("two words\n"), LineError);
  CHECK_THROWS_AS(parse_stop_words("x1\n"), LineError);
}
