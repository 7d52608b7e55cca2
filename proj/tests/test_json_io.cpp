#include <doctest.h>

#include "support/generators.hpp"
#include "vtm/corpus.hpp"
#include "vtm/json_io.hpp"

using namespace vtm;

TEST_CASE("corpus survives the JSON round trip") {
  TrustModel corpus = load_builtin_corpus();
  std::string json = model_to_json(corpus);
  ParseResult r = model_from_json(json, "corpus.json");
  REQUIRE(r.ok());
  CHECK(*r.model == corpus);
  CHECK(r.model->provenance() == corpus.provenance());
}

TEST_CASE("json field names mirror the text format vocabulary") {
  TrustModel corpus = load_builtin_corpus();
  std::string json = model_to_json(corpus);
  for (const char* field :
       {"\"systems\"", "\"goals\"", "\"notes\"", "\"assumptions\"",
        "\"system\"", "\"goal\"", "\"party\"", "\"impact\"", "\"mode\"",
        "\"note\"", "\"text\"", "\"when\""}) {
    CAPTURE(field);
    CHECK(json.find(field) != std::string::npos);
  }
}

TEST_CASE("json output is deterministic") {
  TrustModel corpus = load_builtin_corpus();
  CHECK(model_to_json(corpus) == model_to_json(corpus));
}

TEST_CASE("random models survive the JSON round trip") {
  testing::Gen gen(60606);
  for (int i = 0; i < 100; ++i) {
    TrustModel m = gen.model();
    ParseResult r = model_from_json(model_to_json(m), "gen.json");
    REQUIRE(r.ok());
    CHECK(*r.model == m);
  }
}

TEST_CASE("malformed json yields diagnostics, not a model") {
  CHECK(!model_from_json("{", "bad.json").ok());
  CHECK(!model_from_json("[]", "bad.json").ok());
  CHECK(!model_from_json(R"({"systems": ["nope"]})", "bad.json").ok());
  CHECK(!model_from_json(
           R"({"systems": ["paper_voting"], "goals": ["ballot_secrecy"],
               "assumptions": [{"system": "paper_voting",
                                "goal": "ballot_secrecy",
                                "party": "voter", "impact": "huge"}]})",
           "bad.json")
           .ok());

  // Dangling note reference caught by validation.
  ParseResult r = model_from_json(
      R"({"systems": ["paper_voting"], "goals": ["ballot_secrecy"],
          "assumptions": [{"system": "paper_voting",
                           "goal": "ballot_secrecy",
                           "party": "voter", "impact": "single",
                           "notes": [4]}]})",
      "bad.json");
  CHECK(!r.ok());
}

TEST_CASE("empty json object is the empty model") {
  ParseResult r = model_from_json("{}", "empty.json");
  REQUIRE(r.ok());
  CHECK(r.model->systems().empty());
  CHECK(r.model->assumption_count() == 0);
}
