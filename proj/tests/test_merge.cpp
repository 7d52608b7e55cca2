#include <doctest.h>

#include "support/generators.hpp"
#include "vtm/merge.hpp"
#include "vtm/parse.hpp"

using namespace vtm;

namespace {

TrustModel parse_ok(const std::string& text) {
  ParseResult r = parse_model(text, "merge-input.vtm");
  REQUIRE(r.ok());
  return std::move(*r.model);
}

}  // namespace

TEST_CASE("merging with the empty model is identity") {
  TrustModel m = parse_ok(
      "system \"Paper voting\" { goal ballot_secrecy { trust voter { impact "
      "= single; } } }");
  const std::array<TrustModel, 2> inputs = {m, TrustModel{}};
  ParseResult merged = merge_models(inputs);
  REQUIRE(merged.ok());
  CHECK(*merged.model == m);
  CHECK(merged.diagnostics.empty());
}

TEST_CASE("disjoint cells union") {
  TrustModel a = parse_ok(
      "system \"Paper voting\" { goal ballot_secrecy { trust voter { impact "
      "= single; } } }");
  TrustModel b = parse_ok(
      "system \"Postal voting\" { goal ballot_secrecy { trust postal_service "
      "{ impact = subset; } } }");
  const std::array<TrustModel, 2> inputs = {a, b};
  ParseResult merged = merge_models(inputs);
  REQUIRE(merged.ok());
  CHECK(merged.model->assumption_count() == 2);
  CHECK(merged.model->systems().size() == 2);
}

TEST_CASE("conflicting duplicate cell is an error") {
  TrustModel a = parse_ok(
      "system \"Paper voting\" { goal ballot_secrecy { trust voter { impact "
      "= subset; } } }");
  TrustModel b = parse_ok(
      "system \"Paper voting\" { goal ballot_secrecy { trust voter { impact "
      "= all; } } }");
  const std::array<TrustModel, 2> inputs = {a, b};
  ParseResult merged = merge_models(inputs);
  CHECK(!merged.ok());
  REQUIRE(has_errors(merged.diagnostics));
  CHECK(merged.diagnostics.front().message.find("conflicting cell") !=
        std::string::npos);
}

TEST_CASE("identical duplicate cell deduplicates with a warning") {
  const std::string text =
      "system \"Paper voting\" { goal ballot_secrecy { trust voter { impact "
      "= single; } } }";
  TrustModel a = parse_ok(text);
  TrustModel b = parse_ok(text);
  const std::array<TrustModel, 2> inputs = {a, b};
  ParseResult merged = merge_models(inputs);
  REQUIRE(merged.ok());
  CHECK(merged.model->assumption_count() == 1);
  REQUIRE(merged.diagnostics.size() == 1);
  CHECK(merged.diagnostics.front().severity == DiagnosticSeverity::warning);
  CHECK(*merged.model == a);
}

TEST_CASE("conflicting note text is an error") {
  TrustModel a = parse_ok("note 1 \"alpha\";");
  TrustModel b = parse_ok("note 1 \"beta\";");
  const std::array<TrustModel, 2> inputs = {a, b};
  ParseResult merged = merge_models(inputs);
  CHECK(!merged.ok());
  CHECK(merged.diagnostics.front().message.find("conflicting note 1") !=
        std::string::npos);
}

TEST_CASE("merge is commutative and associative on conflict-free inputs") {
  testing::Gen gen(777);
  int checked = 0;
  while (checked < 25) {
    TrustModel a = gen.model();
    TrustModel b = gen.model();
    TrustModel c = gen.model();

    const std::array<TrustModel, 3> abc = {a, b, c};
    const std::array<TrustModel, 3> cba = {c, b, a};
    ParseResult m1 = merge_models(abc);
    ParseResult m2 = merge_models(cba);
    if (!m1.ok() || !m2.ok()) continue;  // conflicting draw; try another

    CHECK(*m1.model == *m2.model);

    const std::array<TrustModel, 2> ab = {a, b};
    ParseResult m_ab = merge_models(ab);
    REQUIRE(m_ab.ok());
    const std::array<TrustModel, 2> ab_c = {*m_ab.model, c};
    ParseResult m3 = merge_models(ab_c);
    REQUIRE(m3.ok());
    CHECK(*m3.model == *m1.model);
    ++checked;
  }
}
