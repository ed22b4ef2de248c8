#include <fstream>
#include <optional>
#include <sstream>

#include "doctest.h"

#include "diagprop/errors.hpp"
#include "diagprop/spec_io.hpp"

using namespace diagprop;

namespace {

template <typename Fn>
std::optional<Errc> errc_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kSample = R"({
  "version": 1,
  "varieties": [
    {"name": "p2", "kind": "projective_space", "n": 2},
    {"name": "q3", "kind": "quadric", "n": 3},
    {"name": "x224", "kind": "complete_intersection", "n": 4, "multidegree": [2, 2]},
    {"name": "s4", "kind": "sphere", "n": 4, "mode": "topological"},
    {"name": "quartic", "kind": "quartic_surface_generic"},
    {"name": "surface", "kind": "pic_z_general", "dim": 2, "index": 1,
     "ample_generator_has_section": true},
    {"name": "pq", "kind": "product",
     "factors": [{"kind": "projective_space", "n": 1}, {"kind": "quadric", "n": 4}]}
  ],
  "options": {"format": "text", "chi_window": 12}
})";

}  // namespace

TEST_CASE("parsing a spec file") {
  SpecFile file = parse_spec_file(kSample);
  CHECK(file.version == 1);
  REQUIRE(file.varieties.size() == 7);
  CHECK(file.varieties[0].kind == VarietyKind::ProjectiveSpace);
  CHECK(file.varieties[0].n == 2);
  CHECK(file.varieties[1].name == "q3");
  CHECK(file.varieties[2].multidegree == std::vector<int>{2, 2});
  CHECK(file.varieties[3].mode == Mode::Topological);
  CHECK(file.varieties[4].kind == VarietyKind::K3Generic);
  CHECK(file.varieties[4].d == 4);
  CHECK(file.varieties[5].ample_generator_has_section == Flag3::True);
  REQUIRE(file.varieties[6].factors.size() == 2);
  CHECK(file.varieties[6].factors[1].kind == VarietyKind::Quadric);
  CHECK(file.options.format == "text");
  CHECK(file.options.chi_window == 12);
}

TEST_CASE("serialize and parse round-trip") {
  SpecFile file = parse_spec_file(kSample);
  std::string text = serialize_spec_file(file);
  SpecFile again = parse_spec_file(text);
  CHECK(again == file);
  CHECK(serialize_spec_file(again) == text);
}

TEST_CASE("strict parse errors") {
  auto parse_err = [](const std::string& text) {
    return errc_of([&] { return parse_spec_file(text); });
  };

  CHECK(parse_err("not json at all") == Errc::SyntaxError);
  CHECK(parse_err("[1, 2]") == Errc::SyntaxError);
  CHECK(parse_err(R"({"varieties": []})") == Errc::SyntaxError);  // missing version
  CHECK(parse_err(R"({"version": 2, "varieties": []})") == Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1})") == Errc::SyntaxError);  // missing varieties
  CHECK(parse_err(R"({"version": 1, "varieties": [], "extra": 0})") == Errc::SyntaxError);

  // variety-level strictness
  CHECK(parse_err(R"({"version": 1, "varieties": [{"kind": "projective_space", "n": 1}]})") ==
        Errc::SyntaxError);  // missing name
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "", "kind": "projective_space", "n": 1}]})") == Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "projective_space", "n": 1},
          {"name": "a", "kind": "quadric", "n": 3}]})") == Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "projective_space"}]})") == Errc::SyntaxError);  // missing n
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "projective_space", "n": 1, "d": 3}]})") ==
        Errc::SyntaxError);  // field from another kind
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "projective_space", "n": "one"}]})") == Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "banana", "n": 1}]})") == Errc::UnknownKind);
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "quartic_surface_generic", "d": 6}]})") == Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "quadric", "n": 3, "orientable": "yes"}]})") ==
        Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "quadric", "n": 3, "mode": "smooth"}]})") == Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1, "varieties": [
          {"name": "a", "kind": "complete_intersection", "n": 4, "multidegree": [2, "x"]}]})") ==
        Errc::SyntaxError);

  // unknown-kind message lists the vocabulary
  try {
    parse_spec_file(R"({"version": 1, "varieties": [{"name": "a", "kind": "banana"}]})");
    FAIL("expected UnknownKind");
  } catch (const Error& e) {
    std::string what = e.what();
    CHECK(what.find("projective_space") != std::string::npos);
    CHECK(what.find("quartic_surface_generic") != std::string::npos);
  }

  // options strictness
  CHECK(parse_err(R"({"version": 1, "varieties": [], "options": {"format": "xml"}})") ==
        Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1, "varieties": [], "options": {"chi_window": 0}})") ==
        Errc::SyntaxError);
  CHECK(parse_err(R"({"version": 1, "varieties": [], "options": {"window": 3}})") ==
        Errc::SyntaxError);

  // a parse error reports the JSON path of the offending field
  try {
    parse_spec_file(R"({"version": 1, "varieties": [
        {"name": "a", "kind": "projective_space", "n": 1},
        {"name": "b", "kind": "projective_space", "n": true}]})");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    std::string what = e.what();
    CHECK(what.find("/varieties/1/n") != std::string::npos);
  }
}

TEST_CASE("flag values accept booleans and the string unknown") {
  SpecFile file = parse_spec_file(R"({
    "version": 1,
    "varieties": [
      {"name": "m", "kind": "pic_z_general", "dim": 3, "index": -2,
       "ample_generator_has_section": true, "h1_mod2_zero": "unknown",
       "orientable": true}
    ]
  })");
  CHECK(file.varieties[0].ample_generator_has_section == Flag3::True);
  CHECK(file.varieties[0].h1_mod2_zero == Flag3::Unknown);
  CHECK(file.varieties[0].orientable == Flag3::True);

  // "unknown" round-trips to an omitted field
  std::string text = serialize_spec_file(file);
  CHECK(text.find("h1_mod2_zero") == std::string::npos);
  CHECK(text.find("orientable") != std::string::npos);
}

TEST_CASE("batch isolation in run_reports") {
  SpecFile file = parse_spec_file(R"({
    "version": 1,
    "varieties": [
      {"name": "good", "kind": "projective_space", "n": 2},
      {"name": "bad", "kind": "pic_z_general", "dim": 2, "index": -1,
       "ample_generator_has_section": true},
      {"name": "alsogood", "kind": "quadric", "n": 3}
    ]
  })");
  ReportDocument doc = run_reports(file);
  REQUIRE(doc.results.size() == 3);
  CHECK_FALSE(doc.results[0].error.has_value());
  CHECK(doc.results[0].reports.size() == 1);
  REQUIRE(doc.results[1].error.has_value());
  CHECK(doc.results[1].error->find("UnsupportedSpec") != std::string::npos);
  CHECK(doc.results[1].reports.empty());
  CHECK_FALSE(doc.results[2].error.has_value());
  CHECK(doc.results[2].reports[0].verdict == Verdict::Fails);
}

TEST_CASE("canonical json output") {
  SpecFile file = parse_spec_file(kSample);
  ReportDocument doc = run_reports(file);
  std::string one = report_to_canonical_json(doc);
  std::string two = report_to_canonical_json(run_reports(file));
  CHECK(one == two);
  CHECK(one.find("\"tool_version\": \"0.1.0\"") != std::string::npos);
  CHECK(one.find("timestamp") == std::string::npos);
  // every citation key that appears in a report resolves in the citations block
  CHECK(one.find("\"citations\"") != std::string::npos);
  CHECK(one.find("prop:quadric1") != std::string::npos);
}

TEST_CASE("golden report bytes") {
  std::string catalog = slurp(std::string(DIAGPROP_DATA_DIR) + "/catalog.json");
  std::string golden = slurp(std::string(DIAGPROP_DATA_DIR) + "/golden_report.json");
  ReportDocument doc = run_reports(parse_spec_file(catalog));
  CHECK(report_to_canonical_json(doc) == golden);
}

TEST_CASE("text rendering") {
  SpecFile file = parse_spec_file(R"({
    "version": 1,
    "varieties": [
      {"name": "q3", "kind": "quadric", "n": 3},
      {"name": "torus", "kind": "abelian_variety", "g": 3}
    ]
  })");
  std::string text = report_to_text(run_reports(file));
  CHECK(text.find("diagprop 0.1.0") != std::string::npos);
  CHECK(text.find("q3 (quadric)") != std::string::npos);
  CHECK(text.find("FAILS") != std::string::npos);
  CHECK(text.find("UNKNOWN") != std::string::npos);
  CHECK(text.find("prop:quadric1") != std::string::npos);
  CHECK(text.find("note:abelian-gt2") != std::string::npos);
}
