// Exercises the shared-library surface exactly as an external client would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "gromov/gromov.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gromov_string_free(s);
  return out;
}

constexpr const char* kCycle4 = "2\n3,2\n2,3,2";

}  // namespace

TEST_CASE("version and error strings exist") {
  CHECK(gromov_version() != nullptr);
  CHECK(gromov_last_error() != nullptr);
}

TEST_CASE("metric parse, analyze, extract") {
  gromov_metric* m = nullptr;
  REQUIRE(gromov_metric_parse(kCycle4, "csv-lower", &m) == GROMOV_OK);
  CHECK(gromov_metric_point_count(m) == 4);

  char* raw = nullptr;
  REQUIRE(gromov_metric_analyze_json(m, &raw) == GROMOV_OK);
  nlohmann::json report = nlohmann::json::parse(take(raw));
  CHECK(report["generic"] == true);
  CHECK(report["fingerprint"]["rank"] == 2);
  CHECK(report["fingerprint"]["char_poly"]["coefficients"] ==
        nlohmann::json({"0", "0", "-4", "0", "1"}));
  CHECK(report["schema_version"] == 1);

  gromov_structure* s = nullptr;
  REQUIRE(gromov_metric_extract_structure(m, &s) == GROMOV_OK);
  CHECK(gromov_structure_point_count(s) == 4);
  char* text = nullptr;
  REQUIRE(gromov_structure_to_text(s, &text) == GROMOV_OK);
  CHECK(take(text) == "1: 2 4\n2: 1 3\n3: 2 4\n4: 1 3\n");

  gromov_structure_free(s);
  gromov_metric_free(m);
}

TEST_CASE("errors carry codes and messages") {
  gromov_metric* m = nullptr;
  CHECK(gromov_metric_parse("1\n1,3", "csv-lower", &m) == GROMOV_ERR_TRIANGLE);
  CHECK(std::strlen(gromov_last_error()) > 0);

  CHECK(gromov_metric_parse("garbage", "json", &m) == GROMOV_ERR_PARSE);
  CHECK(gromov_metric_parse(kCycle4, "no-such-format", &m) == GROMOV_ERR_INVALID_ARGUMENT);
  CHECK(gromov_metric_parse(nullptr, nullptr, &m) == GROMOV_ERR_INVALID_ARGUMENT);

  // equilateral: every minimum tied
  REQUIRE(gromov_metric_parse("1\n1,1\n1,1,1", "csv-lower", &m) == GROMOV_OK);
  gromov_structure* s = nullptr;
  CHECK(gromov_metric_extract_structure(m, &s) == GROMOV_ERR_NONGENERIC);

  char* raw = nullptr;
  REQUIRE(gromov_metric_analyze_json(m, &raw) == GROMOV_OK);
  nlohmann::json report = nlohmann::json::parse(take(raw));
  CHECK(report["generic"] == false);
  CHECK(report["nongeneric_vertices"].size() == 4);
  gromov_metric_free(m);
}

TEST_CASE("structure round trip, canonical form, fingerprint") {
  gromov_structure* s = nullptr;
  REQUIRE(gromov_structure_parse("[[1,2,5],[2,1,3],[3,2,5],[4,2,5],[5,1,4]]", &s) == GROMOV_OK);

  char* fp_raw = nullptr;
  REQUIRE(gromov_structure_fingerprint_json(s, &fp_raw) == GROMOV_OK);
  nlohmann::json fp = nlohmann::json::parse(take(fp_raw));
  CHECK(fp["rank"] == 3);
  CHECK(fp["min_poly"]["coefficients"] == nlohmann::json({"0", "0", "-4", "0", "1"}));

  gromov_structure* canonical = nullptr;
  char* witness_raw = nullptr;
  REQUIRE(gromov_structure_canonical(s, &canonical, &witness_raw) == GROMOV_OK);
  nlohmann::json witness = nlohmann::json::parse(take(witness_raw));
  CHECK(witness["witness"].size() == 5);

  gromov_structure* again = nullptr;
  REQUIRE(gromov_structure_canonical(canonical, &again, nullptr) == GROMOV_OK);
  char *t1 = nullptr, *t2 = nullptr;
  gromov_structure_to_text(canonical, &t1);
  gromov_structure_to_text(again, &t2);
  CHECK(take(t1) == take(t2));

  gromov_structure_free(again);
  gromov_structure_free(canonical);
  gromov_structure_free(s);
}

TEST_CASE("equivalence verdicts over the C boundary") {
  gromov_structure* s2 = nullptr;
  gromov_structure* s3 = nullptr;
  REQUIRE(gromov_structure_parse("1: 2 5\n2: 1 3\n3: 2 5\n4: 2 5\n5: 1 4", &s2) == GROMOV_OK);
  REQUIRE(gromov_structure_parse("1: 2 4\n2: 1 3\n3: 2 4\n4: 1 3\n5: 1 3", &s3) == GROMOV_OK);

  int equivalent = -1;
  char* raw = nullptr;
  REQUIRE(gromov_equivalence_check(s2, s3, &equivalent, &raw) == GROMOV_OK);
  CHECK(equivalent == 0);
  nlohmann::json verdict = nlohmann::json::parse(take(raw));
  CHECK(verdict["equivalent"] == false);
  CHECK(verdict["distinguishing_invariant"] == "min_poly");

  REQUIRE(gromov_equivalence_check(s2, s2, &equivalent, &raw) == GROMOV_OK);
  CHECK(equivalent == 1);
  verdict = nlohmann::json::parse(take(raw));
  CHECK(verdict["permutation"].size() == 5);

  gromov_structure_free(s3);
  gromov_structure_free(s2);
}

TEST_CASE("census, registry JSON, and table checks") {
  gromov_registry* reg = nullptr;
  REQUIRE(gromov_census_run(5, 20000, 1, 0, 2, nullptr, nullptr, &reg) == GROMOV_OK);
  CHECK(gromov_registry_point_count(reg) == 5);

  uint64_t classes = 0, reducible = 0, irreducible = 0, nongeneric = 0, drawn = 0;
  REQUIRE(gromov_registry_counts(reg, &classes, &reducible, &irreducible, &nongeneric, &drawn) ==
          GROMOV_OK);
  CHECK(classes == 3);
  CHECK(reducible + irreducible == 3);
  CHECK(drawn == 20000);

  char* raw = nullptr;
  REQUIRE(gromov_registry_to_json(reg, &raw) == GROMOV_OK);
  std::string json = take(raw);
  gromov_registry* back = nullptr;
  REQUIRE(gromov_registry_parse_json(json.c_str(), &back) == GROMOV_OK);
  REQUIRE(gromov_registry_to_json(back, &raw) == GROMOV_OK);
  CHECK(take(raw) == json);
  gromov_registry_free(back);

  int ok = 0;
  REQUIRE(gromov_check_tables(5, reg, &ok, &raw) == GROMOV_OK);
  CHECK(ok == 1);
  nlohmann::json report = nlohmann::json::parse(take(raw));
  CHECK(report["ok"] == true);
  CHECK(report["registry"]["ok"] == true);

  REQUIRE(gromov_check_tables_text(4, nullptr, &ok, &raw) == GROMOV_OK);
  CHECK(ok == 1);
  CHECK(take(raw).find("all hard checks passed") != std::string::npos);

  CHECK(gromov_check_tables(7, nullptr, &ok, &raw) == GROMOV_ERR_UNSUPPORTED_N);
  gromov_registry_free(reg);
}

TEST_CASE("census argument validation") {
  gromov_registry* reg = nullptr;
  CHECK(gromov_census_run(2, 100, 1, 0, 1, nullptr, nullptr, &reg) == GROMOV_ERR_TOO_SMALL);
  CHECK(gromov_census_run(5, 0, 1, 0, 1, nullptr, nullptr, &reg) == GROMOV_ERR_INVALID_ARGUMENT);
}
