#include "gromov/gromov.h"

#include <cstring>
#include <exception>
#include <string>

#include <nlohmann/json.hpp>

#include "core/census.hpp"
#include "core/equivalence.hpp"
#include "core/errors.hpp"
#include "core/metric.hpp"
#include "core/reference.hpp"
#include "core/report.hpp"
#include "core/structure.hpp"

using namespace gromov;

struct gromov_metric {
  MetricSpace value;
};
struct gromov_structure {
  GromovStructure value;
};
struct gromov_registry {
  ClassRegistry value;
};

namespace {

thread_local std::string g_last_error = "";

gromov_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return GROMOV_ERR_PARSE;
    case ErrorCode::NotSymmetric: return GROMOV_ERR_NOT_SYMMETRIC;
    case ErrorCode::NonPositiveDistance: return GROMOV_ERR_NONPOSITIVE_DISTANCE;
    case ErrorCode::TriangleViolation: return GROMOV_ERR_TRIANGLE;
    case ErrorCode::NonGeneric: return GROMOV_ERR_NONGENERIC;
    case ErrorCode::IndexOutOfRange: return GROMOV_ERR_INDEX;
    case ErrorCode::RepeatedIndex: return GROMOV_ERR_REPEATED_INDEX;
    case ErrorCode::SizeMismatch: return GROMOV_ERR_SIZE_MISMATCH;
    case ErrorCode::NotClosed: return GROMOV_ERR_NOT_CLOSED;
    case ErrorCode::TooSmall: return GROMOV_ERR_TOO_SMALL;
    case ErrorCode::SizeLimitExceeded: return GROMOV_ERR_SIZE_LIMIT;
    case ErrorCode::UnsupportedN: return GROMOV_ERR_UNSUPPORTED_N;
    case ErrorCode::ReferenceMismatch: return GROMOV_ERR_REFERENCE_MISMATCH;
    case ErrorCode::NonPositiveWeight: return GROMOV_ERR_NONPOSITIVE_WEIGHT;
    case ErrorCode::InvariantViolation: return GROMOV_ERR_INVARIANT;
    case ErrorCode::InvalidArgument: return GROMOV_ERR_INVALID_ARGUMENT;
  }
  return GROMOV_ERR_INTERNAL;
}

template <typename Fn>
gromov_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GROMOV_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GROMOV_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return GROMOV_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

gromov_status require(bool ok, const char* message) {
  if (ok) return GROMOV_OK;
  g_last_error = message;
  return GROMOV_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* gromov_version(void) { return "1.0.0"; }

const char* gromov_last_error(void) { return g_last_error.c_str(); }

void gromov_string_free(char* s) { delete[] s; }
void gromov_metric_free(gromov_metric* m) { delete m; }
void gromov_structure_free(gromov_structure* s) { delete s; }
void gromov_registry_free(gromov_registry* r) { delete r; }

gromov_status gromov_metric_parse(const char* text, const char* format, gromov_metric** out) {
  if (auto st = require(text && out, "text and out must be non-NULL")) return st;
  return wrap([&]() {
    MetricFormat fmt = MetricFormat::Auto;
    if (format && *format) {
      std::string f = format;
      if (f == "auto")
        fmt = MetricFormat::Auto;
      else if (f == "csv-full")
        fmt = MetricFormat::CsvFull;
      else if (f == "csv-lower")
        fmt = MetricFormat::CsvLower;
      else if (f == "json")
        fmt = MetricFormat::Json;
      else
        throw Error(ErrorCode::InvalidArgument, "unknown format '" + f + "'");
    }
    *out = new gromov_metric{parse_metric(text, fmt)};
  });
}

int gromov_metric_point_count(const gromov_metric* m) {
  return m ? m->value.point_count() : 0;
}

gromov_status gromov_metric_analyze_json(const gromov_metric* m, char** json_out) {
  if (auto st = require(m && json_out, "metric and out must be non-NULL")) return st;
  return wrap([&]() { *json_out = dup_string(analyze_report(m->value).dump(2) + "\n"); });
}

gromov_status gromov_metric_extract_structure(const gromov_metric* m, gromov_structure** out) {
  if (auto st = require(m && out, "metric and out must be non-NULL")) return st;
  return wrap([&]() { *out = new gromov_structure{extract_structure(m->value)}; });
}

gromov_status gromov_structure_parse(const char* text, gromov_structure** out) {
  if (auto st = require(text && out, "text and out must be non-NULL")) return st;
  return wrap([&]() { *out = new gromov_structure{parse_structure(text)}; });
}

int gromov_structure_point_count(const gromov_structure* s) {
  return s ? s->value.point_count() : 0;
}

gromov_status gromov_structure_to_text(const gromov_structure* s, char** out) {
  if (auto st = require(s && out, "structure and out must be non-NULL")) return st;
  return wrap([&]() { *out = dup_string(format_structure(s->value)); });
}

gromov_status gromov_structure_fingerprint_json(const gromov_structure* s, char** json_out) {
  if (auto st = require(s && json_out, "structure and out must be non-NULL")) return st;
  return wrap([&]() {
    nlohmann::json j = fingerprint_json(fingerprint(s->value));
    j["schema_version"] = 1;
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

gromov_status gromov_structure_canonical(const gromov_structure* s,
                                         gromov_structure** canonical_out,
                                         char** witness_json_out) {
  if (auto st = require(s && canonical_out, "structure and out must be non-NULL")) return st;
  return wrap([&]() {
    CanonicalForm cf = canonical_form(s->value);
    *canonical_out = new gromov_structure{std::move(cf.structure)};
    if (witness_json_out) {
      nlohmann::json j{{"witness", cf.witness.images()}};
      *witness_json_out = dup_string(j.dump() + "\n");
    }
  });
}

gromov_status gromov_equivalence_check(const gromov_structure* a, const gromov_structure* b,
                                       int* equivalent_out, char** verdict_json_out) {
  if (auto st = require(a && b && equivalent_out, "structures and out must be non-NULL")) return st;
  return wrap([&]() {
    EquivalenceVerdict v = are_equivalent_verdict(a->value, b->value);
    *equivalent_out = v.equivalent ? 1 : 0;
    if (verdict_json_out) {
      nlohmann::json j;
      j["schema_version"] = 1;
      j["equivalent"] = v.equivalent;
      if (v.permutation) j["permutation"] = v.permutation->images();
      if (v.distinguishing_invariant) j["distinguishing_invariant"] = *v.distinguishing_invariant;
      j["search_nodes"] = v.search_nodes;
      *verdict_json_out = dup_string(j.dump(2) + "\n");
    }
  });
}

gromov_status gromov_census_run(int n, uint64_t samples, uint64_t seed, uint64_t weight_max,
                                int threads, gromov_progress_fn progress, void* user,
                                gromov_registry** out) {
  if (auto st = require(out != nullptr, "out must be non-NULL")) return st;
  return wrap([&]() {
    SamplerConfig cfg;
    cfg.n = n;
    cfg.sample_budget = samples;
    cfg.seed = seed;
    cfg.weight_max = weight_max == 0 ? SamplerConfig::kDefaultWeightMax : weight_max;
    ProgressFn fn;
    if (progress)
      fn = [progress, user](std::uint64_t done, std::uint64_t total) { progress(done, total, user); };
    *out = new gromov_registry{run_census(cfg, threads, fn)};
  });
}

gromov_status gromov_registry_to_json(const gromov_registry* r, char** json_out) {
  if (auto st = require(r && json_out, "registry and out must be non-NULL")) return st;
  return wrap([&]() { *json_out = dup_string(registry_to_json(r->value)); });
}

gromov_status gromov_registry_parse_json(const char* json, gromov_registry** out) {
  if (auto st = require(json && out, "json and out must be non-NULL")) return st;
  return wrap([&]() { *out = new gromov_registry{registry_from_json(json)}; });
}

int gromov_registry_point_count(const gromov_registry* r) { return r ? r->value.n : 0; }

gromov_status gromov_registry_counts(const gromov_registry* r, uint64_t* classes,
                                     uint64_t* reducible, uint64_t* irreducible,
                                     uint64_t* nongeneric, uint64_t* drawn) {
  if (auto st = require(r != nullptr, "registry must be non-NULL")) return st;
  return wrap([&]() {
    if (classes) *classes = r->value.class_count();
    if (reducible) *reducible = r->value.reducible_count();
    if (irreducible) *irreducible = r->value.irreducible_count();
    if (nongeneric) *nongeneric = r->value.samples_nongeneric;
    if (drawn) *drawn = r->value.samples_drawn;
  });
}

gromov_status gromov_check_tables(int n, const gromov_registry* registry_or_null, int* ok_out,
                                  char** report_json_out) {
  if (auto st = require(ok_out != nullptr, "ok_out must be non-NULL")) return st;
  return wrap([&]() {
    TableCheckReport report =
        check_tables(n, registry_or_null ? &registry_or_null->value : nullptr);
    *ok_out = report.ok ? 1 : 0;
    if (report_json_out) *report_json_out = dup_string(table_report_json(report));
  });
}

gromov_status gromov_check_tables_text(int n, const gromov_registry* registry_or_null, int* ok_out,
                                       char** text_out) {
  if (auto st = require(ok_out != nullptr, "ok_out must be non-NULL")) return st;
  return wrap([&]() {
    TableCheckReport report =
        check_tables(n, registry_or_null ? &registry_or_null->value : nullptr);
    *ok_out = report.ok ? 1 : 0;
    if (text_out) *text_out = dup_string(table_report_text(report));
  });
}

}  // extern "C"
