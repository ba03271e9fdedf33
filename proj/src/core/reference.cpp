#include "core/reference.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "core/equivalence.hpp"
#include "core/errors.hpp"
#include "core/invariants.hpp"

namespace gromov {

namespace {

// Catalog data, version 1. Triples are written apex-first ("124" reads:
// at vertex 1 the pair {2,4}). Polynomial strings are verbatim from the
// published tables; `k_errata`/`m_errata` give the corrected reading where
// the printed token is impossible, and `nr_errata` the corrected removed-
// edge count where the printed one contradicts the row's own k(t).
constexpr int kCatalogVersion = 1;

struct RawRow {
  const char* label;
  const char* triples;
  const char* k_raw;
  const char* m_raw;
  int nr;  // -1 when not published
  int ne;
  char bucket;  // 'R', 'I', or 0 when not published
  const char* k_errata;
  const char* m_errata;
  int nr_errata;  // -1 when none
};

// n = 4 and n = 5: full k(t), m(t) as printed. The printed n = 4 strings
// contain the standalone factor "(t^2)", impossible for a 4x4 matrix by
// degree count; the errata reading replaces it with "(t+2)".
const RawRow kRows4[] = {
    {"S", "124 213 324 413", "(t-2)(t^2)t^2", "(t-2)(t^2)t", -1, -1, 0, "(t-2)(t+2)t^2",
     "(t-2)(t+2)t", -1},
};

const RawRow kRows5[] = {
    {"S_1", "125 213 324 435 514", "(t-2)(t^2+t-1)^2", "(t-2)(t^2+t-1)", -1, -1, 0, nullptr,
     nullptr, -1},
    {"S_2", "125 213 325 425 514", "(t-2)(t+2)t^3", "(t-2)(t+2)t^2", -1, -1, 0, nullptr, nullptr,
     -1},
    {"S_3", "124 213 324 413 513", "(t-2)(t+2)t^3", "(t-2)(t+2)t", -1, -1, 0, nullptr, nullptr,
     -1},
};

// n = 6: polynomial columns are -k(t)/(t-2) and -m(t)/(t-2) as printed.
// R_8's printed N_r = 4 contradicts its own k(t) column, whose simple root
// at 0 forces rank 5 (= the five distinct removed edges); corrected to 5.
const RawRow kRows6[] = {
    {"R_1", "124 213 324 413 513 613", "(t+2)t^4", "(t+2)t^4", 2, 4, 'R', nullptr, nullptr, -1},
    {"R_2", "124 213 324 435 524 624", "(t+2)t^4", "(t+2)t^4", 3, 4, 'R', nullptr, nullptr, -1},
    {"R_3", "124 213 324 413 513 624", "(t+2)t^4", "(t+2)t^4", 2, 4, 'R', nullptr, nullptr, -1},
    {"R_4", "124 213 324 435 524 613", "(t+2)t^4", "(t+2)t^4", 3, 4, 'R', nullptr, nullptr, -1},
    {"R_5", "124 213 324 413 513 625", "(t+2)t^4", "(t+2)t^4", 3, 4, 'R', nullptr, nullptr, -1},
    {"R_6", "124 213 324 435 524 615", "(t+2)t^4", "(t+2)t^4", 4, 4, 'R', nullptr, nullptr, -1},
    {"R_7", "124 213 324 413 516 625", "(t+2)(t-1)(t+1)t^2", "(t+2)(t-1)(t+1)t^2", 4, 2, 'R',
     nullptr, nullptr, -1},
    {"R_8", "125 213 324 435 514 613", "(t^2+t-1)^2t", "(t^2+t-1)^2t", 4, 2, 'R', nullptr, nullptr,
     5},
    {"R_9", "124 213 324 413 516 635", "(t+2)(t-1)(t+1)t^2", "(t+2)(t-1)(t+1)t^2", 4, 2, 'R',
     nullptr, nullptr, -1},
    {"I_1", "124 213 324 456 524 624", "(t+2)t^4", "(t+2)t^4", 3, 4, 'I', nullptr, nullptr, -1},
    {"I_2", "124 213 324 456 513 624", "(t+1)^2 t^3", "(t+1)^2*t^3", 3, 6, 'I', nullptr, nullptr,
     -1},
    {"I_3", "124 213 324 435 516 624", "(t+1)^2 t^3", "(t+1)^2*t^3", 4, 6, 'I', nullptr, nullptr,
     -1},
    {"I_4", "124 213 324 456 513 613", "(t^2+2 t+2)t^3", "(t^2+2*t+2)t^3", 3, 8, 'I', nullptr,
     nullptr, -1},
    {"I_5", "124 213 324 435 526 635", "(t+2)t^4", "(t+2)t^4", 4, 4, 'I', nullptr, nullptr, -1},
    {"I_6", "125 213 324 436 536 625", "(t+2)t^4", "(t+2)t^4", 4, 4, 'I', nullptr, nullptr, -1},
    {"I_7", "124 213 324 435 546 635", "(t+2)(t-1)(t+1)t^2", "(t+2)(t-1)(t+1)t^2", 4, 2, 'I',
     nullptr, nullptr, -1},
    {"I_8", "124 213 324 435 546 615", "(t+2)(t-1)(t+1)t^2", "(t+2)(t-1)(t+1)t^2", 5, 2, 'I',
     nullptr, nullptr, -1},
    {"I_9", "124 213 324 435 516 635", "(t+1)(t^2+t-1)t^2", "(t+1)(t^2+t-1)t^2", 4, 4, 'I',
     nullptr, nullptr, -1},
    {"I_10", "124 213 324 435 516 625", "(t^4+2t^3-t+1)t", "(t^4+2t^3-t+1)t", 5, 4, 'I', nullptr,
     nullptr, -1},
    {"I_11", "125 213 324 435 546 613", "(t+1)(t^2+t-1)t^2", "(t+1)(t^2+t-1)t^2", 5, 4, 'I',
     nullptr, nullptr, -1},
    {"I_12", "124 213 324 435 526 615", "(t+2)t^4", "(t+2)t^4", 5, 4, 'I', nullptr, nullptr, -1},
    {"I_13", "124 213 324 435 546 613", "(t+2)t^4", "(t+2)t^4", 4, 4, 'I', nullptr, nullptr, -1},
    {"I_14", "124 213 324 435 546 625", "(t^2+t-1)^2t", "(t^2+t-1)^2t", 5, 2, 'I', nullptr,
     nullptr, -1},
    {"I_15", "125 213 324 435 546 625", "(t^2+t-1)^2t", "(t^2+t-1)^2t", 5, 2, 'I', nullptr,
     nullptr, -1},
    {"I_16", "156 213 324 456 513 624", "(t+1)^2t^3", "(t+1)^2t^3", 3, 6, 'I', nullptr, nullptr,
     -1},
    {"I_17", "126 213 324 435 546 615", "(t+2)(t-1)^2(t+1)^2", "(t+2)(t-1)^2(t+1)^2", 6, 0, 'I',
     nullptr, nullptr, -1},
};

GromovStructure structure_from_triples(const char* triples, int n) {
  std::istringstream in(triples);
  std::string token;
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(n), {0, 0});
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  while (in >> token) {
    if (token.size() != 3)
      throw Error(ErrorCode::InvariantViolation, "bad catalog triple " + token);
    int apex = token[0] - '0', a = token[1] - '0', b = token[2] - '0';
    if (apex < 1 || apex > n || seen[static_cast<std::size_t>(apex)])
      throw Error(ErrorCode::InvariantViolation, "bad catalog apex in " + token);
    seen[static_cast<std::size_t>(apex)] = true;
    pairs[static_cast<std::size_t>(apex - 1)] = {a, b};
  }
  return GromovStructure(n, std::move(pairs));
}

ReferenceEntry make_entry(const RawRow& row, int n, bool column_divided) {
  ReferenceEntry e{row.label,
                   structure_from_triples(row.triples, n),
                   row.k_raw,
                   row.m_raw,
                   column_divided,
                   row.nr >= 0 ? std::optional<int>(row.nr) : std::nullopt,
                   row.ne >= 0 ? std::optional<int>(row.ne) : std::nullopt,
                   row.bucket ? std::optional<bool>(row.bucket == 'R') : std::nullopt,
                   row.nr_errata >= 0 ? std::optional<int>(row.nr_errata) : std::nullopt,
                   "",
                   IntPoly(),
                   IntPoly()};
  IntPoly k = parse_factored_poly(row.k_errata ? row.k_errata : row.k_raw);
  IntPoly m = parse_factored_poly(row.m_errata ? row.m_errata : row.m_raw);
  if (column_divided) {
    IntPoly shift(std::vector<BigInt>{BigInt(-2), BigInt(1)});  // (t - 2)
    k = k * shift;
    m = m * shift;
  }
  e.published_k = std::move(k);
  e.published_m = std::move(m);
  if (row.k_errata || row.m_errata)
    e.errata_note = "printed factor \"(t^2)\" read as \"(t+2)\" (degree bookkeeping)";
  if (row.nr_errata >= 0) {
    if (!e.errata_note.empty()) e.errata_note += "; ";
    e.errata_note += "printed N_r = " + std::to_string(row.nr) + " corrected to " +
                     std::to_string(row.nr_errata) + " (the row's own k(t) forces rank " +
                     std::to_string(row.nr_errata) + ")";
  }
  return e;
}

std::vector<ReferenceEntry> build_catalog(int n) {
  std::vector<ReferenceEntry> out;
  auto add = [&](const RawRow* rows, std::size_t count, bool divided) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(make_entry(rows[i], n, divided));
  };
  switch (n) {
    case 4: add(kRows4, std::size(kRows4), false); break;
    case 5: add(kRows5, std::size(kRows5), false); break;
    case 6: add(kRows6, std::size(kRows6), true); break;
    default:
      throw Error(ErrorCode::UnsupportedN,
                  "no reference tables for n = " + std::to_string(n) + " (have 4, 5, 6)");
  }
  return out;
}

}  // namespace

const std::vector<ReferenceEntry>& reference_structures(int n) {
  static const std::vector<ReferenceEntry> catalog4 = build_catalog(4);
  static const std::vector<ReferenceEntry> catalog5 = build_catalog(5);
  static const std::vector<ReferenceEntry> catalog6 = build_catalog(6);
  switch (n) {
    case 4: return catalog4;
    case 5: return catalog5;
    case 6: return catalog6;
    default:
      throw Error(ErrorCode::UnsupportedN,
                  "no reference tables for n = " + std::to_string(n) + " (have 4, 5, 6)");
  }
}

TableCheckReport check_tables(int n, const ClassRegistry* registry) {
  const auto& catalog = reference_structures(n);
  if (registry && registry->n != n)
    throw Error(ErrorCode::SizeMismatch, "registry is for n = " + std::to_string(registry->n));

  TableCheckReport report;
  report.n = n;

  std::set<std::string> catalog_keys;
  std::map<std::string, std::string> key_to_label;

  for (const auto& entry : catalog) {
    InvariantFingerprint fp = fingerprint(entry.structure);
    TableCheckRow row;
    row.label = entry.label;
    row.errata_note = entry.errata_note;
    row.computed_k = factored_display(fp.char_poly);
    row.computed_m = factored_display(fp.min_poly);
    row.computed_removed = fp.removed_edge_count;
    row.computed_ends = fp.ends;
    row.computed_irreducible = fp.irreducible;

    int expected_removed = entry.corrected_removed.value_or(entry.published_removed.value_or(-1));
    if (expected_removed >= 0) row.removed_ok = fp.removed_edge_count == expected_removed;
    if (entry.published_ends) row.ends_ok = fp.ends == *entry.published_ends;
    if (entry.published_reducible) row.class_ok = fp.irreducible == !*entry.published_reducible;

    // published columns are compared up to an overall sign
    row.k_ok = fp.char_poly == entry.published_k || fp.char_poly == -entry.published_k;
    RatPoly published_m = RatPoly::from_int(entry.published_m);
    RatPoly neg_published_m = RatPoly::from_int(-entry.published_m);
    row.m_matches = fp.min_poly == published_m || fp.min_poly == neg_published_m;

    if (!row.removed_ok)
      report.hard_failures.push_back(entry.label + ": N_r computed " +
                                     std::to_string(fp.removed_edge_count) + ", expected " +
                                     std::to_string(expected_removed));
    if (!row.ends_ok)
      report.hard_failures.push_back(entry.label + ": N_e computed " + std::to_string(fp.ends) +
                                     ", expected " + std::to_string(*entry.published_ends));
    if (!row.class_ok)
      report.hard_failures.push_back(entry.label + ": reducibility bucket mismatch");
    if (!row.k_ok)
      report.hard_failures.push_back(entry.label + ": k(t) computed " + row.computed_k +
                                     ", published " + entry.published_k_raw);
    if (!row.m_matches)
      report.m_discrepancies.push_back(entry.label + ": computed m(t) = " + row.computed_m +
                                       ", published column reads " + entry.published_m_raw);

    std::string key = canonical_form(entry.structure).structure.flat_key();
    if (!catalog_keys.insert(key).second)
      report.hard_failures.push_back(entry.label + ": equivalent to another catalog row");
    else
      key_to_label.emplace(key, entry.label);

    report.rows.push_back(std::move(row));
  }
  report.pairwise_inequivalent = catalog_keys.size() == catalog.size();

  if (registry) {
    report.registry_checked = true;
    std::set<std::string> census_keys;
    for (const auto& [key, record] : registry->records) census_keys.insert(key);
    for (const auto& [key, label] : key_to_label)
      if (!census_keys.count(key)) report.registry_missing.push_back(label);
    for (const auto& key : census_keys)
      if (!key_to_label.count(key)) ++report.registry_extra;
    report.registry_ok = report.registry_missing.empty() && report.registry_extra == 0;
    if (!report.registry_ok) {
      std::string detail = "census/catalog mismatch:";
      for (const auto& label : report.registry_missing) detail += " missing " + label;
      if (report.registry_extra)
        detail += " plus " + std::to_string(report.registry_extra) + " unknown census classes";
      report.hard_failures.push_back(detail);
    }
  }

  report.ok = report.hard_failures.empty();
  return report;
}

std::string table_report_json(const TableCheckReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["catalog_version"] = kCatalogVersion;
  j["n"] = report.n;
  j["ok"] = report.ok;
  j["pairwise_inequivalent"] = report.pairwise_inequivalent;
  j["hard_failures"] = report.hard_failures;
  j["m_discrepancies"] = report.m_discrepancies;

  const auto& catalog = reference_structures(report.n);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    const auto& entry = catalog[i];
    nlohmann::json r;
    r["label"] = row.label;
    r["structure"] = format_structure(entry.structure);
    nlohmann::json published;
    published["k"] = entry.published_k_raw;
    published["m"] = entry.published_m_raw;
    published["column_divided_by_t_minus_2"] = entry.column_divided;
    if (entry.published_removed) published["N_r"] = *entry.published_removed;
    if (entry.published_ends) published["N_e"] = *entry.published_ends;
    if (entry.published_reducible) published["class"] = *entry.published_reducible ? "R" : "I";
    r["published"] = std::move(published);
    r["computed"] = {{"k", row.computed_k},
                     {"m", row.computed_m},
                     {"N_r", row.computed_removed},
                     {"N_e", row.computed_ends},
                     {"irreducible", row.computed_irreducible}};
    r["k_match"] = row.k_ok;
    r["m_match"] = row.m_matches;
    r["N_r_match"] = row.removed_ok;
    r["N_e_match"] = row.ends_ok;
    r["class_match"] = row.class_ok;
    if (!row.errata_note.empty()) r["errata"] = row.errata_note;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);

  if (report.registry_checked) {
    j["registry"] = {{"ok", report.registry_ok},
                     {"missing", report.registry_missing},
                     {"unknown_classes", report.registry_extra}};
  }
  return j.dump(2) + "\n";
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string table_report_text(const TableCheckReport& report) {
  const auto& catalog = reference_structures(report.n);
  std::ostringstream out;
  out << "reference check, n = " << report.n << "\n";
  out << pad("label", 7) << pad("structure", 28) << pad("k(t)", 26) << pad("m(t)", 26)
      << pad("N_r", 5) << pad("N_e", 5) << pad("class", 7) << "verdict\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    const auto& entry = catalog[i];
    std::string triples;
    for (int v = 1; v <= entry.structure.point_count(); ++v) {
      auto [a, b] = entry.structure.pair_at(v);
      triples += std::to_string(v) + ":" + std::to_string(a) + std::to_string(b);
      if (v != entry.structure.point_count()) triples += " ";
    }
    bool hard_ok = row.removed_ok && row.ends_ok && row.class_ok && row.k_ok;
    out << pad(row.label, 7) << pad(triples, 28) << pad(row.computed_k, 26)
        << pad(row.computed_m, 26) << pad(std::to_string(row.computed_removed), 5)
        << pad(std::to_string(row.computed_ends), 5)
        << pad(row.computed_irreducible ? "I" : "R", 7) << (hard_ok ? "ok" : "MISMATCH");
    if (!row.m_matches) out << " (m differs from published column)";
    if (!row.errata_note.empty()) out << " [errata: " << row.errata_note << "]";
    out << "\n";
  }
  if (!report.m_discrepancies.empty()) {
    out << "published m(t) column differs from the recomputed minimal polynomial on "
        << report.m_discrepancies.size() << " row(s); the column duplicates k(t)\n";
  }
  if (report.registry_checked) {
    out << "census registry: "
        << (report.registry_ok ? "matches the catalog one-to-one" : "MISMATCH") << "\n";
    for (const auto& label : report.registry_missing) out << "  missing class: " << label << "\n";
    if (report.registry_extra)
      out << "  unknown census classes: " << report.registry_extra << "\n";
  }
  out << (report.ok ? "all hard checks passed" : "HARD CHECK FAILURES:") << "\n";
  for (const auto& f : report.hard_failures) out << "  " << f << "\n";
  return out.str();
}

}  // namespace gromov
