#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/census.hpp"
#include "core/polynomial.hpp"
#include "core/structure.hpp"

namespace gromov {

// One row of the bundled catalog of known classes (n = 4, 5, 6). Raw
// printed column strings are retained verbatim; comparisons use the parsed
// polynomials after the documented errata substitutions.
struct ReferenceEntry {
  std::string label;
  GromovStructure structure;
  std::string published_k_raw;  // exactly as printed
  std::string published_m_raw;
  // For n = 6 the printed polynomial columns carry k(t) and m(t) divided by
  // (t - 2); for n = 4 and 5 they are the full polynomials.
  bool column_divided;
  std::optional<int> published_removed;  // N_r column (n = 6 only)
  std::optional<int> published_ends;     // N_e column (n = 6 only)
  std::optional<bool> published_reducible;
  std::optional<int> corrected_removed;  // errata override for N_r
  std::string errata_note;               // nonempty when any correction applies

  IntPoly published_k;  // parsed, errata applied, x(t-2) when column_divided
  IntPoly published_m;  // published, unverified; the soft comparison target
};

// The 1 + 3 + 26 catalog entries; UnsupportedN for other sizes.
const std::vector<ReferenceEntry>& reference_structures(int n);

struct TableCheckRow {
  std::string label;
  bool removed_ok = true;       // against the errata-corrected N_r, when published
  bool ends_ok = true;
  bool class_ok = true;         // reducible/irreducible bucket, when published
  bool k_ok = true;             // up to overall sign
  bool m_matches = true;        // soft: computed m vs published m column
  std::string errata_note;
  std::string computed_k;
  std::string computed_m;
  int computed_removed = 0;
  int computed_ends = 0;
  bool computed_irreducible = false;
};

struct TableCheckReport {
  int n = 0;
  bool ok = false;  // every hard assertion passed
  std::vector<TableCheckRow> rows;
  bool pairwise_inequivalent = false;
  std::vector<std::string> m_discrepancies;  // soft, never fails the check
  std::vector<std::string> hard_failures;    // row/field detail

  bool registry_checked = false;
  bool registry_ok = false;
  std::vector<std::string> registry_missing;  // labels with no census class
  std::uint64_t registry_extra = 0;           // census classes matching no row
};

// Recomputes every invariant for every catalog entry and compares with the
// published columns: N_r, N_e, reducibility bucket and k(t) are hard
// assertions; m(t) differences are reported, not failed. With a registry,
// also checks that census classes and catalog rows match one-to-one.
TableCheckReport check_tables(int n, const ClassRegistry* registry = nullptr);

std::string table_report_json(const TableCheckReport& report);
std::string table_report_text(const TableCheckReport& report);

}  // namespace gromov
