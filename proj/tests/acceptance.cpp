// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/census.hpp"
#include "core/equivalence.hpp"
#include "core/invariants.hpp"
#include "core/metric.hpp"
#include "core/reference.hpp"
#include "core/structure.hpp"
#include "oracles.hpp"

using namespace gromov;
using gromov::testing::random_permutation;
using gromov::testing::structure_of;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

SamplerConfig config(int n, std::uint64_t budget, std::uint64_t seed) {
  SamplerConfig cfg;
  cfg.n = n;
  cfg.sample_budget = budget;
  cfg.seed = seed;
  return cfg;
}

std::string coeff_key(const IntPoly& p) {
  std::string out;
  for (const auto& c : p.coeff_strings()) out += c + ",";
  return out;
}

// ---- criterion 1: the four-point census -------------------------------

void criterion1() {
  Timer timer;
  ClassRegistry r = run_census(config(4, 10000, 1), 1);
  double elapsed = timer.seconds();

  bool pass = true;
  std::ostringstream detail;
  pass &= r.class_count() == 1;
  detail << "n=4 budget 10^4: " << r.class_count() << " class(es)";

  if (r.class_count() == 1) {
    const ClassRecord& record = r.records.begin()->second;
    bool equiv = are_equivalent(record.canonical, structure_of("124 213 324 413")).has_value();
    bool k_ok = record.fingerprint.char_poly == parse_factored_poly("(t-2)(t+2)t^2");
    bool m_ok = record.fingerprint.min_poly == RatPoly::from_int(parse_factored_poly("(t-2)(t+2)t"));
    pass &= equiv && k_ok && m_ok;
    detail << ", equivalent to the known four-point structure: " << (equiv ? "yes" : "NO")
           << ", k = " << factored_display(record.fingerprint.char_poly)
           << ", m = " << factored_display(record.fingerprint.min_poly);
  }
  bool time_ok = elapsed < 10.0;
  pass &= time_ok;
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s, limit 10 s)", elapsed);
  detail << buf;
  report(1, pass, detail.str());
}

// ---- criterion 2: the five-point census -------------------------------

void criterion2() {
  Timer timer;
  ClassRegistry r = run_census(config(5, 100000, 1), 1);
  double elapsed = timer.seconds();

  bool pass = r.class_count() == 3;
  std::ostringstream detail;
  detail << "n=5 budget 10^5: " << r.class_count() << " class(es)";

  // computed (k, m) pairs must match the published three exactly
  std::multiset<std::pair<std::string, std::string>> got, want;
  for (const auto& [key, record] : r.records)
    got.insert({coeff_key(record.fingerprint.char_poly),
                coeff_key(record.fingerprint.min_poly.to_int())});
  for (const auto& entry : reference_structures(5))
    want.insert({coeff_key(entry.published_k), coeff_key(entry.published_m)});
  bool pairs_ok = got == want;
  pass &= pairs_ok;
  detail << ", (k, m) pairs match the published lists exactly: " << (pairs_ok ? "yes" : "NO");

  bool time_ok = elapsed < 60.0;
  pass &= time_ok;
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s, limit 60 s)", elapsed);
  detail << buf;
  report(2, pass, detail.str());
}

// ---- criterion 3: the six-point census against the catalog ------------

std::string g_registry_json_threads1;
std::string g_registry_json_threads4;

void criterion3() {
  Timer t1;
  ClassRegistry single = run_census(config(6, 1000000, 1), 1);
  double elapsed_single = t1.seconds();
  Timer t4;
  ClassRegistry quad = run_census(config(6, 1000000, 1), 4);
  double elapsed_quad = t4.seconds();
  g_registry_json_threads1 = registry_to_json(single);
  g_registry_json_threads4 = registry_to_json(quad);

  bool pass = true;
  std::ostringstream detail;
  detail << "n=6 budget 10^6: " << single.class_count() << " classes ("
         << single.reducible_count() << " reducible, " << single.irreducible_count()
         << " irreducible)";
  pass &= single.class_count() == 26;
  pass &= single.reducible_count() == 9;
  pass &= single.irreducible_count() == 17;

  TableCheckReport table = check_tables(6, &single);
  pass &= table.ok;
  pass &= table.registry_checked && table.registry_ok;
  detail << "; catalog bijection and published N_r/N_e/class/k(t): "
         << (table.ok && table.registry_ok ? "pass" : "FAIL");
  int errata_rows = 0;
  for (const auto& row : table.rows)
    if (!row.errata_note.empty()) ++errata_rows;
  detail << "; errata rows: " << errata_rows << " (R_8 printed N_r corrected to 5)";
  detail << "; published-m discrepancies (soft): " << table.m_discrepancies.size() << " rows";

  bool time_ok = elapsed_single < 1800.0 && elapsed_quad < 600.0;
  pass &= time_ok;
  char buf[96];
  std::snprintf(buf, sizeof buf, " (%.1f s single, limit 1800; %.1f s at 4 workers, limit 600)",
                elapsed_single, elapsed_quad);
  detail << buf;
  report(3, pass, detail.str());
}

// ---- criterion 4: proposition property suite --------------------------

bool power_sum_positive(const StructureMatrix& g) {
  int n = g.dim();
  std::vector<std::int64_t> power(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::int64_t> total(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) power[static_cast<std::size_t>(i) * n + i] = 1;
  total = power;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (power[static_cast<std::size_t>(i) * n + l] == 0) continue;
        for (int j = 0; j < n; ++j)
          next[static_cast<std::size_t>(i) * n + j] +=
              power[static_cast<std::size_t>(i) * n + l] * g.at(l + 1, j + 1);
      }
    power = next;
    for (std::size_t idx = 0; idx < total.size(); ++idx) total[idx] += power[idx];
  }
  for (auto v : total)
    if (v <= 0) return false;
  return true;
}

void criterion4() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  std::uint64_t prop1_checks = 0;
  std::size_t structures_total = 0;
  std::map<int, int> rank_violations;
  std::string rank_witness;

  SplitMix64 perm_rng(424242);
  for (int n = 4; n <= 8; ++n) {
    std::vector<GromovStructure> pool = gromov::testing::sample_structures(n, 1000, 10'000 + n);
    if (n >= 4 && n <= 6)
      for (const auto& e : reference_structures(n)) pool.push_back(e.structure);
    structures_total += pool.size();

    std::map<std::string, std::set<std::size_t>> by_traces, by_charpoly;

    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
      const GromovStructure& s = pool[idx];
      StructureMatrix g = matrix_rep(s);

      // rank equals the removed-edge count
      int rank = rank_rational(g);
      int removed = static_cast<int>(removed_edges(s).size());
      if (rank != removed) {
        pass = false;
        ++rank_violations[n];
        if (rank_witness.empty()) {
          std::ostringstream w;
          w << "n=" << n << " sample #" << idx << " rank " << rank << " vs " << removed
            << " removed edges, structure";
          for (int v = 1; v <= n; ++v)
            w << " " << v << ":{" << s.pair_at(v).first << "," << s.pair_at(v).second << "}";
          rank_witness = w.str();
        }
      }

      // ends equal twice the chain count
      auto decomp = decompose_chains_cycles(s);
      int ends = ends_count(g);
      if (ends != decomp.end_arrow_count() || ends != 2 * decomp.chain_count()) {
        pass = false;
        detail << " [ends mismatch at n=" << n << " #" << idx << "]";
      }

      // intertwining identity for random relabelings
      for (int rep = 0; rep < 100; ++rep) {
        Permutation sigma = random_permutation(n, perm_rng);
        GromovStructure moved = apply_permutation(s, sigma);
        ++prop1_checks;
        if (!verify_similarity(g, sigma, matrix_rep(moved))) {
          pass = false;
          detail << " [similarity identity failed at n=" << n << " #" << idx << "]";
          break;
        }
      }

      // structural irreducibility matches positivity of I + G + ... + G^n
      if (is_irreducible(g) != power_sum_positive(g)) {
        pass = false;
        detail << " [irreducibility/positivity split at n=" << n << " #" << idx << "]";
      }

      std::string traces;
      for (const auto& p : trace_powers(g)) traces += p.get_str() + ",";
      by_traces[traces].insert(idx);
      by_charpoly[coeff_key(char_poly(g))].insert(idx);
    }

    // equal trace powers if and only if equal characteristic polynomials
    std::set<std::set<std::size_t>> parts_traces, parts_charpoly;
    for (auto& [key, members] : by_traces) parts_traces.insert(members);
    for (auto& [key, members] : by_charpoly) parts_charpoly.insert(members);
    if (parts_traces != parts_charpoly) {
      pass = false;
      detail << " [trace-power/char-poly partitions differ at n=" << n << "]";
    }
  }

  if (!rank_violations.empty()) {
    detail << " rank/removed-edge identity violated:";
    for (auto [n, count] : rank_violations) detail << " n=" << n << ": " << count << "/1000;";
    detail << " first witness: " << rank_witness
           << "; cause: the removed-edge set contains an even cycle, whose incidence rows are"
              " dependent -- realizable from 7 points on, never observed for n<=6; the identity"
              " holds for every n<=6 sample and all 30 catalog rows";
  }

  std::ostringstream head;
  head << structures_total << " structures over n=4..8 (incl. all 30 catalog rows): "
       << "rank=removed, ends=2*chains, trace<->charpoly partitions, " << prop1_checks
       << " similarity identities, irreducibility<->positivity;";
  char buf[48];
  std::snprintf(buf, sizeof buf, " (%.1f s)", timer.seconds());
  report(4, pass, head.str() + detail.str() + buf);
}

// ---- criterion 5: search vs brute force -------------------------------

void criterion5() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  std::size_t pairs_checked = 0;

  auto agree = [&](const GromovStructure& a, const GromovStructure& b) {
    bool brute = brute_force_equiv(a, b).has_value();
    auto sigma = are_equivalent(a, b);
    if (sigma && apply_permutation(a, *sigma) != b) return false;
    ++pairs_checked;
    return brute == sigma.has_value();
  };

  for (int n : {4, 5, 6}) {
    const auto& catalog = reference_structures(n);
    for (std::size_t i = 0; i < catalog.size(); ++i)
      for (std::size_t j = i; j < catalog.size(); ++j) {
        if (i == j && n != 4) continue;  // the n=4 catalog has a single row: use its self-pair
        bool ok = agree(catalog[i].structure, catalog[j].structure);
        bool expect_equivalent = i == j;
        bool got_equivalent = are_equivalent(catalog[i].structure, catalog[j].structure).has_value();
        if (!ok || got_equivalent != expect_equivalent) {
          pass = false;
          detail << " [catalog pair " << catalog[i].label << "/" << catalog[j].label << "]";
        }
      }
  }

  // fifty random six-point pairs, mixing relabelings with unrelated samples
  SplitMix64 rng(5150);
  auto pool = gromov::testing::sample_structures(6, 60, 90210);
  for (int rep = 0; rep < 50; ++rep) {
    const GromovStructure& a = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    GromovStructure b = (rep % 2 == 0)
                            ? apply_permutation(a, random_permutation(6, rng))
                            : pool[static_cast<std::size_t>(rng.below(pool.size()))];
    if (!agree(a, b)) {
      pass = false;
      detail << " [random pair " << rep << "]";
    }
  }

  // R_1 vs R_3 share every fingerprint field yet are inequivalent
  GromovStructure r1 = structure_of("124 213 324 413 513 613");
  GromovStructure r3 = structure_of("124 213 324 413 513 624");
  bool same_fp = fingerprint(r1) == fingerprint(r3);
  bool inequivalent = !are_equivalent(r1, r3).has_value();
  if (!same_fp || !inequivalent) pass = false;
  detail << " R_1/R_3: identical fingerprints " << (same_fp ? "yes" : "NO")
         << ", decided inequivalent " << (inequivalent ? "yes" : "NO");

  // the eleven rows sharing k = (t-2)(t+2)t^4 stay pairwise distinct
  const char* iso[] = {"R_1", "R_2", "R_3", "R_4", "R_5", "R_6",
                       "I_1", "I_5", "I_6", "I_12", "I_13"};
  std::vector<GromovStructure> iso_structures;
  for (const auto& entry : reference_structures(6))
    for (const char* label : iso)
      if (entry.label == label) iso_structures.push_back(entry.structure);
  bool iso_ok = iso_structures.size() == 11;
  int iso_pairs = 0;
  for (std::size_t i = 0; i < iso_structures.size(); ++i)
    for (std::size_t j = i + 1; j < iso_structures.size(); ++j) {
      if (are_equivalent(iso_structures[i], iso_structures[j]).has_value()) iso_ok = false;
      ++iso_pairs;
    }
  pass &= iso_ok;
  detail << "; isospectral block: " << iso_pairs << " pairs pairwise inequivalent "
         << (iso_ok ? "yes" : "NO");

  std::ostringstream head;
  head << pairs_checked << " oracle comparisons agree;";
  char buf[48];
  std::snprintf(buf, sizeof buf, " (%.1f s)", timer.seconds());
  report(5, pass, head.str() + detail.str() + buf);
}

// ---- criterion 6: worker-count determinism ----------------------------

void criterion6() {
  bool pass = !g_registry_json_threads1.empty() &&
              g_registry_json_threads1 == g_registry_json_threads4;
  std::ostringstream detail;
  detail << "registry JSON byte-identical for 1 vs 4 workers (n=6, 10^6 samples): "
         << (pass ? "yes" : "NO") << " (" << g_registry_json_threads1.size() << " bytes)";
  report(6, pass, detail.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  if (g_failures == 0) {
    std::printf("acceptance: all 6 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion/criteria FAILED\n", g_failures);
  return 1;
}
