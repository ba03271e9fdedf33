#include "core/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "core/equivalence.hpp"
#include "core/errors.hpp"
#include "core/report.hpp"

namespace gromov {

bool SamplerConfig::operator<(const SamplerConfig& other) const {
  return std::tie(n, sample_budget, seed, weight_max) <
         std::tie(other.n, other.sample_budget, other.seed, other.weight_max);
}

void SamplerConfig::validate() const {
  if (n < 3) throw Error(ErrorCode::TooSmall, "census needs n >= 3, got " + std::to_string(n));
  if (n > kMaxCanonicalPoints)
    throw Error(ErrorCode::SizeLimitExceeded,
                "census supports up to " + std::to_string(kMaxCanonicalPoints) + " points");
  if (sample_budget < 1) throw Error(ErrorCode::InvalidArgument, "sample budget must be >= 1");
  if (weight_max < 2) throw Error(ErrorCode::InvalidArgument, "weight range needs at least [1, 2]");
  if (weight_max > (1ull << 32))
    throw Error(ErrorCode::InvalidArgument, "weight range above 2^32 is not supported");
}

std::vector<std::int64_t> sample_weights(const SamplerConfig& cfg, std::uint64_t ordinal) {
  cfg.validate();
  SplitMix64 rng(SplitMix64::stream_seed(cfg.seed, ordinal));
  std::size_t pair_count = static_cast<std::size_t>(cfg.n) * (cfg.n - 1) / 2;
  std::vector<std::int64_t> weights(pair_count);
  for (auto& w : weights) w = static_cast<std::int64_t>(rng.below(cfg.weight_max)) + 1;
  return weights;
}

MetricSpace sample_metric(const SamplerConfig& cfg, std::uint64_t ordinal) {
  std::vector<std::int64_t> weights = sample_weights(cfg, ordinal);
  std::vector<Rat> rational(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) rational[i] = Rat(static_cast<long>(weights[i]));
  return apsp_closure(cfg.n, rational);
}

std::uint64_t ClassRegistry::reducible_count() const {
  std::uint64_t c = 0;
  for (const auto& [key, record] : records)
    if (!record.fingerprint.irreducible) ++c;
  return c;
}

std::uint64_t ClassRegistry::irreducible_count() const {
  return records.size() - reducible_count();
}

namespace {

// Integer sampling path: weights are integers, shortest paths are sums of
// weights, and minima are compared via the doubled products
// d(i,j)+d(i,k)-d(j,k), so everything stays exact in int64. Fills raw_key
// (2n bytes, 0-based pair per vertex) and returns false on a tied minimum.
bool int_sample_structure(const SamplerConfig& cfg, std::uint64_t ordinal,
                          std::vector<std::int64_t>& dist, std::string& raw_key) {
  const int n = cfg.n;
  dist.assign(static_cast<std::size_t>(n) * n, 0);
  raw_key.assign(static_cast<std::size_t>(2 * n), '\0');

  SplitMix64 rng(SplitMix64::stream_seed(cfg.seed, ordinal));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      auto w = static_cast<std::int64_t>(rng.below(cfg.weight_max)) + 1;
      dist[static_cast<std::size_t>(i) * n + j] = w;
      dist[static_cast<std::size_t>(j) * n + i] = w;
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      std::int64_t dik = dist[static_cast<std::size_t>(i) * n + k];
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        std::int64_t via = dik + dist[static_cast<std::size_t>(k) * n + j];
        if (via < dist[static_cast<std::size_t>(i) * n + j])
          dist[static_cast<std::size_t>(i) * n + j] = via;
      }
    }

  for (int i = 0; i < n; ++i) {
    std::int64_t best = 0;
    int best_a = -1, best_b = -1;
    bool tied = false;
    for (int a = 0; a < n; ++a) {
      if (a == i) continue;
      std::int64_t dia = dist[static_cast<std::size_t>(i) * n + a];
      for (int b = a + 1; b < n; ++b) {
        if (b == i) continue;
        std::int64_t doubled = dia + dist[static_cast<std::size_t>(i) * n + b] -
                               dist[static_cast<std::size_t>(a) * n + b];
        if (best_a < 0 || doubled < best) {
          best = doubled;
          best_a = a;
          best_b = b;
          tied = false;
        } else if (doubled == best) {
          tied = true;
        }
      }
    }
    if (tied) return false;
    raw_key[static_cast<std::size_t>(2 * i)] = static_cast<char>(best_a);
    raw_key[static_cast<std::size_t>(2 * i + 1)] = static_cast<char>(best_b);
  }
  return true;
}

GromovStructure structure_from_flat_key(int n, const std::string& key) {
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pairs[static_cast<std::size_t>(i)] = {key[static_cast<std::size_t>(2 * i)] + 1,
                                          key[static_cast<std::size_t>(2 * i + 1)] + 1};
  return GromovStructure(n, std::move(pairs));
}

// One worker's pass over a contiguous ordinal range. Canonical keys are
// memoized per raw structure.
struct CensusWorker {
  const SamplerConfig& cfg;
  std::uint64_t begin, end;
  ClassRegistry local;
  std::unordered_map<std::string, std::string> canon_memo;
  static constexpr std::size_t kMemoCap = 1u << 20;

  std::atomic<std::uint64_t>* done_counter = nullptr;

  CensusWorker(const SamplerConfig& c, std::uint64_t b, std::uint64_t e) : cfg(c), begin(b), end(e) {
    local.n = cfg.n;
    local.configs.push_back(cfg);
  }

  void run() {
    const int n = cfg.n;
    std::vector<std::int64_t> dist;
    std::string raw_key;

    for (std::uint64_t ordinal = begin; ordinal < end; ++ordinal) {
      ++local.samples_drawn;
      if (done_counter && (ordinal - begin) % 8192 == 8191)
        done_counter->fetch_add(8192, std::memory_order_relaxed);

      if (!int_sample_structure(cfg, ordinal, dist, raw_key)) {
        ++local.samples_nongeneric;
        continue;
      }

      std::string canonical_key;
      if (auto it = canon_memo.find(raw_key); it != canon_memo.end()) {
        canonical_key = it->second;
      } else {
        canonical_key = canonicalize(raw_key);
        if (canon_memo.size() < kMemoCap) canon_memo.emplace(raw_key, canonical_key);
      }

      auto it = local.records.find(canonical_key);
      if (it != local.records.end()) {
        ++it->second.hits;
        continue;
      }

      GromovStructure canonical = structure_from_flat_key(cfg.n, canonical_key);
      ClassRecord record{canonical, fingerprint(canonical), 1, cfg.seed, ordinal,
                         sample_metric(cfg, ordinal)};
      local.records.emplace(canonical_key, std::move(record));
    }
    if (done_counter) done_counter->fetch_add((end - begin) % 8192, std::memory_order_relaxed);
  }

  std::string canonicalize(const std::string& key) const {
    return canonical_form(structure_from_flat_key(cfg.n, key)).structure.flat_key();
  }
};

}  // namespace

std::optional<GromovStructure> sample_structure(const SamplerConfig& cfg, std::uint64_t ordinal) {
  cfg.validate();
  std::vector<std::int64_t> dist;
  std::string raw_key;
  if (!int_sample_structure(cfg, ordinal, dist, raw_key)) return std::nullopt;
  return structure_from_flat_key(cfg.n, raw_key);
}

ClassRegistry merge_registries(const ClassRegistry& a, const ClassRegistry& b) {
  if (a.n != b.n)
    throw Error(ErrorCode::SizeMismatch, "registries are for different point counts");
  ClassRegistry out;
  out.n = a.n;
  out.configs = a.configs;
  out.configs.insert(out.configs.end(), b.configs.begin(), b.configs.end());
  std::sort(out.configs.begin(), out.configs.end());
  out.configs.erase(std::unique(out.configs.begin(), out.configs.end()), out.configs.end());
  out.samples_drawn = a.samples_drawn + b.samples_drawn;
  out.samples_nongeneric = a.samples_nongeneric + b.samples_nongeneric;
  out.records = a.records;
  for (const auto& [key, record] : b.records) {
    auto [it, inserted] = out.records.emplace(key, record);
    if (!inserted) {
      it->second.hits += record.hits;
      if (std::tie(record.witness_seed, record.witness_ordinal) <
          std::tie(it->second.witness_seed, it->second.witness_ordinal)) {
        it->second.witness_seed = record.witness_seed;
        it->second.witness_ordinal = record.witness_ordinal;
        it->second.witness = record.witness;
      }
    }
  }
  return out;
}

ClassRegistry run_census(const SamplerConfig& cfg, int threads, ProgressFn progress) {
  cfg.validate();
  if (threads < 1) threads = 1;
  std::uint64_t budget = cfg.sample_budget;
  if (static_cast<std::uint64_t>(threads) > budget) threads = static_cast<int>(budget);

  std::vector<CensusWorker> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  std::uint64_t chunk = budget / threads, extra = budget % threads, start = 0;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t len = chunk + (static_cast<std::uint64_t>(t) < extra ? 1 : 0);
    workers.emplace_back(cfg, start, start + len);
    start += len;
  }

  std::atomic<std::uint64_t> done{0};
  std::atomic<bool> stop_progress{false};
  for (auto& w : workers) w.done_counter = &done;

  std::thread reporter;
  if (progress)
    reporter = std::thread([&]() {
      std::uint64_t last = 0;
      while (!stop_progress.load(std::memory_order_relaxed)) {
        std::uint64_t now = done.load(std::memory_order_relaxed);
        if (now != last) {
          progress(now, budget);
          last = now;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(200));
      }
    });

  if (threads == 1) {
    workers[0].run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers.size());
    for (auto& w : workers) pool.emplace_back([&w]() { w.run(); });
    for (auto& t : pool) t.join();
  }

  stop_progress.store(true, std::memory_order_relaxed);
  if (reporter.joinable()) reporter.join();
  if (progress) progress(budget, budget);

  ClassRegistry result = std::move(workers[0].local);
  for (std::size_t i = 1; i < workers.size(); ++i)
    result = merge_registries(result, workers[i].local);
  return result;
}

namespace {

nlohmann::json config_json(const SamplerConfig& cfg) {
  return nlohmann::json{{"n", cfg.n},
                        {"samples", cfg.sample_budget},
                        {"seed", cfg.seed},
                        {"weight_max", cfg.weight_max}};
}

SamplerConfig config_from_json(const nlohmann::json& j) {
  SamplerConfig cfg;
  cfg.n = j.at("n").get<int>();
  cfg.sample_budget = j.at("samples").get<std::uint64_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.weight_max = j.at("weight_max").get<std::uint64_t>();
  return cfg;
}

}  // namespace

std::string registry_to_json(const ClassRegistry& registry) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["n"] = registry.n;
  j["configs"] = nlohmann::json::array();
  for (const auto& cfg : registry.configs) j["configs"].push_back(config_json(cfg));
  j["samples_drawn"] = registry.samples_drawn;
  j["samples_nongeneric"] = registry.samples_nongeneric;
  if (registry.records.empty())
    j["warnings"] = {"no generic sample was seen; the registry is empty"};
  j["classes"] = nlohmann::json::array();
  for (const auto& [key, record] : registry.records) {
    nlohmann::json c;
    c["structure"] = format_structure(record.canonical);
    c["fingerprint"] = fingerprint_json(record.fingerprint);
    c["hits"] = record.hits;
    c["witness"] = {{"seed", record.witness_seed},
                    {"ordinal", record.witness_ordinal},
                    {"metric_csv_lower", format_metric_csv_lower(record.witness)}};
    j["classes"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

ClassRegistry registry_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad registry JSON: ") + e.what());
  }
  ClassRegistry out;
  try {
    out.n = j.at("n").get<int>();
    for (const auto& c : j.at("configs")) out.configs.push_back(config_from_json(c));
    out.samples_drawn = j.at("samples_drawn").get<std::uint64_t>();
    out.samples_nongeneric = j.at("samples_nongeneric").get<std::uint64_t>();
    for (const auto& c : j.at("classes")) {
      GromovStructure s = parse_structure(c.at("structure").get<std::string>());
      if (canonical_form(s).structure != s)
        throw Error(ErrorCode::InvalidArgument,
                    "registry contains a non-canonical class representative");
      ClassRecord record{s,
                         fingerprint(s),
                         c.at("hits").get<std::uint64_t>(),
                         c.at("witness").at("seed").get<std::uint64_t>(),
                         c.at("witness").at("ordinal").get<std::uint64_t>(),
                         parse_metric(c.at("witness").at("metric_csv_lower").get<std::string>(),
                                      MetricFormat::CsvLower)};
      out.records.emplace(s.flat_key(), std::move(record));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad registry JSON: ") + e.what());
  }
  return out;
}

}  // namespace gromov
