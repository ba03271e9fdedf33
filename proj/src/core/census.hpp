#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/invariants.hpp"
#include "core/metric.hpp"
#include "core/structure.hpp"

namespace gromov {

// Deterministic stream generator (SplitMix64). Every sample ordinal gets an
// independent stream derived from (seed, ordinal), so results do not depend
// on how ordinals are partitioned across workers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  static std::uint64_t mix(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t ordinal) {
    return mix(seed + 0x9E3779B97F4A7C15ull * (ordinal + 1));
  }

 private:
  std::uint64_t state_;
};

struct SamplerConfig {
  int n = 0;
  std::uint64_t sample_budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t weight_max = kDefaultWeightMax;  // weights drawn from [1, weight_max]

  static constexpr std::uint64_t kDefaultWeightMax = 1ull << 20;

  void validate() const;

  bool operator==(const SamplerConfig& other) const = default;
  bool operator<(const SamplerConfig& other) const;
};

// Integer edge weights for one sample, in pair-index order
// (1,2), (1,3), (2,3), (1,4), ... Deterministic in (seed, ordinal).
std::vector<std::int64_t> sample_weights(const SamplerConfig& cfg, std::uint64_t ordinal);

// The shortest-path closure of those weights, as an exact metric space.
MetricSpace sample_metric(const SamplerConfig& cfg, std::uint64_t ordinal);

// Structure of that sample's metric, or nullopt when some minimum is tied.
// Runs on int64 (exact for integer weights); agrees with extracting from
// sample_metric by construction, which the tests cross-check.
std::optional<GromovStructure> sample_structure(const SamplerConfig& cfg, std::uint64_t ordinal);

struct ClassRecord {
  GromovStructure canonical;
  InvariantFingerprint fingerprint;
  std::uint64_t hits = 0;
  std::uint64_t witness_seed = 0;
  std::uint64_t witness_ordinal = 0;
  MetricSpace witness;
};

struct ClassRegistry {
  int n = 0;
  std::vector<SamplerConfig> configs;             // contributing configs, sorted
  std::map<std::string, ClassRecord> records;     // canonical flat key -> record
  std::uint64_t samples_drawn = 0;
  std::uint64_t samples_nongeneric = 0;

  std::uint64_t class_count() const { return records.size(); }
  std::uint64_t reducible_count() const;
  std::uint64_t irreducible_count() const;
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

// Samples cfg.sample_budget metrics, extracts structures (counting ties as
// non-generic rejections), canonicalizes, and tallies classes. The result is
// identical for any worker count; workers partition the ordinal range and
// their partial registries are merged.
ClassRegistry run_census(const SamplerConfig& cfg, int threads = 1, ProgressFn progress = {});

// Union by canonical key: hits are summed, the witness with the smallest
// (seed, ordinal) wins, counters add up. Associative and commutative.
ClassRegistry merge_registries(const ClassRegistry& a, const ClassRegistry& b);

std::string registry_to_json(const ClassRegistry& registry);
ClassRegistry registry_from_json(std::string_view text);

}  // namespace gromov
