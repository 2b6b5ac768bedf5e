#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "assortnet/errors.hpp"
#include "assortnet/graph.hpp"

namespace assortnet {

/// Configuration for random disjoint-clique datasets. Clique sizes are
/// either fixed or drawn uniformly from [size_min, size_max]; author labels
/// are i.i.d. Positive with probability positive_fraction. Draws where one
/// label class ends up empty are kept on purpose so the undefined-metric
/// path gets exercised.
struct SynthConfig {
  std::size_t num_papers = 0;
  std::optional<int> fixed_size;
  int size_min = 2;
  int size_max = 12;
  double positive_fraction = 0.5;
  std::uint64_t seed = 0;
};

inline void validate(const SynthConfig& config) {
  if (config.fixed_size) {
    if (*config.fixed_size < 2) {
      throw ValidationError("clique size must be at least 2");
    }
  } else {
    if (config.size_min < 2) {
      throw ValidationError("minimum clique size must be at least 2");
    }
    if (config.size_max < config.size_min) {
      throw ValidationError("maximum clique size below the minimum");
    }
  }
  if (!(config.positive_fraction > 0.0 && config.positive_fraction < 1.0)) {
    throw ValidationError("positive fraction must lie strictly in (0, 1)");
  }
}

namespace detail {

// Engine outputs are reduced by hand so that the generated bytes depend only
// on the fully specified mt19937_64 sequence, not on the standard library's
// distribution implementations.
inline int draw_int(std::mt19937_64& engine, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine() % span);
}

inline double draw_unit(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Generates num_papers records, deterministically for a given config. The
/// same seed always yields a byte-identical record sequence.
inline std::vector<PaperRecord> generate(const SynthConfig& config) {
  validate(config);

  std::mt19937_64 engine(config.seed);
  std::vector<PaperRecord> records;
  records.reserve(config.num_papers);

  for (std::size_t index = 0; index < config.num_papers; ++index) {
    const int size = config.fixed_size
                         ? *config.fixed_size
                         : detail::draw_int(engine, config.size_min,
                                            config.size_max);
    PaperRecord record;
    record.paper_id = "p" + std::to_string(index + 1);
    record.author_labels.reserve(static_cast<std::size_t>(size));
    for (int author = 0; author < size; ++author) {
      const bool positive =
          detail::draw_unit(engine) < config.positive_fraction;
      record.author_labels.push_back(positive ? GenderLabel::Positive
                                              : GenderLabel::Negative);
    }
    records.push_back(std::move(record));
  }

  return records;
}

}  // namespace assortnet
