#pragma once

#include <cstdint>
#include <vector>

#include "vcem/dataset.hpp"

namespace vcem {

struct DifficultyConfig {
    double sample_fraction = 0.25;  // in (0, 1]
    std::uint64_t seed = 0;
};

// Mean of a seeded uniform-without-replacement sample of
// max(1, floor(sample_fraction * L)) step losses. The sample is the first m
// entries of a partial Fisher-Yates shuffle of [0, L) driven by
// Rng(cfg.seed), accumulated in selection order. sample_fraction == 1 skips
// sampling and returns the mean over the original order.
double estimate_difficulty(const TrajectoryRecord& record, const DifficultyConfig& cfg);

// Per-record difficulties, aligned with dataset order. A record's precomputed
// difficulty field takes precedence; otherwise the losses are aggregated with
// a per-record stream seeded by sub_seed(cfg.seed, record index), so the
// result is independent of evaluation order.
std::vector<double> difficulties(const Dataset& dataset, const DifficultyConfig& cfg);

}  // namespace vcem
