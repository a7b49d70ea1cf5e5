#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcem/errors.hpp"

namespace vcem {

// One trajectory data point: an embedding plus optional per-step losses
// and/or a precomputed difficulty scalar.
struct TrajectoryRecord {
    std::string id;
    std::vector<double> embedding;
    std::optional<std::vector<double>> step_losses;
    std::optional<double> difficulty;
};

// Immutable after load; record order is the canonical index order used by
// every downstream module.
struct Dataset {
    std::vector<TrajectoryRecord> records;
    std::size_t dim = 0;

    std::size_t size() const { return records.size(); }
};

// JSONL: one object per line with keys id (string), embedding (number array),
// optional losses (number array), optional difficulty (number).
Dataset load_jsonl(const std::string& path);
void save_jsonl(const Dataset& ds, const std::string& path);

// VCEM1 binary: 5 magic bytes "VCEM1", u32 LE n, u32 LE d, then n*d
// little-endian 32-bit floats row-major. Ids are synthesized as zero-padded
// 6-wide decimal row indices. Records carry no losses or difficulty.
Dataset load_matrix(const std::string& path);
void save_matrix(const Dataset& ds, const std::string& path);

// Deterministic synthetic dataset (see rng.hpp for the PRNG contract).
// Draw order, with rng = Rng(seed):
//   1. n_clusters centers, each d uniforms in [-10, 10]
//   2. n_clusters loss levels mu_c, uniform in [0.1, 2.0]
//   3. per record i (cluster c = i mod n_clusters):
//        d draws of center[c] + spread * normal()
//        8 losses |mu_c + sqrt(0.1) * normal()|   (variance 0.1)
// Ids are zero-padded 6-wide decimal record indices.
Dataset synth_dataset(std::uint64_t seed, std::size_t n, std::size_t d,
                      std::size_t n_clusters, double spread);

}  // namespace vcem
