#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcem/dataset.hpp"

namespace vcem {

// Selection budget: an absolute pick count, or a fraction of n resolving to
// max(1, floor(fraction * n)).
struct Budget {
    enum class Kind { Count, Fraction } kind = Kind::Fraction;
    std::size_t count = 0;
    double fraction = 0.1;

    static Budget of_count(std::size_t c) { return {Kind::Count, c, 0.0}; }
    static Budget of_fraction(double f) { return {Kind::Fraction, 0, f}; }

    std::size_t resolve(std::size_t n) const;
};

struct CoresetConfig {
    std::size_t k_neighbors = 5;
    double gamma_f = 0.1;  // forward (edge) kernel bandwidth, > 0
    double gamma_r = 0.1;  // reverse (suppression) kernel bandwidth, >= 0
    Budget budget;
};

// Directed k-NN graph over raw embeddings. Each node's list holds its k
// nearest distinct nodes by squared Euclidean distance (ties to the lower
// index), sorted by ascending neighbor index, with RBF edge weights
// exp(-gamma_f * ||v_i - v_j||^2).
struct KnnGraph {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<std::vector<std::pair<std::size_t, double>>> neighbors;
};

struct SelectionPick {
    std::size_t rank;
    std::size_t index;
    std::string id;
    double score_at_selection;
};

struct SelectionManifest {
    CoresetConfig config;
    std::vector<SelectionPick> picks;
    // FNV-1a 64 over the little-endian bytes of the final score vector in
    // index order; picked slots keep their score as of selection.
    std::uint64_t remaining_scores_digest = 0;
};

// Exact brute-force construction over all pairs; parallelizable per node.
KnnGraph build_knn_graph(const Dataset& dataset, const CoresetConfig& cfg,
                         int threads = 1);

// x'_i = x_i + sum over out-neighbors of e_ij * x_j, accumulated in
// ascending-neighbor-index order.
std::vector<double> forward_pass(const KnnGraph& graph, const std::vector<double>& x);

// Greedy selection with reverse-kernel suppression: pick the argmax of the
// remaining scores (ties to the lower index), then subtract
// exp(-gamma_r * ||v_pick - v_j||^2) * score_at_selection from every
// remaining candidate. Picked nodes leave the pool; scores may go negative.
SelectionManifest select(const Dataset& dataset, const KnnGraph& graph,
                         const std::vector<double>& scores, const CoresetConfig& cfg);

// Seeded uniform sample without replacement; pick scores recorded as 0.
SelectionManifest random_baseline(const Dataset& dataset, const Budget& budget,
                                  std::uint64_t seed);

std::uint64_t score_digest(const std::vector<double>& scores);

}  // namespace vcem
