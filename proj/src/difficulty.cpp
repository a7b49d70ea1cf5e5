#include "vcem/difficulty.hpp"

#include <cmath>
#include <numeric>

#include "vcem/rng.hpp"

namespace vcem {

double estimate_difficulty(const TrajectoryRecord& record, const DifficultyConfig& cfg) {
    if (!(cfg.sample_fraction > 0.0 && cfg.sample_fraction <= 1.0))
        throw InvalidArg("sample_fraction must be in (0, 1]");
    if (!record.step_losses || record.step_losses->empty())
        throw MissingLosses(record.id);

    const auto& losses = *record.step_losses;
    const std::size_t len = losses.size();
    const auto m = static_cast<std::size_t>(
        std::max<double>(1.0, std::floor(cfg.sample_fraction * static_cast<double>(len))));

    if (m >= len) {
        double sum = 0.0;
        for (double l : losses) sum += l;
        return sum / static_cast<double>(len);
    }

    Rng rng(cfg.seed);
    std::vector<std::size_t> idx(len);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t r = j + rng.bounded(len - j);
        std::swap(idx[j], idx[r]);
        sum += losses[idx[j]];
    }
    return sum / static_cast<double>(m);
}

std::vector<double> difficulties(const Dataset& dataset, const DifficultyConfig& cfg) {
    std::vector<double> out(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto& rec = dataset.records[i];
        if (rec.difficulty) {
            out[i] = *rec.difficulty;
        } else {
            DifficultyConfig per = cfg;
            per.seed = sub_seed(cfg.seed, i);
            out[i] = estimate_difficulty(rec, per);
        }
    }
    return out;
}

}  // namespace vcem
