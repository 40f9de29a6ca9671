#include "infbandit/kernels.hpp"

#include <cmath>

#include "infbandit/rng.hpp"

namespace infbandit::kern {

std::uint64_t bernoulli_threshold(double p) {
    return static_cast<std::uint64_t>(std::ceil(p * 9007199254740992.0));  // 2^53
}

namespace scalar {

std::size_t bernoulli_hits(std::uint64_t key, std::uint64_t counter0,
                           const std::uint64_t* thresholds, std::size_t m,
                           std::uint8_t* mask) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t x = stream_at(key, counter0 + i) >> 11;
        const std::uint8_t hit = x < thresholds[i] ? 1 : 0;
        mask[i] = hit;
        hits += hit;
    }
    return hits;
}

std::int32_t max_i32(const std::int32_t* v, std::size_t n) {
    std::int32_t best = v[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (v[i] > best) best = v[i];
    }
    return best;
}

std::size_t count_within_gap(const std::int32_t* counts, std::size_t n,
                             std::int32_t cmax, double scale, double width) {
    std::size_t kept = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double gap = static_cast<double>(cmax - counts[i]) * scale;
        if (gap <= width) ++kept;
    }
    return kept;
}

std::size_t best_score_index(const double* means, const double* vars,
                             const std::int32_t* pulls, const double* bonus,
                             const double* bonus_sqrt, std::size_t n) {
    std::size_t best_i = 0;
    double best_score = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t t = pulls[i];
        const double score =
            (means[i] + (2.0 * (std::sqrt(vars[i]) * bonus_sqrt[t]))) + (2.0 * bonus[t]);
        if (i == 0 || score > best_score) {
            best_score = score;
            best_i = i;
        }
    }
    return best_i;
}

void accumulate_curve(double* sum, double* sumsq, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        sum[i] += x[i];
        sumsq[i] += x[i] * x[i];
    }
}

}  // namespace scalar
}  // namespace infbandit::kern
