#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops, implemented twice: a scalar reference and an
// AVX2 variant. The active backend is chosen at runtime (CPUID), and the two
// are required to be bitwise-equivalent: every kernel's contract pins the
// exact operation order, and the kernel translation units are compiled with
// FP contraction off so neither backend fuses multiply-adds.
namespace infbandit::kern {

enum class Backend { scalar, avx2 };

bool avx2_supported();
Backend active_backend();

// Force a specific backend (tests, --backend flag). Throws ConfigError if the
// requested backend is unavailable on this CPU/build.
void force_backend(Backend b);
void reset_backend();
const char* backend_name(Backend b);

// --- kernel contracts -------------------------------------------------------
//
// bernoulli_hits: for i in [0,m), draw x = stream_at(key, counter0 + i) and
// set mask[i] = 1 iff (x >> 11) < thresholds[i], else 0. Returns the number
// of ones. thresholds[i] must be <= 2^53 (see bernoulli_threshold).
//
// max_i32: maximum of v[0..n); n >= 1.
//
// count_within_gap: number of i in [0,n) with
//   double(cmax - counts[i]) * scale <= width
// (one multiply, one compare; counts[i] <= cmax required).
//
// best_score_index: lowest index maximizing
//   score_i = (means[i] + (2.0 * (sqrt(vars[i]) * bonus_sqrt[pulls[i]])))
//           + (2.0 * bonus[pulls[i]])
// with exactly that association; pulls[i] indexes the bonus tables. n >= 1.
//
// accumulate_curve: sum[i] += x[i]; sumsq[i] += x[i] * x[i].

std::size_t bernoulli_hits(std::uint64_t key, std::uint64_t counter0,
                           const std::uint64_t* thresholds, std::size_t m,
                           std::uint8_t* mask);
std::int32_t max_i32(const std::int32_t* v, std::size_t n);
std::size_t count_within_gap(const std::int32_t* counts, std::size_t n,
                             std::int32_t cmax, double scale, double width);
std::size_t best_score_index(const double* means, const double* vars,
                             const std::int32_t* pulls, const double* bonus,
                             const double* bonus_sqrt, std::size_t n);
void accumulate_curve(double* sum, double* sumsq, const double* x, std::size_t n);

// Success threshold for probability p in (0,1]: ceil(p * 2^53). Exact for
// p = 1 (every draw succeeds); otherwise overshoots p by less than 2^-53.
std::uint64_t bernoulli_threshold(double p);

namespace scalar {
std::size_t bernoulli_hits(std::uint64_t key, std::uint64_t counter0,
                           const std::uint64_t* thresholds, std::size_t m,
                           std::uint8_t* mask);
std::int32_t max_i32(const std::int32_t* v, std::size_t n);
std::size_t count_within_gap(const std::int32_t* counts, std::size_t n,
                             std::int32_t cmax, double scale, double width);
std::size_t best_score_index(const double* means, const double* vars,
                             const std::int32_t* pulls, const double* bonus,
                             const double* bonus_sqrt, std::size_t n);
void accumulate_curve(double* sum, double* sumsq, const double* x, std::size_t n);
}  // namespace scalar

#if defined(INFBANDIT_HAVE_AVX2)
namespace avx2 {
std::size_t bernoulli_hits(std::uint64_t key, std::uint64_t counter0,
                           const std::uint64_t* thresholds, std::size_t m,
                           std::uint8_t* mask);
std::int32_t max_i32(const std::int32_t* v, std::size_t n);
std::size_t count_within_gap(const std::int32_t* counts, std::size_t n,
                             std::int32_t cmax, double scale, double width);
std::size_t best_score_index(const double* means, const double* vars,
                             const std::int32_t* pulls, const double* bonus,
                             const double* bonus_sqrt, std::size_t n);
void accumulate_curve(double* sum, double* sumsq, const double* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace infbandit::kern
