#include "infbandit/kernels.hpp"

#include <atomic>

#include "infbandit/errors.hpp"

namespace infbandit::kern {

namespace {

Backend detect() {
#if defined(INFBANDIT_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
    return Backend::scalar;
}

std::atomic<Backend> g_backend{detect()};

}  // namespace

bool avx2_supported() {
#if defined(INFBANDIT_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void force_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_supported()) {
        throw ConfigError("avx2 backend requested but not available on this CPU/build");
    }
    g_backend.store(b, std::memory_order_relaxed);
}

void reset_backend() { g_backend.store(detect(), std::memory_order_relaxed); }

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

#if defined(INFBANDIT_HAVE_AVX2)
#define INFBANDIT_DISPATCH(fn, ...)                                        \
    (active_backend() == Backend::avx2 ? avx2::fn(__VA_ARGS__)             \
                                       : scalar::fn(__VA_ARGS__))
#else
#define INFBANDIT_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

std::size_t bernoulli_hits(std::uint64_t key, std::uint64_t counter0,
                           const std::uint64_t* thresholds, std::size_t m,
                           std::uint8_t* mask) {
    return INFBANDIT_DISPATCH(bernoulli_hits, key, counter0, thresholds, m, mask);
}

std::int32_t max_i32(const std::int32_t* v, std::size_t n) {
    return INFBANDIT_DISPATCH(max_i32, v, n);
}

std::size_t count_within_gap(const std::int32_t* counts, std::size_t n,
                             std::int32_t cmax, double scale, double width) {
    return INFBANDIT_DISPATCH(count_within_gap, counts, n, cmax, scale, width);
}

std::size_t best_score_index(const double* means, const double* vars,
                             const std::int32_t* pulls, const double* bonus,
                             const double* bonus_sqrt, std::size_t n) {
    return INFBANDIT_DISPATCH(best_score_index, means, vars, pulls, bonus,
                              bonus_sqrt, n);
}

void accumulate_curve(double* sum, double* sumsq, const double* x, std::size_t n) {
    INFBANDIT_DISPATCH(accumulate_curve, sum, sumsq, x, n);
}

#undef INFBANDIT_DISPATCH

}  // namespace infbandit::kern
