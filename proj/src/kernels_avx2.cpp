#include "infbandit/kernels.hpp"

#if defined(INFBANDIT_HAVE_AVX2) && defined(__AVX2__)

#include <immintrin.h>

#include <cmath>
#include <cstring>

#include "infbandit/rng.hpp"

namespace infbandit::kern::avx2 {

namespace {

// 64x64 -> low 64 multiply (AVX2 has no _mm256_mullo_epi64).
inline __m256i mul64_lo(__m256i a, __m256i b) {
    const __m256i lo_lo = _mm256_mul_epu32(a, b);
    const __m256i a_hi = _mm256_srli_epi64(a, 32);
    const __m256i b_hi = _mm256_srli_epi64(b, 32);
    const __m256i cross =
        _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
    return _mm256_add_epi64(lo_lo, _mm256_slli_epi64(cross, 32));
}

// splitmix64 finalizer on four lanes; matches scalar mix64 bit for bit.
inline __m256i mix64x4(__m256i z) {
    const __m256i c1 = _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ull));
    const __m256i c2 = _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBull));
    z = mul64_lo(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)), c1);
    z = mul64_lo(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)), c2);
    return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

// Byte patterns for a 4-bit hit mask, little-endian.
inline std::uint32_t mask_bytes(unsigned bits) {
    return (bits & 1u) | ((bits >> 1) & 1u) << 8 | ((bits >> 2) & 1u) << 16 |
           ((bits >> 3) & 1u) << 24;
}

}  // namespace

std::size_t bernoulli_hits(std::uint64_t key, std::uint64_t counter0,
                           const std::uint64_t* thresholds, std::size_t m,
                           std::uint8_t* mask) {
    std::size_t hits = 0;
    const std::size_t mvec = m & ~std::size_t{3};
    if (mvec != 0) {
        // Lane i carries state key + kGolden*(counter0 + i + 1); wrapping
        // arithmetic matches the scalar stream exactly.
        const std::uint64_t s0 = key + kGolden * (counter0 + 1);
        __m256i state = _mm256_add_epi64(
            _mm256_set1_epi64x(static_cast<long long>(s0)),
            _mm256_set_epi64x(static_cast<long long>(3 * kGolden),
                              static_cast<long long>(2 * kGolden),
                              static_cast<long long>(kGolden), 0));
        const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * kGolden));
        for (std::size_t i = 0; i < mvec; i += 4) {
            const __m256i x = _mm256_srli_epi64(mix64x4(state), 11);
            const __m256i thr = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(thresholds + i));
            // Both sides are < 2^53, so the signed compare is safe.
            const __m256i hit = _mm256_cmpgt_epi64(thr, x);
            const unsigned bits = static_cast<unsigned>(
                _mm256_movemask_pd(_mm256_castsi256_pd(hit)));
            const std::uint32_t bytes = mask_bytes(bits);
            std::memcpy(mask + i, &bytes, 4);
            hits += static_cast<std::size_t>(__builtin_popcount(bits));
            state = _mm256_add_epi64(state, step);
        }
    }
    if (mvec < m) {
        hits += scalar::bernoulli_hits(key, counter0 + mvec, thresholds + mvec,
                                       m - mvec, mask + mvec);
    }
    return hits;
}

std::int32_t max_i32(const std::int32_t* v, std::size_t n) {
    const std::size_t nvec = n & ~std::size_t{7};
    std::int32_t best;
    std::size_t i = 0;
    if (nvec != 0) {
        __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v));
        for (i = 8; i < nvec; i += 8) {
            acc = _mm256_max_epi32(
                acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
        }
        alignas(32) std::int32_t lanes[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        best = lanes[0];
        for (int j = 1; j < 8; ++j) {
            if (lanes[j] > best) best = lanes[j];
        }
    } else {
        best = v[0];
        i = 1;
    }
    for (; i < n; ++i) {
        if (v[i] > best) best = v[i];
    }
    return best;
}

std::size_t count_within_gap(const std::int32_t* counts, std::size_t n,
                             std::int32_t cmax, double scale, double width) {
    std::size_t kept = 0;
    const std::size_t nvec = n & ~std::size_t{3};
    const __m128i cmax4 = _mm_set1_epi32(cmax);
    const __m256d scale4 = _mm256_set1_pd(scale);
    const __m256d width4 = _mm256_set1_pd(width);
    for (std::size_t i = 0; i < nvec; i += 4) {
        const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(counts + i));
        const __m256d gap =
            _mm256_mul_pd(_mm256_cvtepi32_pd(_mm_sub_epi32(cmax4, c)), scale4);
        const __m256d le = _mm256_cmp_pd(gap, width4, _CMP_LE_OQ);
        kept += static_cast<std::size_t>(__builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_pd(le))));
    }
    if (nvec < n) {
        kept += scalar::count_within_gap(counts + nvec, n - nvec, cmax, scale, width);
    }
    return kept;
}

std::size_t best_score_index(const double* means, const double* vars,
                             const std::int32_t* pulls, const double* bonus,
                             const double* bonus_sqrt, std::size_t n) {
    const std::size_t nvec = n & ~std::size_t{3};
    std::size_t best_i = 0;
    double best_score = 0.0;
    bool have_best = false;
    if (nvec != 0) {
        const __m256d two = _mm256_set1_pd(2.0);
        __m256d best_val = _mm256_set1_pd(-HUGE_VAL);
        __m256i best_idx = _mm256_setzero_si256();
        __m256i idx = _mm256_set_epi64x(3, 2, 1, 0);
        const __m256i idx_step = _mm256_set1_epi64x(4);
        for (std::size_t i = 0; i < nvec; i += 4) {
            const __m128i t =
                _mm_loadu_si128(reinterpret_cast<const __m128i*>(pulls + i));
            const __m256d b = _mm256_i32gather_pd(bonus, t, 8);
            const __m256d bs = _mm256_i32gather_pd(bonus_sqrt, t, 8);
            const __m256d sd = _mm256_sqrt_pd(_mm256_loadu_pd(vars + i));
            const __m256d score = _mm256_add_pd(
                _mm256_add_pd(_mm256_loadu_pd(means + i),
                              _mm256_mul_pd(two, _mm256_mul_pd(sd, bs))),
                _mm256_mul_pd(two, b));
            // Strict greater-than keeps the earliest maximum within a lane.
            const __m256d gt = _mm256_cmp_pd(score, best_val, _CMP_GT_OQ);
            best_val = _mm256_blendv_pd(best_val, score, gt);
            best_idx = _mm256_blendv_epi8(best_idx, idx, _mm256_castpd_si256(gt));
            idx = _mm256_add_epi64(idx, idx_step);
        }
        alignas(32) double vals[4];
        alignas(32) long long idxs[4];
        _mm256_store_pd(vals, best_val);
        _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), best_idx);
        best_score = vals[0];
        best_i = static_cast<std::size_t>(idxs[0]);
        for (int j = 1; j < 4; ++j) {
            const auto ij = static_cast<std::size_t>(idxs[j]);
            if (vals[j] > best_score || (vals[j] == best_score && ij < best_i)) {
                best_score = vals[j];
                best_i = ij;
            }
        }
        have_best = true;
    }
    for (std::size_t i = nvec; i < n; ++i) {
        const std::int32_t t = pulls[i];
        const double score =
            (means[i] + (2.0 * (std::sqrt(vars[i]) * bonus_sqrt[t]))) + (2.0 * bonus[t]);
        if (!have_best || score > best_score) {
            best_score = score;
            best_i = i;
            have_best = true;
        }
    }
    return best_i;
}

void accumulate_curve(double* sum, double* sumsq, const double* x, std::size_t n) {
    const std::size_t nvec = n & ~std::size_t{3};
    for (std::size_t i = 0; i < nvec; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(sum + i, _mm256_add_pd(_mm256_loadu_pd(sum + i), xi));
        _mm256_storeu_pd(
            sumsq + i,
            _mm256_add_pd(_mm256_loadu_pd(sumsq + i), _mm256_mul_pd(xi, xi)));
    }
    for (std::size_t i = nvec; i < n; ++i) {
        sum[i] += x[i];
        sumsq[i] += x[i] * x[i];
    }
}

}  // namespace infbandit::kern::avx2

#endif  // INFBANDIT_HAVE_AVX2 && __AVX2__
