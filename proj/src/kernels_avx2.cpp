// AVX2 variants of the search kernels. This translation unit is compiled with
// -mavx2; callers must gate on kernels::avx2_supported().
#include "rqcodes/kernels.hpp"

#include <bit>
#include <immintrin.h>

namespace rqc::kernels {

namespace {

const __m256i kNibbleCount = _mm256_setr_epi8(
    0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
    0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);

// Per-64-bit-lane popcount of a 256-bit vector.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(kNibbleCount, lo),
                                  _mm256_shuffle_epi8(kNibbleCount, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

} // namespace

__attribute__((target("avx2")))
MinResult min_xor_popcount_avx2(const std::uint64_t* target, const std::uint64_t* codewords,
                                std::size_t words, std::size_t count) {
    std::uint64_t best = ~std::uint64_t(0);
    std::size_t best_i = 0;

    if (words == 1) {
        // Four codewords per vector.
        const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target[0]));
        std::size_t i = 0;
        alignas(32) std::uint64_t d[4];
        for (; i + 4 <= count; i += 4) {
            __m256i cw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(codewords + i));
            _mm256_store_si256(reinterpret_cast<__m256i*>(d),
                               popcount_epi64(_mm256_xor_si256(cw, t)));
            for (int l = 0; l < 4; ++l)
                if (d[l] < best) { best = d[l]; best_i = i + static_cast<std::size_t>(l); }
        }
        for (; i < count; ++i) {
            std::uint64_t dd = static_cast<std::uint64_t>(std::popcount(target[0] ^ codewords[i]));
            if (dd < best) { best = dd; best_i = i; }
        }
        return {best, best_i};
    }

    // Vectorize over the words of each codeword.
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t* cw = codewords + i * words;
        __m256i acc = _mm256_setzero_si256();
        std::size_t w = 0;
        for (; w + 4 <= words; w += 4) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(target + w));
            __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cw + w));
            acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_xor_si256(a, b)));
        }
        alignas(32) std::uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        std::uint64_t d = lanes[0] + lanes[1] + lanes[2] + lanes[3];
        for (; w < words; ++w)
            d += static_cast<std::uint64_t>(std::popcount(target[w] ^ cw[w]));
        if (d < best) { best = d; best_i = i; }
    }
    return {best, best_i};
}

__attribute__((target("avx2")))
MinResult min_table_distance_avx2(const std::uint8_t* target, const std::uint8_t* codewords,
                                  std::size_t n, std::size_t count, const std::uint32_t* table) {
    // Shuffle-LUT path: symbols below 16 and byte-sized table values.
    bool lut_ok = true;
    std::uint8_t lut8[16];
    for (int j = 0; j < 16; ++j) {
        if (table[j] > 0xff) { lut_ok = false; break; }
        lut8[j] = static_cast<std::uint8_t>(table[j]);
    }
    // Symbols >= 16 would index past the shuffle table; detect them once.
    if (lut_ok) {
        for (std::size_t j = 0; j < n && lut_ok; ++j)
            if (target[j] >= 16) lut_ok = false;
        for (std::size_t i = 0; i < n * count && lut_ok; ++i)
            if (codewords[i] >= 16) lut_ok = false;
    }
    if (!lut_ok || n < 32)
        return min_table_distance_scalar(target, codewords, n, count, table);

    __m128i lut128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lut8));
    const __m256i lut = _mm256_broadcastsi128_si256(lut128);

    std::uint64_t best = ~std::uint64_t(0);
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint8_t* cw = codewords + i * n;
        __m256i acc = _mm256_setzero_si256();
        std::size_t j = 0;
        for (; j + 32 <= n; j += 32) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(target + j));
            __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cw + j));
            __m256i w = _mm256_shuffle_epi8(lut, _mm256_xor_si256(a, b));
            acc = _mm256_add_epi64(acc, _mm256_sad_epu8(w, _mm256_setzero_si256()));
        }
        alignas(32) std::uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        std::uint64_t d = lanes[0] + lanes[1] + lanes[2] + lanes[3];
        for (; j < n; ++j)
            d += table[target[j] ^ cw[j]];
        if (d < best) { best = d; best_i = i; }
    }
    return {best, best_i};
}

} // namespace rqc::kernels
