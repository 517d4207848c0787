#include "rqcodes/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <string>

#include "rqcodes/errors.hpp"

namespace rqc::kernels {

MinResult min_xor_popcount_scalar(const std::uint64_t* target, const std::uint64_t* codewords,
                                  std::size_t words, std::size_t count) {
    std::uint64_t best = ~std::uint64_t(0);
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t* cw = codewords + i * words;
        std::uint64_t d = 0;
        for (std::size_t w = 0; w < words; ++w)
            d += static_cast<std::uint64_t>(std::popcount(target[w] ^ cw[w]));
        if (d < best) { best = d; best_i = i; }
    }
    return {best, best_i};
}

MinResult min_table_distance_scalar(const std::uint8_t* target, const std::uint8_t* codewords,
                                    std::size_t n, std::size_t count, const std::uint32_t* table) {
    std::uint64_t best = ~std::uint64_t(0);
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint8_t* cw = codewords + i * n;
        std::uint64_t d = 0;
        for (std::size_t j = 0; j < n; ++j)
            d += table[target[j] ^ cw[j]];
        if (d < best) { best = d; best_i = i; }
    }
    return {best, best_i};
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

Impl env_default() {
    if (const char* e = std::getenv("RQCODES_KERNEL")) {
        std::string v(e);
        if (v == "scalar") return Impl::scalar;
        if (v == "avx2") {
            if (!avx2_supported())
                throw parameter_error("RQCODES_KERNEL=avx2 but CPU lacks AVX2");
            return Impl::avx2;
        }
    }
    return avx2_supported() ? Impl::avx2 : Impl::scalar;
}

Impl g_impl = env_default();

} // namespace

Impl active_impl() { return g_impl; }

void force_impl(Impl impl) {
    if (impl == Impl::avx2 && !avx2_supported())
        throw parameter_error("cannot force avx2 kernels: CPU lacks AVX2");
    g_impl = impl;
}

void reset_impl() { g_impl = env_default(); }

MinResult min_xor_popcount(const std::uint64_t* target, const std::uint64_t* codewords,
                           std::size_t words, std::size_t count) {
    if (g_impl == Impl::avx2)
        return min_xor_popcount_avx2(target, codewords, words, count);
    return min_xor_popcount_scalar(target, codewords, words, count);
}

MinResult min_table_distance(const std::uint8_t* target, const std::uint8_t* codewords,
                             std::size_t n, std::size_t count, const std::uint32_t* table) {
    if (g_impl == Impl::avx2)
        return min_table_distance_avx2(target, codewords, n, count, table);
    return min_table_distance_scalar(target, codewords, n, count, table);
}

} // namespace rqc::kernels
