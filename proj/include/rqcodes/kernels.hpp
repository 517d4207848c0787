#ifndef RQCODES_KERNELS_HPP
#define RQCODES_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Inner loops of the exhaustive search engines. Each kernel has a scalar
// reference implementation and an AVX2 variant; the active one is picked at
// runtime from CPU features (override with RQCODES_KERNEL=scalar|avx2|auto
// or force_impl, e.g. in the equivalence tests).
namespace rqc::kernels {

struct MinResult {
    std::uint64_t dist;
    std::size_t index; // first codeword attaining dist
};

// Minimum Hamming distance from `target` to `count` codewords, each stored as
// `words` contiguous 64-bit words.
MinResult min_xor_popcount(const std::uint64_t* target, const std::uint64_t* codewords,
                           std::size_t words, std::size_t count);

// Minimum of sum_i table[target[i] ^ codeword[i]] over `count` codewords of
// `n` byte-symbols each. `table` has 256 entries.
MinResult min_table_distance(const std::uint8_t* target, const std::uint8_t* codewords,
                             std::size_t n, std::size_t count, const std::uint32_t* table);

enum class Impl { scalar, avx2 };

Impl active_impl();
bool avx2_supported();
// Throws rqc::parameter_error when forcing avx2 on a CPU without it.
void force_impl(Impl impl);
void reset_impl(); // back to env/CPU default

// Direct entry points for equivalence testing.
MinResult min_xor_popcount_scalar(const std::uint64_t* target, const std::uint64_t* codewords,
                                  std::size_t words, std::size_t count);
MinResult min_xor_popcount_avx2(const std::uint64_t* target, const std::uint64_t* codewords,
                                std::size_t words, std::size_t count);
MinResult min_table_distance_scalar(const std::uint8_t* target, const std::uint8_t* codewords,
                                    std::size_t n, std::size_t count, const std::uint32_t* table);
MinResult min_table_distance_avx2(const std::uint8_t* target, const std::uint8_t* codewords,
                                  std::size_t n, std::size_t count, const std::uint32_t* table);

} // namespace rqc::kernels

#endif
