#ifndef RQCODES_CONSTRUCTIONS_HPP
#define RQCODES_CONSTRUCTIONS_HPP

#include "rqcodes/linalg.hpp"

namespace rqc {

// Simplex code of type alpha: k x 2^{2^q k}, columns are all k-tuples over
// R_q exactly once, scalars iterated in canonical element order.
RqMatrix simplex_alpha_generator(const Ring& ring, unsigned k,
                                 std::uint64_t limit = default_enum_limit());

// Simplex code of type beta. Width 2^{(2^q-1)(k-1)} (2^k - 1).
// The k = 1 base case is the single column (1); the paper leaves it
// undefined, and the MacDonald beta deletion with u = 1 needs it.
RqMatrix simplex_beta_generator(const Ring& ring, unsigned k,
                                std::uint64_t limit = default_enum_limit());

// MacDonald codes: delete every column whose top k-u entries are all zero.
RqMatrix macdonald_alpha_generator(const Ring& ring, unsigned k, unsigned u,
                                   std::uint64_t limit = default_enum_limit());
RqMatrix macdonald_beta_generator(const Ring& ring, unsigned k, unsigned u,
                                  std::uint64_t limit = default_enum_limit());

// Binary simplex codes: alpha is k x 2^k with all binary k-tuples as columns,
// beta is k x (2^k - 1).
BinaryMatrix binary_simplex_alpha(unsigned k);
BinaryMatrix binary_simplex_beta(unsigned k);
// Binary MacDonald generator: binary simplex alpha minus the columns whose
// top k-u entries are all zero.
BinaryMatrix binary_macdonald(unsigned k, unsigned u);

// Repetition code generators. Type 1 uses any nonzero c; type 2 is c = theta.
RqMatrix repetition_generator(const Ring& ring, elem_t c, unsigned n);
// 1 x (2^{2^q}-1) n row: every nonzero element in canonical order, n times each.
RqMatrix block_repetition_generator(const Ring& ring, unsigned n);

} // namespace rqc

#endif
