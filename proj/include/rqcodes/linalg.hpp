#ifndef RQCODES_LINALG_HPP
#define RQCODES_LINALG_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rqcodes/ring.hpp"

namespace rqc {

using RqVector = std::vector<elem_t>;

std::uint64_t default_enum_limit();

struct RqMatrix {
    Ring ring;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<elem_t> entries; // row-major

    RqMatrix(const Ring& r, std::size_t nrows, std::size_t ncols)
        : ring(r), rows(nrows), cols(ncols), entries(nrows * ncols, 0) {}

    elem_t& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    elem_t at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    RqVector row(std::size_t i) const {
        return RqVector(entries.begin() + static_cast<std::ptrdiff_t>(i * cols),
                        entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }
};

// Bit-packed binary matrix; each row is cols bits in 64-bit words.
struct BinaryMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::uint64_t>> bits;

    BinaryMatrix() = default;
    BinaryMatrix(std::size_t nrows, std::size_t ncols)
        : rows(nrows), cols(ncols),
          bits(nrows, std::vector<std::uint64_t>((ncols + 63) / 64, 0)) {}

    bool get(std::size_t i, std::size_t j) const { return (bits[i][j >> 6] >> (j & 63)) & 1; }
    void set(std::size_t i, std::size_t j, bool v) {
        if (v) bits[i][j >> 6] |= std::uint64_t(1) << (j & 63);
        else bits[i][j >> 6] &= ~(std::uint64_t(1) << (j & 63));
    }
};

struct BinaryCode {
    std::size_t length = 0;
    std::vector<std::vector<std::uint64_t>> words; // sorted, deduplicated
    unsigned rank = 0;
};

struct CodeOverRq {
    RqMatrix generator;
    std::vector<RqVector> codewords; // sorted, deduplicated, includes 0
    unsigned two_dim = 0;
};

// Full R_q-span of the rows of G. Guarded: |R_q|^rows must not exceed limit.
CodeOverRq enumerate_code(const RqMatrix& G, std::uint64_t limit = default_enum_limit());

// log2 |C|, computed as the F_2-rank of the Lee Gray image.
unsigned two_dimension(const CodeOverRq& code);

enum class GrayMap { lee, hom };

// Entrywise Gray expansion; entry (i,j) becomes the block of columns
// [j*w, (j+1)*w) where w = 2^q (Lee) or 2^{q+1} (hom).
BinaryMatrix gray_image_matrix(const RqMatrix& G, GrayMap map,
                               HomGrayMode mode = HomGrayMode::linear);
BinaryCode gray_image_code(const CodeOverRq& code, GrayMap map,
                           HomGrayMode mode = HomGrayMode::linear);

// Packs the Gray image of one codeword into 64-bit words.
std::vector<std::uint64_t> gray_pack(const Ring& ring, const RqVector& v, GrayMap map,
                                     HomGrayMode mode = HomGrayMode::linear);

// Tor_A(C) = { v in F_2^n : u_A v in C }, read off the enumerated codewords.
// `subset` is the characteristic mask of A; 0 gives the literal Tor_empty.
BinaryCode torsion_code(const CodeOverRq& code, unsigned subset);

// Res(C) per the formula {u : exists v, u + u_A v in C}; requires A nonempty.
BinaryCode residue_code(const CodeOverRq& code, unsigned subset);

bool column_multiset_equal(const RqMatrix& a, const RqMatrix& b);
bool column_multiset_equal(const BinaryMatrix& a, const BinaryMatrix& b);
// True iff the columns of M are the columns of B repeated `copies` times,
// up to order. Wrong widths return false; row mismatch is an error.
bool is_concatenation_of(const RqMatrix& m, const RqMatrix& b, std::uint64_t copies);
bool is_concatenation_of(const BinaryMatrix& m, const BinaryMatrix& b, std::uint64_t copies);

unsigned binary_rank(const BinaryMatrix& m);
// F_2 row span as an explicit code. Guarded by 2^rank <= limit.
BinaryCode binary_span(const BinaryMatrix& m, std::uint64_t limit = default_enum_limit());
// Rows spanning the null space of m's row space (a parity-check matrix).
BinaryMatrix null_space(const BinaryMatrix& m);

// Text formats. rq-matrix: header "rq-matrix q=<q> rows=<r> cols=<c>" then one
// row per line of decimal element bitmasks. bin-matrix: same shape with
// "bin-matrix rows=<r> cols=<c>" and 0/1 strings.
void write_matrix(std::ostream& os, const RqMatrix& m);
RqMatrix read_matrix(std::istream& is);
void write_matrix(std::ostream& os, const BinaryMatrix& m);

} // namespace rqc

#endif
