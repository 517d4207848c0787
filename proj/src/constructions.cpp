#include "rqcodes/constructions.hpp"

#include <string>

namespace rqc {

namespace {

// Guard on total entries, so a 3 x 2^24 request trips the default limit.
void check_width(std::uint64_t rows, std::uint64_t cols, std::uint64_t limit, const char* what) {
    if (rows * cols > limit)
        throw resource_error(std::string(what) + ": " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " entries exceed limit " +
                             std::to_string(limit));
}

std::uint64_t beta_width(const Ring& ring, unsigned k) {
    if (k == 1) return 1;
    unsigned e = static_cast<unsigned>(ring.num_monomials() - 1) * (k - 1);
    return (std::uint64_t(1) << e) * ((std::uint64_t(1) << k) - 1);
}

// Delete every column whose top k-u entries are all zero; `expected_removed`
// is asserted, a mismatch means the construction itself is defective.
RqMatrix delete_zero_top(const RqMatrix& g, unsigned k, unsigned u,
                         std::uint64_t expected_removed, const char* what) {
    std::vector<std::size_t> keep;
    keep.reserve(g.cols);
    for (std::size_t j = 0; j < g.cols; ++j) {
        bool all_zero = true;
        for (unsigned i = 0; i < k - u; ++i)
            if (g.at(i, j) != 0) { all_zero = false; break; }
        if (!all_zero) keep.push_back(j);
    }
    std::uint64_t removed = g.cols - keep.size();
    if (removed != expected_removed)
        throw std::logic_error(std::string(what) + ": deleted " + std::to_string(removed) +
                               " columns, expected " + std::to_string(expected_removed));
    RqMatrix out(g.ring, g.rows, keep.size());
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            out.at(i, j) = g.at(i, keep[j]);
    return out;
}

} // namespace

RqMatrix simplex_alpha_generator(const Ring& ring, unsigned k, std::uint64_t limit) {
    if (k < 1) throw parameter_error("simplex alpha: k must be >= 1");
    unsigned log2_cols = static_cast<unsigned>(ring.num_monomials()) * k;
    if (log2_cols >= 63)
        throw resource_error("simplex alpha: width 2^" + std::to_string(log2_cols) + " is unrepresentable");
    check_width(k, std::uint64_t(1) << log2_cols, limit, "simplex alpha");

    RqMatrix g(ring, 1, ring.size());
    for (std::uint32_t a = 0; a < ring.size(); ++a) g.at(0, a) = static_cast<elem_t>(a);
    for (unsigned kk = 2; kk <= k; ++kk) {
        std::size_t prev_cols = g.cols;
        RqMatrix next(ring, kk, prev_cols * ring.size());
        for (std::uint32_t a = 0; a < ring.size(); ++a) {
            std::size_t base = static_cast<std::size_t>(a) * prev_cols;
            for (std::size_t j = 0; j < prev_cols; ++j) {
                for (std::size_t i = 0; i + 1 < kk; ++i)
                    next.at(i, base + j) = g.at(i, j);
                next.at(kk - 1, base + j) = static_cast<elem_t>(a);
            }
        }
        g = std::move(next);
    }
    return g;
}

RqMatrix simplex_beta_generator(const Ring& ring, unsigned k, std::uint64_t limit) {
    if (k < 1) throw parameter_error("simplex beta: k must be >= 1");
    check_width(k, beta_width(ring, k), limit, "simplex beta");

    if (k == 1) {
        RqMatrix g(ring, 1, 1);
        g.at(0, 0) = ring.one();
        return g;
    }

    std::vector<elem_t> zdivs = ring.zero_divisors();

    if (k == 2) {
        // [ 1-row over all elements | one column (d, 1) per zero divisor ]
        RqMatrix g(ring, 2, ring.size() + zdivs.size());
        for (std::uint32_t a = 0; a < ring.size(); ++a) {
            g.at(0, a) = ring.one();
            g.at(1, a) = static_cast<elem_t>(a);
        }
        for (std::size_t t = 0; t < zdivs.size(); ++t) {
            g.at(0, ring.size() + t) = zdivs[t];
            g.at(1, ring.size() + t) = ring.one();
        }
        return g;
    }

    RqMatrix alpha = simplex_alpha_generator(ring, k - 1, limit);
    RqMatrix beta = simplex_beta_generator(ring, k - 1, limit);
    RqMatrix g(ring, k, alpha.cols + zdivs.size() * beta.cols);
    for (std::size_t j = 0; j < alpha.cols; ++j) {
        g.at(0, j) = ring.one();
        for (std::size_t i = 0; i < alpha.rows; ++i) g.at(i + 1, j) = alpha.at(i, j);
    }
    std::size_t off = alpha.cols;
    for (elem_t d : zdivs) {
        for (std::size_t j = 0; j < beta.cols; ++j) {
            g.at(0, off + j) = d;
            for (std::size_t i = 0; i < beta.rows; ++i) g.at(i + 1, off + j) = beta.at(i, j);
        }
        off += beta.cols;
    }
    return g;
}

RqMatrix macdonald_alpha_generator(const Ring& ring, unsigned k, unsigned u, std::uint64_t limit) {
    if (k < 2 || u < 1 || u > k - 1)
        throw parameter_error("macdonald alpha: need k >= 2 and 1 <= u <= k-1");
    RqMatrix g = simplex_alpha_generator(ring, k, limit);
    std::uint64_t removed = std::uint64_t(1) << (static_cast<unsigned>(ring.num_monomials()) * u);
    return delete_zero_top(g, k, u, removed, "macdonald alpha");
}

RqMatrix macdonald_beta_generator(const Ring& ring, unsigned k, unsigned u, std::uint64_t limit) {
    if (k < 2 || u < 1 || u > k - 1)
        throw parameter_error("macdonald beta: need k >= 2 and 1 <= u <= k-1");
    RqMatrix g = simplex_beta_generator(ring, k, limit);
    return delete_zero_top(g, k, u, beta_width(ring, u), "macdonald beta");
}

BinaryMatrix binary_simplex_alpha(unsigned k) {
    if (k < 1 || k > 24) throw parameter_error("binary simplex alpha: k out of range");
    BinaryMatrix g(k, std::size_t(1) << k);
    // Columns are all binary k-tuples; row i repeats 2^i-blocks, matching the
    // [0...0 1...1 / G_{k-1} G_{k-1}] recursion with row k-1 on top.
    for (std::size_t j = 0; j < g.cols; ++j)
        for (unsigned i = 0; i < k; ++i)
            g.set(k - 1 - i, j, (j >> i) & 1);
    return g;
}

BinaryMatrix binary_simplex_beta(unsigned k) {
    if (k < 2 || k > 24) throw parameter_error("binary simplex beta: k out of range");
    if (k == 2) {
        BinaryMatrix g(2, 3);
        g.set(0, 0, true); g.set(0, 1, true);
        g.set(1, 1, true); g.set(1, 2, true);
        return g;
    }
    BinaryMatrix alpha = binary_simplex_alpha(k - 1);
    BinaryMatrix beta = binary_simplex_beta(k - 1);
    BinaryMatrix g(k, alpha.cols + beta.cols);
    for (std::size_t j = 0; j < alpha.cols; ++j) {
        g.set(0, j, true);
        for (std::size_t i = 0; i < alpha.rows; ++i) g.set(i + 1, j, alpha.get(i, j));
    }
    for (std::size_t j = 0; j < beta.cols; ++j)
        for (std::size_t i = 0; i < beta.rows; ++i) g.set(i + 1, alpha.cols + j, beta.get(i, j));
    return g;
}

BinaryMatrix binary_macdonald(unsigned k, unsigned u) {
    if (k < 2 || u < 1 || u > k - 1)
        throw parameter_error("binary macdonald: need k >= 2 and 1 <= u <= k-1");
    BinaryMatrix g = binary_simplex_alpha(k);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < g.cols; ++j) {
        bool all_zero = true;
        for (unsigned i = 0; i < k - u; ++i)
            if (g.get(i, j)) { all_zero = false; break; }
        if (!all_zero) keep.push_back(j);
    }
    BinaryMatrix out(k, keep.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            out.set(i, j, g.get(i, keep[j]));
    return out;
}

RqMatrix repetition_generator(const Ring& ring, elem_t c, unsigned n) {
    if (c == 0) throw parameter_error("repetition: c must be nonzero");
    if (n < 1) throw parameter_error("repetition: n must be >= 1");
    RqMatrix g(ring, 1, n);
    for (unsigned j = 0; j < n; ++j) g.at(0, j) = c;
    return g;
}

RqMatrix block_repetition_generator(const Ring& ring, unsigned n) {
    if (n < 1) throw parameter_error("block repetition: n must be >= 1");
    RqMatrix g(ring, 1, (static_cast<std::size_t>(ring.size()) - 1) * n);
    std::size_t j = 0;
    for (std::uint32_t a = 1; a < ring.size(); ++a)
        for (unsigned t = 0; t < n; ++t) g.at(0, j++) = static_cast<elem_t>(a);
    return g;
}

} // namespace rqc
