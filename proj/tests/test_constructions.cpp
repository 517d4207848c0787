#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "rqcodes/constructions.hpp"

using namespace rqc;

namespace {

std::uint64_t beta_width(int q, unsigned k) {
    if (k == 1) return 1;
    unsigned e = ((1u << q) - 1) * (k - 1);
    return (std::uint64_t(1) << e) * ((std::uint64_t(1) << k) - 1);
}

std::set<RqVector> column_set(const RqMatrix& g) {
    std::set<RqVector> cols;
    for (std::size_t j = 0; j < g.cols; ++j) {
        RqVector c(g.rows);
        for (std::size_t i = 0; i < g.rows; ++i) c[i] = g.at(i, j);
        cols.insert(c);
    }
    return cols;
}

} // namespace

TEST_CASE("simplex alpha columns are all k-tuples exactly once") {
    const std::pair<int, unsigned> points[] = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
    for (auto [q, k] : points) {
        Ring ring(q);
        RqMatrix g = simplex_alpha_generator(ring, k);
        std::uint64_t expect = std::uint64_t(1) << (unsigned(ring.num_monomials()) * k);
        CHECK(g.rows == k);
        CHECK(g.cols == expect);
        CHECK(column_set(g).size() == expect); // distinct, hence each tuple once
    }
}

TEST_CASE("simplex alpha scalar order is canonical") {
    Ring ring(1);
    RqMatrix g = simplex_alpha_generator(ring, 2);
    // last row walks the element order in blocks of |R| columns
    for (std::uint32_t a = 0; a < ring.size(); ++a)
        for (std::uint32_t j = 0; j < ring.size(); ++j) {
            CHECK(g.at(1, a * ring.size() + j) == static_cast<elem_t>(a));
            CHECK(g.at(0, a * ring.size() + j) == static_cast<elem_t>(j));
        }
}

TEST_CASE("simplex alpha rows are balanced") {
    for (int q = 1; q <= 2; ++q)
        for (unsigned k = 1; k <= (q == 1 ? 3u : 2u); ++k) {
            Ring ring(q);
            RqMatrix g = simplex_alpha_generator(ring, k);
            std::uint64_t per = g.cols / ring.size();
            for (std::size_t i = 0; i < g.rows; ++i) {
                std::map<elem_t, std::uint64_t> hist;
                for (std::size_t j = 0; j < g.cols; ++j) ++hist[g.at(i, j)];
                CHECK(hist.size() == ring.size());
                for (const auto& [e, c] : hist) CHECK(c == per);
            }
        }
}

TEST_CASE("simplex beta width formula for q <= 2, k <= 3") {
    for (int q = 1; q <= 2; ++q)
        for (unsigned k = 1; k <= 3; ++k) {
            Ring ring(q);
            RqMatrix g = simplex_beta_generator(ring, k);
            CHECK(g.rows == k);
            CHECK(g.cols == beta_width(q, k));
        }
}

TEST_CASE("simplex beta k=2 layout: unit row over all elements then zero-divisor columns") {
    Ring ring(1);
    RqMatrix g = simplex_beta_generator(ring, 2);
    CHECK(g.cols == 6);
    for (std::uint32_t a = 0; a < 4; ++a) {
        CHECK(g.at(0, a) == ring.one());
        CHECK(g.at(1, a) == static_cast<elem_t>(a));
    }
    CHECK(g.at(0, 4) == 0);
    CHECK(g.at(1, 4) == ring.one());
    CHECK(g.at(0, 5) == 2); // u_1
    CHECK(g.at(1, 5) == ring.one());
}

TEST_CASE("macdonald lengths match the closed forms and deletions never misfire") {
    for (int q = 1; q <= 2; ++q)
        for (unsigned k = 2; k <= 3; ++k)
            for (unsigned u = 1; u < k; ++u) {
                Ring ring(q);
                unsigned m = unsigned(ring.num_monomials());
                RqMatrix ma = macdonald_alpha_generator(ring, k, u);
                CHECK(ma.cols == (std::uint64_t(1) << (m * k)) - (std::uint64_t(1) << (m * u)));
                RqMatrix mb = macdonald_beta_generator(ring, k, u);
                CHECK(mb.cols == beta_width(q, k) - beta_width(q, u));
                CHECK(ma.rows == k);
                CHECK(mb.rows == k);
            }
}

TEST_CASE("macdonald keeps exactly the columns with a nonzero top block") {
    Ring ring(1);
    RqMatrix m = macdonald_alpha_generator(ring, 2, 1);
    for (std::size_t j = 0; j < m.cols; ++j)
        CHECK(m.at(0, j) != 0); // k - u = 1 top row entry must be nonzero
}

TEST_CASE("binary simplex and macdonald shapes") {
    for (unsigned k = 1; k <= 5; ++k) {
        BinaryMatrix a = binary_simplex_alpha(k);
        CHECK(a.rows == k);
        CHECK(a.cols == (std::size_t(1) << k));
        std::set<std::vector<bool>> cols;
        for (std::size_t j = 0; j < a.cols; ++j) {
            std::vector<bool> c(k);
            for (unsigned i = 0; i < k; ++i) c[i] = a.get(i, j);
            cols.insert(c);
        }
        CHECK(cols.size() == a.cols);
    }
    for (unsigned k = 2; k <= 5; ++k) {
        BinaryMatrix b = binary_simplex_beta(k);
        CHECK(b.rows == k);
        CHECK(b.cols == (std::size_t(1) << k) - 1);
        CHECK(binary_rank(b) == k);
    }
    for (unsigned k = 2; k <= 5; ++k)
        for (unsigned u = 1; u < k; ++u) {
            BinaryMatrix m = binary_macdonald(k, u);
            CHECK(m.cols == (std::size_t(1) << k) - (std::size_t(1) << u));
        }
}

TEST_CASE("repetition generators") {
    Ring ring(1);
    RqMatrix r = repetition_generator(ring, ring.theta(), 3);
    CHECK(r.rows == 1);
    CHECK(r.cols == 3);
    for (unsigned j = 0; j < 3; ++j) CHECK(r.at(0, j) == ring.theta());
    CHECK_THROWS_AS(repetition_generator(ring, 0, 3), parameter_error);
    CHECK_THROWS_AS(repetition_generator(ring, 1, 0), parameter_error);

    RqMatrix b = block_repetition_generator(ring, 2);
    CHECK(b.cols == (ring.size() - 1) * 2);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(0, 1) == 1);
    CHECK(b.at(0, 2) == 2);
    CHECK(b.at(0, 5) == 3);
}

TEST_CASE("construction parameter and resource guards") {
    Ring r1(1);
    Ring r3(3);
    CHECK_THROWS_AS(simplex_alpha_generator(r1, 0), parameter_error);
    CHECK_THROWS_AS(macdonald_alpha_generator(r1, 2, 2), parameter_error);
    CHECK_THROWS_AS(macdonald_alpha_generator(r1, 2, 0), parameter_error);
    CHECK_THROWS_AS(macdonald_beta_generator(r1, 1, 1), parameter_error);
    CHECK_THROWS_AS(simplex_alpha_generator(r3, 3), resource_error);
    CHECK_THROWS_AS(simplex_alpha_generator(r1, 2, 8), resource_error);
    CHECK_THROWS_AS(binary_simplex_alpha(0), parameter_error);
}
