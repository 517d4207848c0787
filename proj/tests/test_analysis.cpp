#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rqcodes/analysis.hpp"
#include "rqcodes/constructions.hpp"

using namespace rqc;

namespace {

using Dist = std::map<Rational, std::uint64_t>;

Dist dist_of(const CodeOverRq& code, Metric m) { return weight_distribution(code, m).counts; }

void check_engines_agree(const CodeOverRq& code, Metric metric, bool with_syndrome) {
    CoveringRadiusResult ex = covering_radius_exhaustive(code, metric);
    CoveringRadiusResult dp = covering_radius_profile_dp(code, metric);
    CHECK(ex.value == dp.value);
    CHECK(distance_to_code(code, ex.certificate, metric) == ex.value);
    CHECK(distance_to_code(code, dp.certificate, metric) == dp.value);
    if (with_syndrome) {
        CoveringRadiusResult sy = covering_radius_gray_syndrome(code);
        CHECK(ex.value == sy.value);
        CHECK(distance_to_code(code, sy.certificate, metric) == sy.value);
    }
}

} // namespace

TEST_CASE("frozen weight distributions of small simplex codes") {
    Ring r1(1);
    CodeOverRq s11 = enumerate_code(simplex_alpha_generator(r1, 1));
    CHECK(dist_of(s11, Metric::hamming) == Dist{{0, 1}, {2, 1}, {3, 2}});
    CHECK(dist_of(s11, Metric::lee) == Dist{{0, 1}, {4, 3}});
    CHECK(dist_of(s11, Metric::hom) == Dist{{0, 1}, {8, 3}}); // gamma = 2
    CHECK(count_types(s11) == std::map<int, std::uint64_t>{{0, 2}, {1, 1}, {2, 1}});

    Ring r2(2);
    CodeOverRq s21 = enumerate_code(simplex_alpha_generator(r2, 1));
    CHECK(dist_of(s21, Metric::lee) == Dist{{0, 1}, {32, 15}});
}

TEST_CASE("simplex alpha Lee distribution is two-valued at desk scale") {
    const std::pair<int, unsigned> points[] = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
    for (auto [q, k] : points) {
        Ring ring(q);
        CodeOverRq code = enumerate_code(simplex_alpha_generator(ring, k));
        unsigned m = unsigned(ring.num_monomials());
        Rational w(std::int64_t(1) << (m * k + unsigned(q) - 1));
        std::uint64_t nz = (std::uint64_t(1) << (m * k)) - 1;
        CHECK(dist_of(code, Metric::lee) == Dist{{0, 1}, {w, nz}});
        CHECK(code.two_dim == m * k);
    }
}

TEST_CASE("hom distribution scales with gamma") {
    Ring half(1, Rational(1)); // gamma = 2^{q-1}
    CodeOverRq code = enumerate_code(simplex_alpha_generator(half, 1));
    CHECK(dist_of(code, Metric::hom) == Dist{{0, 1}, {4, 3}});
}

TEST_CASE("binary weight distribution of the binary simplex codes") {
    CHECK(binary_weight_distribution(binary_span(binary_simplex_beta(3))) ==
          Dist{{0, 1}, {4, 7}});
    CHECK(binary_weight_distribution(binary_span(binary_simplex_alpha(2))) ==
          Dist{{0, 1}, {2, 3}});
}

TEST_CASE("distance to code is invariant under codeword translation") {
    Ring ring(1);
    CodeOverRq code = enumerate_code(simplex_beta_generator(ring, 2));
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, ring.size() - 1);
    for (int t = 0; t < 50; ++t) {
        RqVector x(code.generator.cols);
        for (auto& e : x) e = static_cast<elem_t>(pick(rng));
        const RqVector& c = code.codewords[pick(rng) % code.codewords.size()];
        RqVector shifted(x);
        for (std::size_t j = 0; j < x.size(); ++j) shifted[j] = ring.add(x[j], c[j]);
        for (Metric m : {Metric::hamming, Metric::lee, Metric::hom})
            CHECK(distance_to_code(code, x, m) == distance_to_code(code, shifted, m));
    }
}

TEST_CASE("covering radius engines agree on the catalog instances") {
    Ring r1(1);
    Ring r2(2);
    // 1-3: theta-repetition over R_1, n = 1, 2, 3
    for (unsigned n = 1; n <= 3; ++n) {
        CodeOverRq c = enumerate_code(repetition_generator(r1, r1.theta(), n));
        check_engines_agree(c, Metric::lee, true);
        check_engines_agree(c, Metric::hamming, false);
        check_engines_agree(c, Metric::hom, false);
        CHECK(covering_radius_exhaustive(c, Metric::lee).value == Rational(n));
    }
    // 4-5: unit repetition over R_1, n = 2, 3
    for (unsigned n = 2; n <= 3; ++n) {
        CodeOverRq c = enumerate_code(repetition_generator(r1, 1, n));
        check_engines_agree(c, Metric::lee, true);
        check_engines_agree(c, Metric::hamming, false);
    }
    CHECK(covering_radius_exhaustive(enumerate_code(repetition_generator(r1, 1, 2)),
                                     Metric::lee).value == Rational(2));
    // 6: simplex alpha (1,1)
    check_engines_agree(enumerate_code(simplex_alpha_generator(r1, 1)), Metric::lee, true);
    // 7: simplex beta (1,2)
    check_engines_agree(enumerate_code(simplex_beta_generator(r1, 2)), Metric::lee, true);
    // 8: repetition with a non-unit, non-socle style scalar 1+u_1
    check_engines_agree(enumerate_code(repetition_generator(r1, 3, 2)), Metric::lee, true);
    // 9: block repetition over R_1
    check_engines_agree(enumerate_code(block_repetition_generator(r1, 1)), Metric::lee, true);
    // 10: theta-repetition over R_2
    check_engines_agree(enumerate_code(repetition_generator(r2, r2.theta(), 1)), Metric::lee, true);
    // 11: macdonald beta (1, 2, 1)
    check_engines_agree(enumerate_code(macdonald_beta_generator(r1, 2, 1)), Metric::lee, true);
}

TEST_CASE("engine labels and certificates") {
    Ring r1(1);
    CodeOverRq c = enumerate_code(repetition_generator(r1, r1.theta(), 1));
    CoveringRadiusResult ex = covering_radius_exhaustive(c, Metric::lee);
    CHECK(ex.engine == CrEngine::exhaustive);
    CHECK(ex.value == Rational(1));
    CHECK(ex.certificate.size() == 1);
    CHECK(covering_radius_gray_syndrome(c).engine == CrEngine::gray_syndrome);
    CHECK(covering_radius_profile_dp(c, Metric::hom).engine == CrEngine::profile_dp);
}

TEST_CASE("covering radius ceiling") {
    Ring r1(1);
    Ring r2(2);
    CHECK(covering_radius_ceiling(r1, 3, Metric::hamming) == Rational(3));
    CHECK(covering_radius_ceiling(r1, 3, Metric::lee) == Rational(6));
    CHECK(covering_radius_ceiling(r1, 3, Metric::hom) == Rational(12));
    CHECK(covering_radius_ceiling(r2, 2, Metric::lee) == Rational(8));
}

TEST_CASE("composition bound is additive") {
    CHECK(covering_radius_bound_compose(Rational(3), Rational(5)) == Rational(8));
}

TEST_CASE("engine guards") {
    Ring r2(2);
    CodeOverRq big = enumerate_code(simplex_alpha_generator(r2, 1)); // n = 16 over R_2
    CHECK_THROWS_AS(covering_radius_exhaustive(big, Metric::lee, 1 << 10), resource_error);
    CodeOverRq s22 = enumerate_code(simplex_alpha_generator(r2, 2)); // |C| = 256 > 64
    CHECK_THROWS_AS(covering_radius_profile_dp(s22, Metric::lee), resource_error);
    Ring r1(1);
    CodeOverRq s12 = enumerate_code(simplex_alpha_generator(r1, 2));
    CHECK_THROWS_AS(covering_radius_profile_dp(s12, Metric::lee, 4), resource_error); // frontier cap
    CHECK_THROWS_AS(covering_radius_gray_syndrome(big, 4), resource_error);
}

TEST_CASE("worker count does not change the exhaustive result") {
    Ring r1(1);
    CodeOverRq c = enumerate_code(simplex_beta_generator(r1, 2));
    CoveringRadiusResult one = covering_radius_exhaustive(c, Metric::lee, default_enum_limit(), 1);
    for (unsigned w : {2u, 3u, 4u}) {
        CoveringRadiusResult multi = covering_radius_exhaustive(c, Metric::lee, default_enum_limit(), w);
        CHECK(one.value == multi.value);
        CHECK(one.certificate == multi.certificate);
    }
}

TEST_CASE("metric and engine names round-trip") {
    for (Metric m : {Metric::hamming, Metric::lee, Metric::hom})
        CHECK(parse_metric(metric_name(m)) == m);
    CHECK_THROWS_AS(parse_metric("euclidean"), parameter_error);
    CHECK(engine_name(CrEngine::exhaustive) == "exhaustive");
    CHECK(engine_name(CrEngine::gray_syndrome) == "gray_syndrome");
    CHECK(engine_name(CrEngine::profile_dp) == "profile_dp");
}
