#ifndef RQCODES_ANALYSIS_HPP
#define RQCODES_ANALYSIS_HPP

#include <map>
#include <optional>

#include "rqcodes/linalg.hpp"
#include "rqcodes/rational.hpp"

namespace rqc {

enum class Metric { hamming, lee, hom };

std::string metric_name(Metric m);
Metric parse_metric(const std::string& s);

// Per-symbol weight, using the code's gamma for hom.
Rational symbol_weight(const Ring& ring, elem_t x, Metric metric);
Rational vector_weight(const Ring& ring, const RqVector& v, Metric metric);

struct WeightDistribution {
    Metric metric;
    std::map<Rational, std::uint64_t> counts;
};

WeightDistribution weight_distribution(const CodeOverRq& code, Metric metric);
// Hamming weight distribution of a binary code.
std::map<Rational, std::uint64_t> binary_weight_distribution(const BinaryCode& code);

// Codewords bucketed by the minimum filtration level over their coordinates
// (q+1 for the zero word).
std::map<int, std::uint64_t> count_types(const CodeOverRq& code);

enum class CrEngine { exhaustive, profile_dp, gray_syndrome };

std::string engine_name(CrEngine e);

struct CoveringRadiusResult {
    Metric metric;
    Rational value;
    CrEngine engine;
    RqVector certificate; // one ambient vector attaining the maximum distance
};

// Exact maximum over the whole ambient space R_q^n of the distance to the
// code. Guarded by |R_q|^n <= limit. Lee distances run through the packed
// Gray XOR/popcount kernel; Hamming and hom through the symbol-table kernel.
CoveringRadiusResult covering_radius_exhaustive(const CodeOverRq& code, Metric metric,
                                                std::uint64_t limit = default_enum_limit(),
                                                unsigned workers = 0);

// Coset-leader search over syndromes of the binary Lee Gray image (Lee metric
// only). Guarded by redundancy <= max_redundancy bits.
CoveringRadiusResult covering_radius_gray_syndrome(const CodeOverRq& code,
                                                   unsigned max_redundancy = 26);

// Exact DP over coordinates keeping Pareto-maximal partial distance profiles
// (one entry per codeword). Guarded by |C| <= 64 and a frontier cap.
CoveringRadiusResult covering_radius_profile_dp(const CodeOverRq& code, Metric metric,
                                                std::size_t frontier_limit = 1u << 20);

// Prop-style composition bound: stacked upper bound and concatenation lower
// bound are both r0 + r1.
Rational covering_radius_bound_compose(const Rational& r0, const Rational& r1);

// Distance from an ambient vector to the code (shared by engines and tests).
Rational distance_to_code(const CodeOverRq& code, const RqVector& x, Metric metric);

// n * max single-symbol weight; no distance can exceed it.
Rational covering_radius_ceiling(const Ring& ring, std::size_t n, Metric metric);

} // namespace rqc

#endif
