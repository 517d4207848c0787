#ifndef RQCODES_RING_HPP
#define RQCODES_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rqcodes/errors.hpp"
#include "rqcodes/rational.hpp"

namespace rqc {

// An element of R_q as a coefficient bitmask: bit j is the coefficient of the
// monomial u_{A_j}, where the subset A_j of {1..q} has characteristic bits j
// (bit 0 <-> empty set, bit 1 <-> {1}, bit 2 <-> {2}, bit 3 <-> {1,2}, ...).
using elem_t = std::uint16_t;

// A Gray image: bit j is coordinate B_j under the same subset indexing.
using gray_t = std::uint32_t;

inline constexpr int Q_MAX = 4;

enum class HomGrayMode { linear, weight_exact };

// R_q = F_2[u_1..u_q] / <u_i^2 = 0, u_i u_j = u_j u_i>, with the homogeneous
// weight scale gamma (default 2^q).
class Ring {
public:
    explicit Ring(int q);
    Ring(int q, const Rational& gamma);

    int q() const { return q_; }
    // Number of monomials u_A, also the Lee Gray image length.
    int num_monomials() const { return 1 << q_; }
    // |R_q| = 2^{2^q}.
    std::uint32_t size() const { return 1u << num_monomials(); }
    const Rational& gamma() const { return gamma_; }

    elem_t zero() const { return 0; }
    elem_t one() const { return 1; }
    // The socle element theta = u_1 u_2 ... u_q.
    elem_t theta() const { return static_cast<elem_t>(1u << (num_monomials() - 1)); }

    elem_t add(elem_t x, elem_t y) const { return static_cast<elem_t>(x ^ y); }
    elem_t mul(elem_t x, elem_t y) const;

    bool is_unit(elem_t x) const { return (x & 1u) != 0; }
    // Generating character: (-1)^{popcount of coefficients}.
    int chi(elem_t x) const;

    unsigned lee_weight(elem_t x) const;
    Rational hom_weight_closed(elem_t x) const;
    // Character-sum evaluation of the homogeneous weight; must agree with
    // hom_weight_closed on every element.
    Rational hom_weight_character(elem_t x) const;

    gray_t lee_gray(elem_t x) const { return lee_[x]; }
    // The Lee Gray map is an involution on bitmasks; this inverts it.
    elem_t lee_gray_inverse(gray_t g) const { return static_cast<elem_t>(lee_[g]); }
    gray_t hom_gray(elem_t x, HomGrayMode mode) const;

    // Coefficient-dropping homomorphism R_q -> R_{q-1} (deletes terms with u_q).
    elem_t gamma_project(elem_t x) const;
    Ring projected_ring() const;

    // Largest j such that every monomial with nonzero coefficient has |A| >= j;
    // q+1 for x = 0. Zero divisors are exactly level >= 1.
    int filtration_level(elem_t x) const;

    // Canonical total order: increasing bitmask. Begins 0, 1, u_1, 1+u_1, ...
    std::vector<elem_t> elements() const;
    std::vector<elem_t> units() const;
    std::vector<elem_t> zero_divisors() const;

    bool same_ring(const Ring& other) const { return q_ == other.q_; }

private:
    int q_;
    Rational gamma_;
    std::vector<gray_t> lee_;
};

void check_same_ring(const Ring& a, const Ring& b);

// Canonical decimal bitmask rendering, e.g. "3".
std::string render_element(elem_t x);
// Symbolic rendering, e.g. "1+u1", "u1u2", "0".
std::string render_element_symbolic(const Ring& ring, elem_t x);
// Parses either form; also accepts "theta".
elem_t parse_element(const Ring& ring, const std::string& text);

} // namespace rqc

#endif
