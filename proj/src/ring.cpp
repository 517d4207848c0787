#include "rqcodes/ring.hpp"

#include <bit>
#include <cctype>

namespace rqc {

static Rational default_gamma(int q) { return Rational(std::int64_t(1) << q); }

Ring::Ring(int q) : Ring(q, default_gamma(q)) {}

Ring::Ring(int q, const Rational& gamma) : q_(q), gamma_(gamma) {
    if (q < 1 || q > Q_MAX)
        throw parameter_error("q must be in [1, " + std::to_string(Q_MAX) + "], got " + std::to_string(q));
    if (gamma_.num <= 0)
        throw parameter_error("gamma must be positive");

    // Subset indicator of all submasks of A, then extend F_2-linearly.
    const int m = num_monomials();
    std::vector<gray_t> sub(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
        gray_t g = 0;
        int b = a;
        while (true) {
            g |= gray_t(1) << b;
            if (b == 0) break;
            b = (b - 1) & a;
        }
        sub[static_cast<size_t>(a)] = g;
    }
    lee_.assign(size(), 0);
    for (std::uint32_t x = 1; x < size(); ++x) {
        std::uint32_t low = x & (x - 1);
        int j = std::countr_zero(x);
        lee_[x] = lee_[low] ^ sub[static_cast<size_t>(j)];
    }
}

elem_t Ring::mul(elem_t x, elem_t y) const {
    // u_A * u_B = u_{A|B} if the supports are disjoint, 0 otherwise.
    std::uint32_t r = 0;
    std::uint32_t xs = x;
    while (xs) {
        int a = std::countr_zero(xs);
        xs &= xs - 1;
        std::uint32_t ys = y;
        while (ys) {
            int b = std::countr_zero(ys);
            ys &= ys - 1;
            if ((a & b) == 0) r ^= 1u << (a | b);
        }
    }
    return static_cast<elem_t>(r);
}

int Ring::chi(elem_t x) const {
    return (std::popcount(static_cast<std::uint32_t>(x)) & 1) ? -1 : 1;
}

unsigned Ring::lee_weight(elem_t x) const {
    return static_cast<unsigned>(std::popcount(lee_[x]));
}

Rational Ring::hom_weight_closed(elem_t x) const {
    if (x == 0) return Rational(0);
    if (x == theta()) return gamma_ * Rational(2);
    return gamma_;
}

Rational Ring::hom_weight_character(elem_t x) const {
    std::int64_t s = 0;
    std::int64_t nunits = 0;
    for (std::uint32_t u = 1; u < size(); u += 2) { // units are odd masks
        s += chi(mul(x, static_cast<elem_t>(u)));
        ++nunits;
    }
    // gamma * (1 - s / |units|)
    return gamma_ * Rational(nunits - s, nunits);
}

gray_t Ring::hom_gray(elem_t x, HomGrayMode mode) const {
    const int m = num_monomials();
    const gray_t ones = (m == 32) ? ~gray_t(0) : ((gray_t(1) << m) - 1);
    gray_t lo = lee_[x];
    gray_t hi = 0;
    switch (mode) {
    case HomGrayMode::linear:
        hi = lee_[mul(x, add(one(), theta()))];
        break;
    case HomGrayMode::weight_exact:
        if (x == 0) hi = 0;
        else if (x == theta()) hi = ones;
        else hi = lo ^ ones;
        break;
    }
    return lo | (hi << m);
}

elem_t Ring::gamma_project(elem_t x) const {
    if (q_ < 2) throw parameter_error("gamma_project requires q >= 2");
    // Subsets not containing q are exactly the indices below 2^{q-1}.
    const std::uint32_t keep = (1u << (num_monomials() / 2)) - 1;
    return static_cast<elem_t>(x & keep);
}

Ring Ring::projected_ring() const {
    if (q_ < 2) throw parameter_error("gamma_project requires q >= 2");
    return Ring(q_ - 1);
}

int Ring::filtration_level(elem_t x) const {
    if (x == 0) return q_ + 1;
    int level = q_;
    std::uint32_t xs = x;
    while (xs) {
        int j = std::countr_zero(xs);
        xs &= xs - 1;
        int deg = std::popcount(static_cast<std::uint32_t>(j));
        if (deg < level) level = deg;
    }
    return level;
}

std::vector<elem_t> Ring::elements() const {
    std::vector<elem_t> v(size());
    for (std::uint32_t x = 0; x < size(); ++x) v[x] = static_cast<elem_t>(x);
    return v;
}

std::vector<elem_t> Ring::units() const {
    std::vector<elem_t> v;
    v.reserve(size() / 2);
    for (std::uint32_t x = 1; x < size(); x += 2) v.push_back(static_cast<elem_t>(x));
    return v;
}

std::vector<elem_t> Ring::zero_divisors() const {
    std::vector<elem_t> v;
    v.reserve(size() / 2);
    for (std::uint32_t x = 0; x < size(); x += 2) v.push_back(static_cast<elem_t>(x));
    return v;
}

void check_same_ring(const Ring& a, const Ring& b) {
    if (!a.same_ring(b))
        throw parameter_error("ring mismatch: q=" + std::to_string(a.q()) + " vs q=" + std::to_string(b.q()));
}

std::string render_element(elem_t x) { return std::to_string(x); }

std::string render_element_symbolic(const Ring& ring, elem_t x) {
    if (x == 0) return "0";
    std::string out;
    for (int j = 0; j < ring.num_monomials(); ++j) {
        if (!(x & (1u << j))) continue;
        if (!out.empty()) out += '+';
        if (j == 0) {
            out += '1';
        } else {
            for (int i = 0; i < ring.q(); ++i)
                if (j & (1 << i)) out += "u" + std::to_string(i + 1);
        }
    }
    return out;
}

elem_t parse_element(const Ring& ring, const std::string& text) {
    if (text.empty()) throw parameter_error("empty element literal");
    if (text == "theta") return ring.theta();

    bool all_digits = true;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) { all_digits = false; break; }
    if (all_digits) {
        unsigned long v = std::stoul(text);
        if (v >= ring.size())
            throw parameter_error("element bitmask " + text + " out of range for q=" + std::to_string(ring.q()));
        return static_cast<elem_t>(v);
    }

    std::uint32_t mask = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('+', pos);
        if (end == std::string::npos) end = text.size();
        std::string term = text.substr(pos, end - pos);
        pos = end + 1;
        if (term == "0") continue;
        if (term == "1") { mask ^= 1u; continue; }
        std::uint32_t subset = 0;
        bool zero_term = false;
        size_t i = 0;
        while (i < term.size()) {
            if (term[i] != 'u') throw parameter_error("bad element term: " + term);
            ++i;
            size_t start = i;
            while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
            if (start == i) throw parameter_error("bad element term: " + term);
            int gen = std::stoi(term.substr(start, i - start));
            if (gen < 1 || gen > ring.q())
                throw parameter_error("generator u" + std::to_string(gen) + " out of range for q=" + std::to_string(ring.q()));
            std::uint32_t bit = 1u << (gen - 1);
            if (subset & bit) zero_term = true; // u_i^2 = 0 kills the term
            subset |= bit;
        }
        if (!zero_term) mask ^= 1u << subset;
    }
    return static_cast<elem_t>(mask);
}

} // namespace rqc
