#include "rqcodes/analysis.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "rqcodes/kernels.hpp"

namespace rqc {

std::string metric_name(Metric m) {
    switch (m) {
    case Metric::hamming: return "hamming";
    case Metric::lee: return "lee";
    case Metric::hom: return "hom";
    }
    return "?";
}

Metric parse_metric(const std::string& s) {
    if (s == "hamming") return Metric::hamming;
    if (s == "lee") return Metric::lee;
    if (s == "hom") return Metric::hom;
    throw parameter_error("unknown metric: " + s);
}

std::string engine_name(CrEngine e) {
    switch (e) {
    case CrEngine::exhaustive: return "exhaustive";
    case CrEngine::profile_dp: return "profile_dp";
    case CrEngine::gray_syndrome: return "gray_syndrome";
    }
    return "?";
}

Rational symbol_weight(const Ring& ring, elem_t x, Metric metric) {
    switch (metric) {
    case Metric::hamming: return Rational(x != 0 ? 1 : 0);
    case Metric::lee: return Rational(static_cast<std::int64_t>(ring.lee_weight(x)));
    case Metric::hom: return ring.hom_weight_closed(x);
    }
    return Rational(0);
}

Rational vector_weight(const Ring& ring, const RqVector& v, Metric metric) {
    Rational w(0);
    for (elem_t x : v) w = w + symbol_weight(ring, x, metric);
    return w;
}

WeightDistribution weight_distribution(const CodeOverRq& code, Metric metric) {
    WeightDistribution wd{metric, {}};
    const Ring& ring = code.generator.ring;
    for (const RqVector& c : code.codewords)
        ++wd.counts[vector_weight(ring, c, metric)];
    return wd;
}

std::map<Rational, std::uint64_t> binary_weight_distribution(const BinaryCode& code) {
    std::map<Rational, std::uint64_t> counts;
    for (const auto& w : code.words) {
        std::int64_t wt = 0;
        for (std::uint64_t word : w) wt += std::popcount(word);
        ++counts[Rational(wt)];
    }
    return counts;
}

std::map<int, std::uint64_t> count_types(const CodeOverRq& code) {
    const Ring& ring = code.generator.ring;
    std::map<int, std::uint64_t> out;
    for (const RqVector& c : code.codewords) {
        int level = ring.q() + 1;
        for (elem_t e : c) level = std::min(level, ring.filtration_level(e));
        ++out[level];
    }
    return out;
}

Rational covering_radius_bound_compose(const Rational& r0, const Rational& r1) {
    return r0 + r1;
}

Rational covering_radius_ceiling(const Ring& ring, std::size_t n, Metric metric) {
    Rational m(0);
    switch (metric) {
    case Metric::hamming: m = Rational(1); break;
    case Metric::lee: m = Rational(std::int64_t(1) << ring.q()); break;
    case Metric::hom: m = ring.gamma() * Rational(2); break;
    }
    return m * Rational(static_cast<std::int64_t>(n));
}

namespace {

// Scaled integer weight table: weight(x) = table[x] / scale, exact.
struct ScaledWeights {
    std::vector<std::uint32_t> table;
    std::int64_t scale = 1;
};

ScaledWeights scaled_weights(const Ring& ring, Metric metric) {
    ScaledWeights sw;
    sw.scale = (metric == Metric::hom) ? ring.gamma().den : 1;
    std::size_t size = std::max<std::size_t>(ring.size(), 256);
    sw.table.assign(size, 0);
    for (std::uint32_t x = 0; x < ring.size(); ++x) {
        Rational w = symbol_weight(ring, static_cast<elem_t>(x), metric);
        sw.table[x] = static_cast<std::uint32_t>(w.num * (sw.scale / w.den));
    }
    return sw;
}

struct ScanBest {
    std::uint64_t dist = 0;
    std::uint64_t index = ~std::uint64_t(0); // smallest ambient index attaining dist
};

void merge_best(ScanBest& acc, const ScanBest& other) {
    if (other.dist > acc.dist || (other.dist == acc.dist && other.index < acc.index))
        acc = other;
}

RqVector digits_of(std::uint64_t index, std::size_t n, std::uint32_t base) {
    RqVector d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<elem_t>(index % base);
        index /= base;
    }
    return d;
}

// Max over ambient indices [begin, end) of the minimum distance to the
// codeword array, in scaled integer units.
ScanBest scan_range_table(const Ring& ring, const std::vector<RqVector>& codewords,
                          const ScaledWeights& sw, std::size_t n,
                          std::uint64_t begin, std::uint64_t end) {
    const std::uint32_t base = ring.size();
    ScanBest best;
    RqVector x = digits_of(begin, n, base);

    if (base <= 256) {
        // Byte symbols feed the table kernel.
        std::vector<std::uint8_t> cws(codewords.size() * n);
        for (std::size_t i = 0; i < codewords.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                cws[i * n + j] = static_cast<std::uint8_t>(codewords[i][j]);
        std::vector<std::uint8_t> target(n);
        for (std::size_t j = 0; j < n; ++j) target[j] = static_cast<std::uint8_t>(x[j]);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            auto r = kernels::min_table_distance(target.data(), cws.data(), n,
                                                 codewords.size(), sw.table.data());
            merge_best(best, {r.dist, idx});
            // odometer step
            std::size_t p = 0;
            while (p < n && target[p] == base - 1) { target[p] = 0; ++p; }
            if (p < n) ++target[p];
        }
        return best;
    }

    // q = 4: plain scalar over elem_t symbols.
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t dmin = ~std::uint64_t(0);
        for (const RqVector& c : codewords) {
            std::uint64_t d = 0;
            for (std::size_t j = 0; j < n; ++j) d += sw.table[x[j] ^ c[j]];
            dmin = std::min(dmin, d);
        }
        merge_best(best, {dmin, idx});
        std::size_t p = 0;
        while (p < n && x[p] == base - 1) { x[p] = 0; ++p; }
        if (p < n) ++x[p];
    }
    return best;
}

// Lee scan over packed Gray images with the XOR/popcount kernel.
ScanBest scan_range_lee(const Ring& ring, const std::vector<RqVector>& codewords,
                        std::size_t n, std::uint64_t begin, std::uint64_t end) {
    const std::uint32_t base = ring.size();
    const int mono = ring.num_monomials(); // bits per symbol; divides 64
    const std::size_t words = (n * static_cast<std::size_t>(mono) + 63) / 64;

    std::vector<std::uint64_t> cws(codewords.size() * words);
    for (std::size_t i = 0; i < codewords.size(); ++i) {
        auto packed = gray_pack(ring, codewords[i], GrayMap::lee);
        std::copy(packed.begin(), packed.end(), cws.begin() + static_cast<std::ptrdiff_t>(i * words));
    }

    RqVector x = digits_of(begin, n, base);
    std::vector<std::uint64_t> target = gray_pack(ring, x, GrayMap::lee);

    ScanBest best;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        auto r = kernels::min_xor_popcount(target.data(), cws.data(), words, codewords.size());
        merge_best(best, {r.dist, idx});
        std::size_t p = 0;
        while (p < n && x[p] == base - 1) {
            std::uint64_t delta = ring.lee_gray(x[p]) ^ ring.lee_gray(0);
            std::size_t bit = p * static_cast<std::size_t>(mono);
            target[bit >> 6] ^= delta << (bit & 63);
            x[p] = 0;
            ++p;
        }
        if (p < n) {
            elem_t next = static_cast<elem_t>(x[p] + 1);
            std::uint64_t delta = ring.lee_gray(x[p]) ^ ring.lee_gray(next);
            std::size_t bit = p * static_cast<std::size_t>(mono);
            target[bit >> 6] ^= delta << (bit & 63);
            x[p] = next;
        }
    }
    return best;
}

} // namespace

Rational distance_to_code(const CodeOverRq& code, const RqVector& x, Metric metric) {
    const Ring& ring = code.generator.ring;
    if (x.size() != code.generator.cols) throw parameter_error("vector length mismatch");
    std::optional<Rational> best;
    for (const RqVector& c : code.codewords) {
        Rational d(0);
        for (std::size_t j = 0; j < x.size(); ++j)
            d = d + symbol_weight(ring, static_cast<elem_t>(x[j] ^ c[j]), metric);
        if (!best || d < *best) best = d;
    }
    return *best;
}

CoveringRadiusResult covering_radius_exhaustive(const CodeOverRq& code, Metric metric,
                                                std::uint64_t limit, unsigned workers) {
    const Ring& ring = code.generator.ring;
    const std::size_t n = code.generator.cols;
    unsigned log2_total = static_cast<unsigned>(ring.num_monomials()) * static_cast<unsigned>(n);
    if (log2_total >= 63 || (std::uint64_t(1) << log2_total) > limit)
        throw resource_error("ambient space |R_q|^" + std::to_string(n) +
                             " exceeds limit " + std::to_string(limit));
    const std::uint64_t total = std::uint64_t(1) << log2_total;

    ScaledWeights sw = scaled_weights(ring, metric);

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

    auto scan = [&](std::uint64_t b, std::uint64_t e) {
        return (metric == Metric::lee) ? scan_range_lee(ring, code.codewords, n, b, e)
                                       : scan_range_table(ring, code.codewords, sw, n, b, e);
    };

    ScanBest best;
    if (workers <= 1) {
        best = scan(0, total);
    } else {
        std::vector<ScanBest> parts(workers);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t b = std::uint64_t(w) * chunk;
            std::uint64_t e = std::min(total, b + chunk);
            pool.emplace_back([&, w, b, e] { parts[w] = scan(b, e); });
        }
        for (auto& t : pool) t.join();
        for (const auto& p : parts) merge_best(best, p);
    }

    std::int64_t scale = (metric == Metric::lee) ? 1 : sw.scale;
    CoveringRadiusResult res{metric,
                             Rational(static_cast<std::int64_t>(best.dist), scale),
                             CrEngine::exhaustive,
                             digits_of(best.index, n, ring.size())};
    return res;
}

CoveringRadiusResult covering_radius_gray_syndrome(const CodeOverRq& code, unsigned max_redundancy) {
    const Ring& ring = code.generator.ring;
    const RqMatrix& g = code.generator;
    const std::size_t n = g.cols;
    const int mono = ring.num_monomials();
    const std::size_t len = n * static_cast<std::size_t>(mono);

    // Generators of the binary image: Gray images of every scalar multiple of
    // every generator row.
    BinaryMatrix b(g.rows * ring.size(), len);
    for (std::size_t i = 0; i < g.rows; ++i) {
        RqVector row = g.row(i);
        for (std::uint32_t a = 0; a < ring.size(); ++a) {
            RqVector scaled(n);
            for (std::size_t j = 0; j < n; ++j) scaled[j] = ring.mul(static_cast<elem_t>(a), row[j]);
            b.bits[i * ring.size() + a] = gray_pack(ring, scaled, GrayMap::lee);
        }
    }
    unsigned rank = binary_rank(b);
    if (len < rank) throw std::logic_error("rank exceeds length");
    unsigned m = static_cast<unsigned>(len - rank);
    if (m > max_redundancy)
        throw resource_error("gray syndrome: redundancy " + std::to_string(m) +
                             " exceeds " + std::to_string(max_redundancy) + " bits");

    BinaryMatrix h = null_space(b);
    std::vector<std::uint32_t> col(len, 0);
    for (std::size_t j = 0; j < len; ++j)
        for (unsigned i = 0; i < m; ++i)
            if (h.get(i, j)) col[j] |= 1u << i;

    const std::size_t nsyn = std::size_t(1) << m;
    std::vector<std::uint8_t> dist(nsyn, 0xff);
    dist[0] = 0;
    std::vector<std::uint32_t> frontier{0}, next;
    std::uint8_t d = 0;
    std::uint32_t far = 0;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint32_t s : frontier)
            for (std::size_t j = 0; j < len; ++j) {
                std::uint32_t s2 = s ^ col[j];
                if (dist[s2] == 0xff) {
                    dist[s2] = static_cast<std::uint8_t>(d + 1);
                    next.push_back(s2);
                }
            }
        if (!next.empty()) {
            ++d;
            far = *std::min_element(next.begin(), next.end());
        }
        frontier.swap(next);
    }

    // Walk a coset leader of the farthest syndrome back to weight 0.
    std::vector<std::uint64_t> leader((len + 63) / 64, 0);
    std::uint32_t s = far;
    for (std::uint8_t step = d; step > 0; --step) {
        for (std::size_t j = 0; j < len; ++j) {
            if (dist[s ^ col[j]] == step - 1 && !((leader[j >> 6] >> (j & 63)) & 1)) {
                leader[j >> 6] |= std::uint64_t(1) << (j & 63);
                s ^= col[j];
                break;
            }
        }
    }

    // Pull the binary certificate back through the (involutive) Lee Gray map.
    RqVector cert(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t bit = i * static_cast<std::size_t>(mono);
        gray_t chunk = static_cast<gray_t>((leader[bit >> 6] >> (bit & 63)) & ((std::uint64_t(1) << mono) - 1));
        cert[i] = ring.lee_gray_inverse(chunk);
    }

    return CoveringRadiusResult{Metric::lee, Rational(d), CrEngine::gray_syndrome, cert};
}

CoveringRadiusResult covering_radius_profile_dp(const CodeOverRq& code, Metric metric,
                                                std::size_t frontier_limit) {
    const Ring& ring = code.generator.ring;
    const std::size_t nc = code.codewords.size();
    if (nc > 64)
        throw resource_error("profile dp: |C| = " + std::to_string(nc) + " exceeds 64");
    const std::size_t n = code.generator.cols;
    ScaledWeights sw = scaled_weights(ring, metric);

    struct Profile {
        std::vector<std::int64_t> d;
        RqVector prefix;
    };
    std::vector<Profile> frontier{{std::vector<std::int64_t>(nc, 0), {}}};

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Profile> grown;
        grown.reserve(frontier.size() * ring.size());
        for (const Profile& p : frontier)
            for (std::uint32_t a = 0; a < ring.size(); ++a) {
                Profile np;
                np.d.resize(nc);
                for (std::size_t j = 0; j < nc; ++j)
                    np.d[j] = p.d[j] + sw.table[a ^ code.codewords[j][i]];
                np.prefix = p.prefix;
                np.prefix.push_back(static_cast<elem_t>(a));
                grown.push_back(std::move(np));
            }
        // Keep Pareto-maximal profiles; lexicographic sort gives deterministic
        // survivors and lets duplicates collapse.
        std::sort(grown.begin(), grown.end(), [](const Profile& a, const Profile& b) {
            if (a.d != b.d) return a.d > b.d;
            return a.prefix < b.prefix;
        });
        std::vector<Profile> kept;
        for (Profile& cand : grown) {
            if (!kept.empty() && kept.back().d == cand.d) continue; // duplicate profile
            bool dominated = false;
            for (const Profile& k : kept) {
                bool dom = true;
                for (std::size_t j = 0; j < nc; ++j)
                    if (k.d[j] < cand.d[j]) { dom = false; break; }
                if (dom) { dominated = true; break; }
            }
            if (!dominated) {
                if (kept.size() >= frontier_limit)
                    throw resource_error("profile dp: frontier exceeds limit " +
                                         std::to_string(frontier_limit));
                kept.push_back(std::move(cand));
            }
        }
        frontier = std::move(kept);
    }

    const Profile* best = nullptr;
    std::int64_t best_min = -1;
    for (const Profile& p : frontier) {
        std::int64_t mn = *std::min_element(p.d.begin(), p.d.end());
        if (mn > best_min) { best_min = mn; best = &p; }
    }
    return CoveringRadiusResult{metric, Rational(best_min, sw.scale), CrEngine::profile_dp,
                                best->prefix};
}

} // namespace rqc
