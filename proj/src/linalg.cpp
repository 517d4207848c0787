#include "rqcodes/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace rqc {

std::uint64_t default_enum_limit() {
    static std::uint64_t limit = [] {
        if (const char* e = std::getenv("RQCODES_ENUM_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(e, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t(1) << 24;
    }();
    return limit;
}

CodeOverRq enumerate_code(const RqMatrix& G, std::uint64_t limit) {
    const Ring& ring = G.ring;
    // |R_q|^rows = 2^{2^q * rows} message tuples.
    unsigned log2_combos = static_cast<unsigned>(ring.num_monomials() * G.rows);
    if (log2_combos >= 64 || (std::uint64_t(1) << log2_combos) > limit)
        throw resource_error("enumeration of |R_q|^" + std::to_string(G.rows) +
                             " message tuples exceeds limit " + std::to_string(limit));

    std::vector<RqVector> span{RqVector(G.cols, 0)};
    for (std::size_t i = 0; i < G.rows; ++i) {
        RqVector row = G.row(i);
        std::vector<RqVector> next;
        next.reserve(span.size() * ring.size());
        for (std::uint32_t a = 0; a < ring.size(); ++a) {
            RqVector scaled(G.cols);
            for (std::size_t j = 0; j < G.cols; ++j)
                scaled[j] = ring.mul(static_cast<elem_t>(a), row[j]);
            for (const RqVector& c : span) {
                RqVector w(G.cols);
                for (std::size_t j = 0; j < G.cols; ++j)
                    w[j] = ring.add(c[j], scaled[j]);
                next.push_back(std::move(w));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        span = std::move(next);
    }

    CodeOverRq code{G, std::move(span), 0};
    code.two_dim = two_dimension(code);
    return code;
}

namespace {

// In-place elimination over F_2; returns rank.
unsigned rank_of_rows(std::vector<std::vector<std::uint64_t>>& rows, std::size_t bit_len) {
    unsigned rank = 0;
    std::size_t r = 0;
    for (std::size_t col = 0; col < bit_len && r < rows.size(); ++col) {
        std::size_t w = col >> 6;
        std::uint64_t mask = std::uint64_t(1) << (col & 63);
        std::size_t pivot = r;
        while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && (rows[i][w] & mask))
                for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[r][k];
        }
        ++r;
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<std::uint64_t> gray_pack(const Ring& ring, const RqVector& v, GrayMap map,
                                     HomGrayMode mode) {
    const int w = (map == GrayMap::lee) ? ring.num_monomials() : 2 * ring.num_monomials();
    std::vector<std::uint64_t> out((v.size() * static_cast<std::size_t>(w) + 63) / 64, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        gray_t g = (map == GrayMap::lee) ? ring.lee_gray(v[i]) : ring.hom_gray(v[i], mode);
        std::size_t base = i * static_cast<std::size_t>(w);
        for (int t = 0; t < w; ++t)
            if (g & (gray_t(1) << t))
                out[(base + t) >> 6] |= std::uint64_t(1) << ((base + t) & 63);
    }
    return out;
}

unsigned two_dimension(const CodeOverRq& code) {
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(code.codewords.size());
    for (const RqVector& c : code.codewords)
        rows.push_back(gray_pack(code.generator.ring, c, GrayMap::lee));
    std::size_t bit_len = code.generator.cols * static_cast<std::size_t>(code.generator.ring.num_monomials());
    return rank_of_rows(rows, bit_len);
}

BinaryMatrix gray_image_matrix(const RqMatrix& G, GrayMap map, HomGrayMode mode) {
    const Ring& ring = G.ring;
    const int w = (map == GrayMap::lee) ? ring.num_monomials() : 2 * ring.num_monomials();
    BinaryMatrix out(G.rows, G.cols * static_cast<std::size_t>(w));
    for (std::size_t i = 0; i < G.rows; ++i)
        for (std::size_t j = 0; j < G.cols; ++j) {
            gray_t g = (map == GrayMap::lee) ? ring.lee_gray(G.at(i, j)) : ring.hom_gray(G.at(i, j), mode);
            for (int t = 0; t < w; ++t)
                if (g & (gray_t(1) << t)) out.set(i, j * static_cast<std::size_t>(w) + t, true);
        }
    return out;
}

BinaryCode gray_image_code(const CodeOverRq& code, GrayMap map, HomGrayMode mode) {
    const Ring& ring = code.generator.ring;
    const int w = (map == GrayMap::lee) ? ring.num_monomials() : 2 * ring.num_monomials();
    BinaryCode out;
    out.length = code.generator.cols * static_cast<std::size_t>(w);
    out.words.reserve(code.codewords.size());
    for (const RqVector& c : code.codewords)
        out.words.push_back(gray_pack(ring, c, map, mode));
    std::sort(out.words.begin(), out.words.end());
    out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
    auto rows = out.words;
    out.rank = rank_of_rows(rows, out.length);
    return out;
}

BinaryCode torsion_code(const CodeOverRq& code, unsigned subset) {
    const Ring& ring = code.generator.ring;
    if (subset >= static_cast<unsigned>(ring.num_monomials()))
        throw parameter_error("subset mask out of range");
    const elem_t ua = static_cast<elem_t>(elem_t(1) << subset);
    BinaryCode out;
    out.length = code.generator.cols;
    for (const RqVector& c : code.codewords) {
        bool ok = true;
        for (elem_t e : c)
            if (e != 0 && e != ua) { ok = false; break; }
        if (!ok) continue;
        std::vector<std::uint64_t> v((out.length + 63) / 64, 0);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] == ua) v[j >> 6] |= std::uint64_t(1) << (j & 63);
        out.words.push_back(std::move(v));
    }
    std::sort(out.words.begin(), out.words.end());
    out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
    auto rows = out.words;
    out.rank = rank_of_rows(rows, out.length);
    return out;
}

BinaryCode residue_code(const CodeOverRq& code, unsigned subset) {
    const Ring& ring = code.generator.ring;
    if (subset == 0 || subset >= static_cast<unsigned>(ring.num_monomials()))
        throw parameter_error("residue requires a nonempty subset A");
    const elem_t ua = static_cast<elem_t>(elem_t(1) << subset);
    BinaryCode out;
    out.length = code.generator.cols;
    for (const RqVector& c : code.codewords) {
        bool ok = true;
        for (elem_t e : c) {
            elem_t r = static_cast<elem_t>(e & ~(elem_t(1) | ua));
            if (r != 0) { ok = false; break; }
        }
        if (!ok) continue;
        std::vector<std::uint64_t> u((out.length + 63) / 64, 0);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] & 1) u[j >> 6] |= std::uint64_t(1) << (j & 63);
        out.words.push_back(std::move(u));
    }
    std::sort(out.words.begin(), out.words.end());
    out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
    auto rows = out.words;
    out.rank = rank_of_rows(rows, out.length);
    return out;
}

bool column_multiset_equal(const RqMatrix& a, const RqMatrix& b) {
    if (a.rows != b.rows) throw parameter_error("column multiset compare: row counts differ");
    check_same_ring(a.ring, b.ring);
    if (a.cols != b.cols) return false;
    auto columns = [](const RqMatrix& m) {
        std::vector<RqVector> cols(m.cols, RqVector(m.rows));
        for (std::size_t j = 0; j < m.cols; ++j)
            for (std::size_t i = 0; i < m.rows; ++i) cols[j][i] = m.at(i, j);
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    return columns(a) == columns(b);
}

bool column_multiset_equal(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows != b.rows) throw parameter_error("column multiset compare: row counts differ");
    if (a.cols != b.cols) return false;
    auto columns = [](const BinaryMatrix& m) {
        std::vector<std::vector<std::uint8_t>> cols(m.cols, std::vector<std::uint8_t>(m.rows));
        for (std::size_t j = 0; j < m.cols; ++j)
            for (std::size_t i = 0; i < m.rows; ++i) cols[j][i] = m.get(i, j) ? 1 : 0;
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    return columns(a) == columns(b);
}

bool is_concatenation_of(const RqMatrix& m, const RqMatrix& b, std::uint64_t copies) {
    if (m.rows != b.rows) throw parameter_error("concatenation check: row counts differ");
    if (m.cols != copies * b.cols) return false;
    RqMatrix rep(b.ring, b.rows, m.cols);
    for (std::uint64_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j)
                rep.at(i, static_cast<std::size_t>(c) * b.cols + j) = b.at(i, j);
    return column_multiset_equal(m, rep);
}

bool is_concatenation_of(const BinaryMatrix& m, const BinaryMatrix& b, std::uint64_t copies) {
    if (m.rows != b.rows) throw parameter_error("concatenation check: row counts differ");
    if (m.cols != copies * b.cols) return false;
    BinaryMatrix rep(b.rows, m.cols);
    for (std::uint64_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j)
                rep.set(i, static_cast<std::size_t>(c) * b.cols + j, b.get(i, j));
    return column_multiset_equal(m, rep);
}

unsigned binary_rank(const BinaryMatrix& m) {
    auto rows = m.bits;
    return rank_of_rows(rows, m.cols);
}

BinaryCode binary_span(const BinaryMatrix& m, std::uint64_t limit) {
    auto basis = m.bits;
    unsigned r = rank_of_rows(basis, m.cols);
    if (r >= 63 || (std::uint64_t(1) << r) > limit)
        throw resource_error("binary span of rank " + std::to_string(r) + " exceeds limit");
    basis.resize(r);
    BinaryCode out;
    out.length = m.cols;
    out.rank = r;
    out.words.reserve(std::size_t(1) << r);
    out.words.emplace_back(std::vector<std::uint64_t>((m.cols + 63) / 64, 0));
    for (unsigned i = 0; i < r; ++i) {
        std::size_t cur = out.words.size();
        for (std::size_t j = 0; j < cur; ++j) {
            auto w = out.words[j];
            for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= basis[i][k];
            out.words.push_back(std::move(w));
        }
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

BinaryMatrix null_space(const BinaryMatrix& m) {
    // RREF of m, then read parity checks from the free columns.
    auto rows = m.bits;
    unsigned r = rank_of_rows(rows, m.cols);
    rows.resize(r);
    std::vector<std::ptrdiff_t> pivot_of_col(m.cols, -1);
    std::size_t ri = 0;
    for (std::size_t col = 0; col < m.cols && ri < r; ++col) {
        if ((rows[ri][col >> 6] >> (col & 63)) & 1) { pivot_of_col[col] = static_cast<std::ptrdiff_t>(ri); ++ri; }
    }
    BinaryMatrix h(m.cols - r, m.cols);
    std::size_t hi = 0;
    for (std::size_t col = 0; col < m.cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        h.set(hi, col, true);
        for (std::size_t c2 = 0; c2 < col; ++c2) {
            std::ptrdiff_t p = pivot_of_col[c2];
            if (p >= 0 && ((rows[static_cast<std::size_t>(p)][col >> 6] >> (col & 63)) & 1))
                h.set(hi, c2, true);
        }
        ++hi;
    }
    return h;
}

void write_matrix(std::ostream& os, const RqMatrix& m) {
    os << "rq-matrix q=" << m.ring.q() << " rows=" << m.rows << " cols=" << m.cols << "\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << "\n";
    }
}

RqMatrix read_matrix(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw parameter_error("rq-matrix: missing header");
    int q = -1;
    long long rows = -1, cols = -1;
    {
        std::istringstream hs(header);
        std::string tag, kv;
        hs >> tag;
        if (tag != "rq-matrix") throw parameter_error("rq-matrix: bad header tag");
        while (hs >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw parameter_error("rq-matrix: bad header field " + kv);
            std::string key = kv.substr(0, eq);
            long long val = std::stoll(kv.substr(eq + 1));
            if (key == "q") q = static_cast<int>(val);
            else if (key == "rows") rows = val;
            else if (key == "cols") cols = val;
            else throw parameter_error("rq-matrix: unknown header field " + key);
        }
    }
    if (q < 1 || rows < 0 || cols < 0) throw parameter_error("rq-matrix: incomplete header");
    Ring ring(q);
    RqMatrix m(ring, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            unsigned long v;
            if (!(is >> v)) throw parameter_error("rq-matrix: truncated body");
            if (v >= ring.size()) throw parameter_error("rq-matrix: entry out of range");
            m.at(i, j) = static_cast<elem_t>(v);
        }
    return m;
}

void write_matrix(std::ostream& os, const BinaryMatrix& m) {
    os << "bin-matrix rows=" << m.rows << " cols=" << m.cols << "\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::string line(m.cols, '0');
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.get(i, j)) line[j] = '1';
        os << line << "\n";
    }
}

} // namespace rqc
