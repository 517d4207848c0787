// Acceptance gate: every criterion prints exactly one PASS/FAIL line.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rqcodes/analysis.hpp"
#include "rqcodes/audit.hpp"
#include "rqcodes/constructions.hpp"

using namespace rqc;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

double run_criterion(int n, const char* what, double budget_s,
                     const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    auto t0 = clock_type::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    if (ok && budget_s > 0 && secs > budget_s) {
        ok = false;
        note = "exceeded time budget of " + std::to_string(budget_s) + " s";
    }
    if (!ok) ++failures;
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", n, ok ? "PASS" : "FAIL", what, secs,
                note.empty() ? "" : " - ", note.c_str());
    return secs;
}

bool check(bool cond, std::string& note, const std::string& msg) {
    if (!cond && note.empty()) note = msg;
    return cond;
}

const AuditEntry* find_entry(const AuditReport& r, const std::string& claim,
                             const std::vector<std::pair<std::string, int>>& params,
                             const std::string& normalization = "") {
    for (const auto& e : r.entries)
        if (e.claim == claim && e.params == params && e.normalization == normalization)
            return &e;
    return nullptr;
}

bool entry_verdict(const AuditReport& r, std::string& note, const std::string& claim,
                   const std::vector<std::pair<std::string, int>>& params,
                   const std::string& verdict, const std::string& normalization = "") {
    const AuditEntry* e = find_entry(r, claim, params, normalization);
    if (!e) { if (note.empty()) note = claim + ": entry missing"; return false; }
    if (e->verdict != verdict) {
        if (note.empty()) note = claim + ": verdict " + e->verdict + ", expected " + verdict;
        return false;
    }
    return true;
}

} // namespace

int main() {
    AuditReport audit; // shared by criteria 4, 6, 9
    std::string audit_json_first;
    auto total0 = clock_type::now();

    run_criterion(1, "ring correctness", 10.0, [](std::string& note) {
        bool ok = true;
        for (int q = 1; q <= 2 && ok; ++q) {
            Ring r(q);
            for (std::uint32_t x = 0; x < r.size() && ok; ++x)
                for (std::uint32_t y = 0; y < r.size() && ok; ++y) {
                    auto ex = static_cast<elem_t>(x), ey = static_cast<elem_t>(y);
                    ok &= r.mul(ex, ey) == r.mul(ey, ex);
                    for (std::uint32_t z = 0; z < r.size() && ok; ++z) {
                        auto ez = static_cast<elem_t>(z);
                        ok &= r.mul(r.mul(ex, ey), ez) == r.mul(ex, r.mul(ey, ez));
                        ok &= r.mul(ex, r.add(ey, ez)) == r.add(r.mul(ex, ey), r.mul(ex, ez));
                    }
                }
            ok = check(ok, note, "ring axiom failed at q=" + std::to_string(q));
        }
        for (int q = 1; q <= 3 && ok; ++q) {
            Ring r(q);
            std::uint64_t units = 0;
            std::int64_t chi_sum = 0;
            for (std::uint32_t x = 0; x < r.size(); ++x) {
                if (r.is_unit(static_cast<elem_t>(x))) ++units;
                chi_sum += r.chi(static_cast<elem_t>(x));
            }
            ok = check(units == (std::uint64_t(1) << (r.num_monomials() - 1)), note,
                       "unit count wrong at q=" + std::to_string(q)) &&
                 check(chi_sum == 0, note, "character sum nonzero at q=" + std::to_string(q));
        }
        return ok;
    });

    run_criterion(2, "homogeneous weight character formula", 0, [](std::string& note) {
        for (int q = 1; q <= 3; ++q) {
            Rational gammas[] = {Rational(1), Rational(std::int64_t(1) << (q - 1)),
                                 Rational(std::int64_t(1) << q)};
            for (const Rational& g : gammas) {
                Ring r(q, g);
                for (std::uint32_t x = 0; x < r.size(); ++x)
                    if (r.hom_weight_character(static_cast<elem_t>(x)) !=
                        r.hom_weight_closed(static_cast<elem_t>(x)))
                        return check(false, note,
                                     "q=" + std::to_string(q) + " gamma=" + g.str() +
                                         " x=" + std::to_string(x));
            }
        }
        return true;
    });

    run_criterion(3, "Gray map properties", 0, [](std::string& note) {
        bool ok = true;
        for (int q = 1; q <= 2 && ok; ++q) {
            Ring r(q);
            std::set<gray_t> seen;
            for (std::uint32_t x = 0; x < r.size() && ok; ++x) {
                seen.insert(r.lee_gray(static_cast<elem_t>(x)));
                for (std::uint32_t y = 0; y < r.size(); ++y)
                    ok &= r.lee_gray(static_cast<elem_t>(x ^ y)) ==
                          (r.lee_gray(static_cast<elem_t>(x)) ^ r.lee_gray(static_cast<elem_t>(y)));
            }
            ok = check(ok && seen.size() == r.size(), note,
                       "Lee Gray not linear/injective at q=" + std::to_string(q));
        }
        for (int q = 1; q <= 3 && ok; ++q) {
            Ring r(q);
            for (int a = 0; a < r.num_monomials() && ok; ++a)
                ok = check(r.lee_weight(static_cast<elem_t>(1u << a)) ==
                               (1u << __builtin_popcount(unsigned(a))),
                           note, "monomial Lee weight wrong at q=" + std::to_string(q));
            for (std::uint32_t x = 0; x < r.size() && ok; ++x) {
                for (std::uint32_t y = 0; y < r.size() && ok; ++y)
                    ok = check(r.hom_gray(static_cast<elem_t>(x ^ y), HomGrayMode::linear) ==
                                   (r.hom_gray(static_cast<elem_t>(x), HomGrayMode::linear) ^
                                    r.hom_gray(static_cast<elem_t>(y), HomGrayMode::linear)),
                               note, "hom Gray linear mode not additive at q=" + std::to_string(q));
                auto wx = static_cast<std::uint32_t>(
                    __builtin_popcount(r.hom_gray(static_cast<elem_t>(x), HomGrayMode::weight_exact)));
                ok = check(Rational(wx) == r.hom_weight_closed(static_cast<elem_t>(x)), note,
                           "weight-exact hom Gray wrong at q=" + std::to_string(q));
                if (q <= 2) {
                    auto wl = static_cast<std::uint32_t>(
                        __builtin_popcount(r.hom_gray(static_cast<elem_t>(x), HomGrayMode::linear)));
                    ok = check(Rational(wl) == r.hom_weight_closed(static_cast<elem_t>(x)), note,
                               "linear hom Gray not weight-exact at q=" + std::to_string(q));
                }
            }
        }
        return ok;
    });

    // run the full audit once up front for the criteria that consume it
    try {
        audit = run_audit();
        std::ostringstream os;
        write_json(os, audit);
        audit_json_first = os.str();
    } catch (const std::exception& e) {
        std::printf("audit run failed: %s\n", e.what());
    }

    run_criterion(4, "simplex alpha columns, 2-dimension, Lee distribution", 0,
                  [&](std::string& note) {
        const std::pair<int, unsigned> points[] = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
        for (auto [q, k] : points) {
            Ring ring(q);
            RqMatrix g = simplex_alpha_generator(ring, k);
            unsigned m = unsigned(ring.num_monomials());
            std::set<RqVector> cols;
            for (std::size_t j = 0; j < g.cols; ++j) {
                RqVector c(g.rows);
                for (std::size_t i = 0; i < g.rows; ++i) c[i] = g.at(i, j);
                cols.insert(c);
            }
            if (!check(g.cols == (std::uint64_t(1) << (m * k)) && cols.size() == g.cols, note,
                       "column multiset wrong at q=" + std::to_string(q) + " k=" + std::to_string(k)))
                return false;
            CodeOverRq code = enumerate_code(g);
            if (!check(code.two_dim == m * k, note, "2-dimension wrong")) return false;
            std::map<Rational, std::uint64_t> expect{
                {0, 1},
                {Rational(std::int64_t(1) << (m * k + unsigned(q) - 1)),
                 (std::uint64_t(1) << (m * k)) - 1}};
            if (!check(weight_distribution(code, Metric::lee).counts == expect, note,
                       "Lee distribution wrong"))
                return false;
            if (!check(!weight_distribution(code, Metric::hamming).counts.empty() &&
                           !weight_distribution(code, Metric::hom).counts.empty(),
                       note, "Hamming/hom distribution missing"))
                return false;
        }
        // the Hamming and hom distributions are audited
        return check(find_entry(audit, "thm-3.5-i", {{"q", 1}, {"k", 1}}) != nullptr &&
                         find_entry(audit, "thm-3.5-iii", {{"q", 1}, {"k", 1}}, "gamma=2^q") != nullptr,
                     note, "distribution audit entries missing");
    });

    run_criterion(5, "simplex beta width formula", 0, [](std::string& note) {
        for (int q = 1; q <= 2; ++q)
            for (unsigned k = 1; k <= 3; ++k) {
                Ring ring(q);
                RqMatrix g = simplex_beta_generator(ring, k);
                std::uint64_t w = k == 1 ? 1
                                         : (std::uint64_t(1) << (((1u << q) - 1) * (k - 1))) *
                                               ((std::uint64_t(1) << k) - 1);
                if (!check(g.cols == w, note,
                           "width wrong at q=" + std::to_string(q) + " k=" + std::to_string(k)))
                    return false;
            }
        return true;
    });

    run_criterion(6, "structure theorems via concatenation checks", 0, [&](std::string& note) {
        bool ok = true;
        for (auto [q, k] : {std::pair<int, int>{1, 1}, {1, 2}, {2, 1}})
            ok &= entry_verdict(audit, note, "thm-3.10-lee-image", {{"q", q}, {"k", k}}, "agree");
        for (int k : {1, 2})
            ok &= entry_verdict(audit, note, "thm-3.7-projection", {{"q", 2}, {"k", k}}, "agree");
        for (int k : {1, 2})
            ok &= entry_verdict(audit, note, "lem-3.6-torsion-alpha", {{"q", 1}, {"k", k}}, "agree");
        for (const char* c :
             {"thm-3.11-hom-image", "thm-3.8-iterated-projection", "prop-4.2-structure",
              "lem-4.4-torsion-beta", "thm-4.6-projection", "thm-4.7-iterated-projection",
              "thm-4.8-lee-image", "thm-4.9-hom-image", "thm-5.1-projection-alpha",
              "thm-5.1-projection-beta", "thm-5.2-iterated-projection-alpha",
              "thm-5.2-iterated-projection-beta", "thm-5.3-torsion-alpha-wdist",
              "thm-5.5-torsion-beta-wdist", "thm-5.6-lee-image-alpha", "thm-5.7-hom-image-alpha",
              "thm-5.8-lee-image-beta", "thm-5.9-hom-image-beta"}) {
            bool present = false;
            for (const auto& e : audit.entries)
                if (e.claim == c) { present = true; break; }
            ok = check(present, note, std::string(c) + ": no recorded verdict") && ok;
        }
        return ok;
    });

    run_criterion(7, "MacDonald lengths and deletion counts", 0, [](std::string& note) {
        for (int q = 1; q <= 2; ++q)
            for (unsigned k = 2; k <= 3; ++k)
                for (unsigned u = 1; u < k; ++u) {
                    Ring ring(q);
                    unsigned m = unsigned(ring.num_monomials());
                    RqMatrix ma = macdonald_alpha_generator(ring, k, u); // asserts internally
                    if (!check(ma.cols == (std::uint64_t(1) << (m * k)) - (std::uint64_t(1) << (m * u)),
                               note, "alpha length wrong"))
                        return false;
                    auto bw = [&](unsigned kk) -> std::uint64_t {
                        return kk == 1 ? 1
                                       : (std::uint64_t(1) << ((m - 1) * (kk - 1))) *
                                             ((std::uint64_t(1) << kk) - 1);
                    };
                    RqMatrix mb = macdonald_beta_generator(ring, k, u);
                    if (!check(mb.cols == bw(k) - bw(u), note, "beta length wrong")) return false;
                }
        return true;
    });

    run_criterion(8, "covering radius engine agreement", 60.0, [](std::string& note) {
        Ring r1(1);
        Ring r2(2);
        std::vector<std::pair<std::string, CodeOverRq>> instances;
        for (unsigned n = 1; n <= 3; ++n)
            instances.emplace_back("C_theta q=1 n=" + std::to_string(n),
                                   enumerate_code(repetition_generator(r1, r1.theta(), n)));
        for (unsigned n = 2; n <= 3; ++n)
            instances.emplace_back("C_1 q=1 n=" + std::to_string(n),
                                   enumerate_code(repetition_generator(r1, 1, n)));
        instances.emplace_back("S_alpha (1,1)", enumerate_code(simplex_alpha_generator(r1, 1)));
        instances.emplace_back("S_beta (1,2)", enumerate_code(simplex_beta_generator(r1, 2)));
        instances.emplace_back("C_{1+u1} q=1 n=2", enumerate_code(repetition_generator(r1, 3, 2)));
        instances.emplace_back("block rep q=1 n=1", enumerate_code(block_repetition_generator(r1, 1)));
        instances.emplace_back("C_theta q=2 n=1",
                               enumerate_code(repetition_generator(r2, r2.theta(), 1)));
        instances.emplace_back("M_beta (1,2,1)", enumerate_code(macdonald_beta_generator(r1, 2, 1)));
        for (const auto& [name, code] : instances) {
            CoveringRadiusResult ex = covering_radius_exhaustive(code, Metric::lee);
            CoveringRadiusResult dp = covering_radius_profile_dp(code, Metric::lee);
            CoveringRadiusResult sy = covering_radius_gray_syndrome(code);
            if (!check(ex.value == dp.value && ex.value == sy.value, note,
                       name + ": engines disagree"))
                return false;
            if (!check(distance_to_code(code, ex.certificate, Metric::lee) == ex.value &&
                           distance_to_code(code, sy.certificate, Metric::lee) == sy.value,
                       note, name + ": certificate does not attain the radius"))
                return false;
        }
        return check(instances.size() >= 10, note, "fewer than 10 instances");
    });

    run_criterion(9, "audit report determinism and pinned verdicts", 0, [&](std::string& note) {
        if (!check(!audit.entries.empty(), note, "audit did not run")) return false;
        AuditReport again = run_audit();
        std::ostringstream os;
        write_json(os, again);
        if (!check(os.str() == audit_json_first, note, "audit output not deterministic"))
            return false;
        bool ok = true;
        ok &= entry_verdict(audit, note, "thm-3.5-ii", {{"q", 1}, {"k", 1}}, "agree");
        ok &= entry_verdict(audit, note, "thm-3.5-ii", {{"q", 1}, {"k", 2}}, "agree");
        ok &= entry_verdict(audit, note, "thm-3.5-iii", {{"q", 1}, {"k", 1}}, "mismatch", "gamma=2^q");
        ok &= entry_verdict(audit, note, "thm-3.5-iii", {{"q", 1}, {"k", 1}}, "agree", "gamma=2^(q-1)");
        ok &= entry_verdict(audit, note, "thm-7.1-ii-lee", {{"q", 1}, {"k", 2}}, "infeasible-claim");
        const AuditEntry* e = find_entry(audit, "thm-6.1-ii-lee", {{"q", 1}, {"n", 1}});
        ok = check(e && e->verdict == "mismatch" && e->computed == "1", note,
                   "thm-6.1-ii-lee (q=1,n=1) verdict wrong") && ok;
        return ok;
    });

    double total = std::chrono::duration<double>(clock_type::now() - total0).count();
    run_criterion(10, "full pipeline time budget", 0, [&](std::string& note) {
        return check(total < 300.0, note, "pipeline took " + std::to_string(total) + " s");
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
