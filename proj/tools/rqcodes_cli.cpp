#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rqcodes/analysis.hpp"
#include "rqcodes/audit.hpp"
#include "rqcodes/constructions.hpp"

using namespace rqc;

namespace {

struct FamilyArgs {
    std::string family;
    int q = 1;
    unsigned k = 1;
    unsigned u = 1;
    unsigned n = 1;
    std::string c = "1";
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa, bool required = true) {
    auto* opt = cmd->add_option("--family", fa.family,
                                "simplex-alpha|simplex-beta|macdonald-alpha|macdonald-beta|"
                                "binary-simplex-alpha|binary-simplex-beta|repetition|"
                                "block-repetition");
    if (required) opt->required();
    cmd->add_option("--q", fa.q, "ring parameter q (1..4)");
    cmd->add_option("--k", fa.k, "dimension parameter k");
    cmd->add_option("--u", fa.u, "MacDonald deletion parameter u");
    cmd->add_option("--n", fa.n, "repetition length n");
    cmd->add_option("--c", fa.c, "repetition symbol (bitmask, symbolic, or 'theta')");
}

Rational parse_gamma(const std::string& text, int q) {
    if (text.empty()) return Rational(std::int64_t(1) << q);
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

bool is_binary_family(const std::string& f) {
    return f == "binary-simplex-alpha" || f == "binary-simplex-beta" || f == "binary-macdonald";
}

RqMatrix build_ring_family(const FamilyArgs& fa, const Rational& gamma, std::uint64_t limit) {
    Ring ring(fa.q, gamma);
    if (fa.family == "simplex-alpha") return simplex_alpha_generator(ring, fa.k, limit);
    if (fa.family == "simplex-beta") return simplex_beta_generator(ring, fa.k, limit);
    if (fa.family == "macdonald-alpha") return macdonald_alpha_generator(ring, fa.k, fa.u, limit);
    if (fa.family == "macdonald-beta") return macdonald_beta_generator(ring, fa.k, fa.u, limit);
    if (fa.family == "repetition")
        return repetition_generator(ring, parse_element(ring, fa.c), fa.n);
    if (fa.family == "block-repetition") return block_repetition_generator(ring, fa.n);
    throw parameter_error("unknown family: " + fa.family);
}

BinaryMatrix build_binary_family(const FamilyArgs& fa) {
    if (fa.family == "binary-simplex-alpha") return binary_simplex_alpha(fa.k);
    if (fa.family == "binary-simplex-beta") return binary_simplex_beta(fa.k);
    if (fa.family == "binary-macdonald") return binary_macdonald(fa.k, fa.u);
    throw parameter_error("unknown binary family: " + fa.family);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw parameter_error("cannot open output file: " + path);
    return file;
}

nlohmann::ordered_json params_json(const FamilyArgs& fa) {
    nlohmann::ordered_json j;
    j["q"] = fa.q;
    j["k"] = fa.k;
    if (fa.family.rfind("macdonald", 0) == 0 || fa.family == "binary-macdonald") j["u"] = fa.u;
    if (fa.family == "repetition" || fa.family == "block-repetition") {
        j["n"] = fa.n;
        if (fa.family == "repetition") j["c"] = fa.c;
    }
    return j;
}

std::uint64_t env_enum_limit(std::uint64_t cli_override) {
    return cli_override ? cli_override : default_enum_limit();
}

int dispatch(int argc, char** argv) {
    CLI::App app{"simplex and MacDonald codes over R_q: construction, analysis, audit"};
    app.require_subcommand(1);

    std::string out_path, format = "text", metric_name_s = "lee", gamma_s, map_s = "lee",
                mode_s = "linear", engine_s = "auto", in_path;
    std::uint64_t limit_override = 0;
    unsigned workers = 0, subset = 0;
    bool fail_on_mismatch = false;
    FamilyArgs fa;
    AuditBudget budget;

    auto* gen = app.add_subcommand("gen", "emit a generator matrix");
    add_family_options(gen, fa);
    gen->add_option("--out", out_path);
    gen->add_option("--format", format, "text|json");
    gen->add_option("--enum-limit", limit_override);

    auto* enum_cmd = app.add_subcommand("enum", "enumerate all codewords");
    add_family_options(enum_cmd, fa);
    enum_cmd->add_option("--out", out_path);
    enum_cmd->add_option("--format", format, "text|json");
    enum_cmd->add_option("--enum-limit", limit_override);

    auto* wdist = app.add_subcommand("wdist", "weight distribution");
    add_family_options(wdist, fa);
    wdist->add_option("--metric", metric_name_s, "hamming|lee|hom");
    wdist->add_option("--gamma", gamma_s, "homogeneous scale (integer or p/q; default 2^q)");
    wdist->add_option("--out", out_path);
    wdist->add_option("--format", format, "text|json");
    wdist->add_option("--enum-limit", limit_override);

    auto* gray = app.add_subcommand("gray", "binary Gray image of the generator");
    add_family_options(gray, fa);
    gray->add_option("--map", map_s, "lee|hom");
    gray->add_option("--mode", mode_s, "linear|weight-exact (hom only)");
    gray->add_option("--out", out_path);
    gray->add_option("--enum-limit", limit_override);

    auto* torsion = app.add_subcommand("torsion", "torsion code Tor_A(C)");
    add_family_options(torsion, fa);
    torsion->add_option("--subset", subset, "characteristic mask of A (default: full, theta)");
    torsion->add_option("--out", out_path);
    torsion->add_option("--enum-limit", limit_override);

    auto* project = app.add_subcommand("project", "Gamma_q image of the generator");
    add_family_options(project, fa);
    project->add_option("--out", out_path);
    project->add_option("--enum-limit", limit_override);

    auto* covradius = app.add_subcommand("covradius", "exact covering radius");
    add_family_options(covradius, fa);
    covradius->add_option("--metric", metric_name_s, "hamming|lee|hom");
    covradius->add_option("--gamma", gamma_s);
    covradius->add_option("--engine", engine_s, "auto|exhaustive|profile-dp|gray-syndrome");
    covradius->add_option("--workers", workers);
    covradius->add_option("--out", out_path);
    covradius->add_option("--enum-limit", limit_override);

    auto* audit = app.add_subcommand("audit", "run the claim audit");
    audit->add_option("--max-q", budget.max_q);
    audit->add_option("--max-k", budget.max_k);
    audit->add_option("--max-n", budget.max_n);
    audit->add_option("--format", format, "json|csv");
    audit->add_option("--out", out_path);
    audit->add_option("--enum-limit", limit_override);
    audit->add_flag("--fail-on-mismatch", fail_on_mismatch);

    auto* verify = app.add_subcommand("verify", "parse a matrix file and round-trip it");
    verify->add_option("--in", in_path)->required();
    verify->add_option("--out", out_path);
    verify->add_option("--enum-limit", limit_override);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::uint64_t limit = env_enum_limit(limit_override);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);

    if (gen->parsed()) {
        if (is_binary_family(fa.family)) {
            write_matrix(os, build_binary_family(fa));
            return 0;
        }
        RqMatrix g = build_ring_family(fa, parse_gamma(gamma_s, fa.q), limit);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["family"] = fa.family;
            j["params"] = params_json(fa);
            j["q"] = g.ring.q();
            j["rows"] = g.rows;
            j["cols"] = g.cols;
            auto rows = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < g.rows; ++i) {
                auto row = nlohmann::ordered_json::array();
                for (std::size_t jx = 0; jx < g.cols; ++jx) row.push_back(g.at(i, jx));
                rows.push_back(std::move(row));
            }
            j["entries"] = rows;
            os << j.dump(2) << "\n";
        } else {
            write_matrix(os, g);
        }
        return 0;
    }

    if (verify->parsed()) {
        std::ifstream in(in_path);
        if (!in) throw parameter_error("cannot open input file: " + in_path);
        RqMatrix g = read_matrix(in);
        std::ostringstream round;
        write_matrix(round, g);
        std::istringstream back(round.str());
        RqMatrix g2 = read_matrix(back);
        bool ok = g.entries == g2.entries && g.rows == g2.rows && g.cols == g2.cols &&
                  g.ring.q() == g2.ring.q();
        os << "q=" << g.ring.q() << " rows=" << g.rows << " cols=" << g.cols
           << " round-trip=" << (ok ? "ok" : "FAILED") << "\n";
        return ok ? 0 : 2;
    }

    if (audit->parsed()) {
        budget.enum_limit = limit;
        AuditReport report = run_audit(budget);
        if (format == "csv") write_csv(os, report);
        else write_json(os, report);
        return (fail_on_mismatch && has_mismatch(report)) ? 1 : 0;
    }

    // Remaining subcommands operate on a ring-family generator.
    if (is_binary_family(fa.family))
        throw parameter_error("subcommand requires a ring family, not " + fa.family);
    Rational gamma = parse_gamma(gamma_s, fa.q);
    RqMatrix g = build_ring_family(fa, gamma, limit);

    if (gray->parsed()) {
        GrayMap map = map_s == "hom" ? GrayMap::hom : GrayMap::lee;
        HomGrayMode mode = mode_s == "weight-exact" ? HomGrayMode::weight_exact
                                                    : HomGrayMode::linear;
        write_matrix(os, gray_image_matrix(g, map, mode));
        return 0;
    }
    if (project->parsed()) {
        Ring pr = g.ring.projected_ring();
        RqMatrix out(pr, g.rows, g.cols);
        for (std::size_t i = 0; i < g.rows; ++i)
            for (std::size_t j = 0; j < g.cols; ++j)
                out.at(i, j) = g.ring.gamma_project(g.at(i, j));
        write_matrix(os, out);
        return 0;
    }

    CodeOverRq code = enumerate_code(g, limit);

    if (enum_cmd->parsed()) {
        if (format == "json") {
            nlohmann::ordered_json j;
            j["family"] = fa.family;
            j["params"] = params_json(fa);
            j["size"] = code.codewords.size();
            j["two_dimension"] = two_dimension(code);
            os << j.dump(2) << "\n";
        } else {
            os << "size=" << code.codewords.size() << " two-dimension=" << two_dimension(code)
               << "\n";
            for (const RqVector& c : code.codewords) {
                for (std::size_t i = 0; i < c.size(); ++i)
                    os << (i ? " " : "") << render_element(c[i]);
                os << "\n";
            }
        }
        return 0;
    }

    if (wdist->parsed()) {
        Metric metric = parse_metric(metric_name_s);
        WeightDistribution wd = weight_distribution(code, metric);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["family"] = fa.family;
            j["params"] = params_json(fa);
            j["metric"] = metric_name(metric);
            if (metric == Metric::hom) j["gamma"] = gamma.str();
            nlohmann::ordered_json d;
            for (const auto& [w, c] : wd.counts) d[w.str()] = c;
            j["distribution"] = d;
            os << j.dump(2) << "\n";
        } else {
            for (const auto& [w, c] : wd.counts) os << w.str() << ": " << c << "\n";
        }
        return 0;
    }

    if (torsion->parsed()) {
        unsigned mask = torsion->count("--subset") ? subset : (1u << g.ring.q()) - 1;
        BinaryCode tc = torsion_code(code, mask);
        BinaryMatrix m(tc.words.size(), tc.length);
        for (std::size_t i = 0; i < tc.words.size(); ++i) m.bits[i] = tc.words[i];
        write_matrix(os, m);
        return 0;
    }

    if (covradius->parsed()) {
        Metric metric = parse_metric(metric_name_s);
        CoveringRadiusResult res{metric, Rational(0), CrEngine::exhaustive, {}};
        if (engine_s == "exhaustive" || engine_s == "auto") {
            unsigned bits = static_cast<unsigned>(g.ring.num_monomials()) *
                            static_cast<unsigned>(g.cols);
            bool fits = bits < 63 && (std::uint64_t(1) << bits) <= limit;
            if (engine_s == "exhaustive" || fits)
                res = covering_radius_exhaustive(code, metric, limit, workers);
            else if (metric == Metric::lee)
                res = covering_radius_gray_syndrome(code);
            else
                res = covering_radius_profile_dp(code, metric);
        } else if (engine_s == "gray-syndrome") {
            if (metric != Metric::lee)
                throw parameter_error("gray-syndrome engine is Lee-only");
            res = covering_radius_gray_syndrome(code);
        } else if (engine_s == "profile-dp") {
            res = covering_radius_profile_dp(code, metric);
        } else {
            throw parameter_error("unknown engine: " + engine_s);
        }
        nlohmann::ordered_json j;
        j["family"] = fa.family;
        j["params"] = params_json(fa);
        j["metric"] = metric_name(res.metric);
        if (metric == Metric::hom) j["gamma"] = gamma.str();
        j["radius"] = res.value.str();
        j["engine"] = engine_name(res.engine);
        auto cert = nlohmann::ordered_json::array();
        for (elem_t x : res.certificate) cert.push_back(x);
        j["certificate"] = cert;
        os << j.dump(2) << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
