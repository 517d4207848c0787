#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "rqcodes/audit.hpp"

using namespace rqc;

namespace {

AuditBudget small_budget() {
    AuditBudget b;
    b.max_q = 1;
    b.max_k = 2;
    b.max_n = 2;
    return b;
}

const AuditEntry* find_entry(const AuditReport& r, const std::string& claim,
                             const std::vector<std::pair<std::string, int>>& params,
                             const std::string& normalization = "") {
    for (const auto& e : r.entries)
        if (e.claim == claim && e.params == params && e.normalization == normalization)
            return &e;
    return nullptr;
}

} // namespace

TEST_CASE("audit verdicts are from the fixed vocabulary and entries are sorted") {
    AuditReport r = run_audit(small_budget());
    CHECK(!r.entries.empty());
    const std::set<std::string> allowed{"agree", "mismatch", "infeasible-claim", "skipped-guard"};
    for (const auto& e : r.entries) {
        CHECK(allowed.count(e.verdict) == 1);
        CHECK(!e.claim.empty());
        CHECK(!e.source.empty());
    }
    auto key = [](const AuditEntry& e) {
        std::string pk;
        for (const auto& [n, v] : e.params) {
            if (!pk.empty()) pk += ",";
            pk += n + "=" + std::to_string(v);
        }
        return std::make_tuple(e.claim, pk, e.normalization);
    };
    for (std::size_t i = 1; i < r.entries.size(); ++i)
        CHECK(key(r.entries[i - 1]) <= key(r.entries[i]));
}

TEST_CASE("audit pins the expected verdicts at q = 1") {
    AuditReport r = run_audit(small_budget());

    const AuditEntry* a = find_entry(r, "thm-3.5-ii", {{"q", 1}, {"k", 1}});
    REQUIRE(a);
    CHECK(a->verdict == "agree");
    const AuditEntry* b = find_entry(r, "thm-3.5-ii", {{"q", 1}, {"k", 2}});
    REQUIRE(b);
    CHECK(b->verdict == "agree");

    const AuditEntry* c = find_entry(r, "thm-3.5-iii", {{"q", 1}, {"k", 1}}, "gamma=2^q");
    REQUIRE(c);
    CHECK(c->verdict == "mismatch");
    const AuditEntry* d = find_entry(r, "thm-3.5-iii", {{"q", 1}, {"k", 1}}, "gamma=2^(q-1)");
    REQUIRE(d);
    CHECK(d->verdict == "agree");

    const AuditEntry* e = find_entry(r, "thm-7.1-ii-lee", {{"q", 1}, {"k", 2}});
    REQUIRE(e);
    CHECK(e->verdict == "infeasible-claim");
    CHECK(e->claimed == "128");

    const AuditEntry* f = find_entry(r, "thm-6.1-ii-lee", {{"q", 1}, {"n", 1}});
    REQUIRE(f);
    CHECK(f->verdict == "mismatch");
    CHECK(f->computed == "1");
    CHECK(f->claimed == "2");
}

TEST_CASE("audit output is byte-deterministic") {
    AuditBudget b = small_budget();
    AuditReport r1 = run_audit(b);
    AuditReport r2 = run_audit(b);
    std::ostringstream j1, j2, c1, c2;
    write_json(j1, r1);
    write_json(j2, r2);
    write_csv(c1, r1);
    write_csv(c2, r2);
    CHECK(j1.str() == j2.str());
    CHECK(c1.str() == c2.str());
    CHECK(!j1.str().empty());
}

TEST_CASE("csv mirror has one quoted row per entry plus a header") {
    AuditReport r = run_audit(small_budget());
    std::ostringstream os;
    write_csv(os, r);
    std::istringstream is(os.str());
    std::string line;
    std::size_t rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == r.entries.size() + 1);
}

TEST_CASE("has_mismatch reflects the verdicts") {
    AuditReport r = run_audit(small_budget());
    bool any = std::any_of(r.entries.begin(), r.entries.end(),
                           [](const AuditEntry& e) { return e.verdict == "mismatch"; });
    CHECK(any); // thm-3.5-iii under gamma=2^q guarantees one at q=1
    CHECK(has_mismatch(r) == any);
}

TEST_CASE("every claim family appears in the default catalog at q = 1") {
    AuditReport r = run_audit(small_budget());
    std::set<std::string> claims;
    for (const auto& e : r.entries) claims.insert(e.claim);
    for (const char* c :
         {"prop-2.2-units", "lem-2.7-charsum", "prop-2.6-hom-character", "lem-2.3-isometry",
          "lem-2.8-hom-image", "lem-3.3-balance", "lem-3.4-type-counts", "thm-3.5-i",
          "thm-3.5-ii", "thm-3.5-iii", "lem-3.6-torsion-alpha", "thm-3.10-lee-image",
          "thm-3.11-hom-image", "sec-4-beta-width", "prop-4.2-structure", "lem-4.4-torsion-beta",
          "thm-4.5-i", "thm-4.8-lee-image", "sec-5-macdonald-alpha-length", "thm-5.4-ii",
          "thm-5.6-lee-image-alpha", "thm-6.1-ii-lee", "thm-6.2-lee", "thm-7.1-ii-lee",
          "thm-7.2-ii-lee", "thm-7.3-ii-lee", "thm-7.4-ii-lee"})
        CHECK_MESSAGE(claims.count(c) == 1, c);
}
