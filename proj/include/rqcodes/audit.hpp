#ifndef RQCODES_AUDIT_HPP
#define RQCODES_AUDIT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rqcodes/linalg.hpp"

namespace rqc {

// One checked claim at one parameter point. `claimed` and `computed` are
// canonical strings (numbers or {weight:count,...} distributions) so that
// comparison and serialization are byte-deterministic.
struct AuditEntry {
    std::string claim;
    std::string source;
    std::vector<std::pair<std::string, int>> params; // listed in q,k,u,n order
    std::string normalization; // "" when the claim has a single reading
    std::string claimed;
    std::string computed;
    std::string verdict; // agree | mismatch | infeasible-claim | skipped-guard
    std::string note;
};

struct AuditBudget {
    int max_q = 2;
    unsigned max_k = 3;
    unsigned max_n = 3;
    std::uint64_t enum_limit = default_enum_limit();
};

struct AuditReport {
    std::vector<AuditEntry> entries; // sorted by (claim, params, normalization)
};

// Evaluates every cataloged claim at the enumerable points inside the budget.
// Guards never raise; they yield skipped-guard entries.
AuditReport run_audit(const AuditBudget& budget = {});

void write_json(std::ostream& os, const AuditReport& report);
void write_csv(std::ostream& os, const AuditReport& report);

bool has_mismatch(const AuditReport& report);

} // namespace rqc

#endif
