#ifndef QGENOCCHI_AUDIT_HPP
#define QGENOCCHI_AUDIT_HPP

#include <string>
#include <vector>

#include <qgenocchi/poly_xy.hpp>

namespace qgenocchi::audit
{

enum class Verdict { holds, fails, holds_at_q1_only };

// "holds", "fails", "holds-at-q=1-only"
std::string to_string(Verdict v);

struct AuditRecord {
    std::string identity_id; // e.g. "thm7-printed", "distribution-corrected d=3"
    std::string variant;     // "printed", "printed-derivation", "corrected", "hurwitz"
    std::vector<int> n_tested;
    // First nonzero residual, or zero when the identity holds on n_tested.
    PolyXY residual;
    Verdict verdict = Verdict::holds;
    // "0" when every residual vanishes, otherwise "n=K: <residual>" for the
    // first failing K. Numeric records report their largest error.
    std::string residual_text;
};

// Every identity under audit for n (or m) up to n_max, in a fixed order.
// Residual computations run concurrently; the result order does not depend on
// scheduling. Throws domain_error for n_max < 2.
std::vector<AuditRecord> audit_all(int n_max);

// Tab-separated identity_id, variant, verdict with a header line; the format
// of the checked-in expectation table.
std::string expectation_table(const std::vector<AuditRecord> &records);

// Plain-text report, one line per record.
std::string render_text(const std::vector<AuditRecord> &records);

} // namespace qgenocchi::audit

#endif
