#pragma once

#include "kmf/baranyai.hpp"
#include "kmf/chromatic.hpp"
#include "kmf/minor.hpp"

#include <string>
#include <vector>

namespace kmf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Outcome of a certificate check. Every failing check names the offending
/// block pair, class or vertex in `detail`.
struct VerificationReport {
    std::vector<CheckResult> checks;

    bool pass() const;
    const CheckResult* find(const std::string& name) const;
    /// One "PASS|FAIL name: detail" line per check.
    std::string summary() const;
};

// The verifiers depend on the certificate contents and the definition of
// K̄(n,k) only; they never consult the trace or the builders.

/// Checks: disjoint, connected, crossing_edges, order.
/// Throws StructuralError on a member that is not a k-subset of [n].
VerificationReport verify_minor(const MinorCertificate& c);

/// Checks: partition, independent, optimal.
VerificationReport verify_coloring(const ColoringCertificate& c);

/// Checks: sizes, disjoint_union, almost_regular.
VerificationReport verify_partition(const AlmostRegularPartition& a);

} // namespace kmf
