#pragma once

#include <string>
#include <vector>

namespace orbitdual::cli {

/// One line of the golden suite: a stored expectation against a fresh computation.
struct VerifyRow {
    std::string group;
    std::string check;
    std::string expected;
    std::string actual;
    bool ok = false;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::string filter;        // group name; empty runs every group
    bool inject_fault = false; // corrupts one stored expectation (negative control)
    unsigned jobs = 1;
};

/// Group names in run order.
const std::vector<std::string>& verify_groups();

/// Throws DomainError(RangeViolation) for an unknown filter.
std::vector<VerifyRow> run_verify(const VerifyOptions& options);

std::string format_table(const std::vector<VerifyRow>& rows);

} // namespace orbitdual::cli
