#pragma once

// The identity suite: every checkable statement the library implements, run
// against one corpus case. Each record carries exact both-sides values so a
// failure is reproducible from the report alone.

#include <string>
#include <vector>

#include "folkit/parser.hpp"

namespace folkit {

struct IdentityRecord {
    std::string case_name;
    std::string identity; // stable machine-readable name, e.g. "branch0:ineq1"
    std::string lhs;      // exact value of the left side (or computed value)
    std::string rhs;      // exact value of the right side (or expected value)
    bool pass = false;
};

struct VerifyConfig {
    long order = 32;       // working order in t units, doubled on precision
    long max_order = 512;  //   exhaustion up to this bound
    int max_depth = 12;
    int ext_bound = 24;
};

// Runs every applicable identity on one case. Computational errors become
// failing records rather than exceptions.
std::vector<IdentityRecord> verify_case(const SourceCase& sc, const VerifyConfig& cfg);

} // namespace folkit
