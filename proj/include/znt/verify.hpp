#pragma once

#include <string>
#include <vector>

namespace znt {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // deterministic, 12-significant-digit numbers
};

struct VerifyOptions {
    bool quick = false;    // reduced ranges; same criteria list
    unsigned threads = 1;
    bool progress = false; // stderr progress notes (never part of the report)
};

struct VerifyReport {
    std::vector<CriterionResult> criteria;
    std::string text;  // one line per criterion, byte-stable given options
    bool all_pass = false;
};

VerifyReport run_verification(const VerifyOptions& opts);

} // namespace znt
