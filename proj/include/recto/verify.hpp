#pragma once

// Verification of a reconstruction run against the embedded papyrus table.

#include <cstdint>
#include <string>
#include <vector>

#include "recto/selection.hpp"

namespace recto {

struct VerifyEntry {
    std::int64_t d = 0;
    bool match = false;
    std::vector<std::int64_t> expected;
    std::vector<std::int64_t> actual;    // empty when reconstruction failed
    std::vector<Rule> rationale;
    std::string error;                   // reconstruction failure, if any
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;  // ascending by d
    int matches = 0;
    int mismatches = 0;

    bool all_match() const { return mismatches == 0; }
};

// Reconstructs every table prime under the given flags and compares the
// denominator lists entry by entry. Per-prime failures become mismatches
// with the error recorded; the report is always complete.
VerifyReport run_verify(const TopFlags& flags = {});

} // namespace recto
