#pragma once

// The papyrus 2/D table for prime D, embedded as source data so that
// verification runs with zero setup. 24 entries: five 2-term (including
// 2/3), twelve 3-term, seven 4-term.

#include <cstdint>
#include <vector>

#include "recto/decomposition.hpp"

namespace recto {

struct GroundTruthEntry {
    std::int64_t d;
    std::int64_t head;
    std::vector<std::int64_t> multipliers;

    Decomposition decomposition() const;
};

class GroundTruthTable {
public:
    explicit GroundTruthTable(std::vector<GroundTruthEntry> entries);

    const std::vector<GroundTruthEntry>& entries() const { return entries_; }
    const GroundTruthEntry* find(std::int64_t d) const;

    // Denominator list for a prime; throws std::out_of_range when absent.
    std::vector<std::int64_t> denominators(std::int64_t d) const;

    std::size_t size() const { return entries_.size(); }

private:
    std::vector<GroundTruthEntry> entries_;  // ascending by d
};

// Every entry is validated on first access; a corrupt entry is a logic error.
const GroundTruthTable& ground_truth();

} // namespace recto
