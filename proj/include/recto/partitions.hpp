#pragma once

// Partitions of an odd number into 2 or 3 strictly decreasing positive
// parts, emitted in a fixed order. For sum 2n+1 there are n doublets with
// max d2 = 2n, and floor(n/2)*floor((n+1)/2) - 1 triplets with
// max d2 = 2n-2.

#include <cstdint>
#include <vector>

namespace recto {

struct PartitionTuple {
    std::vector<std::int64_t> parts;  // strictly descending
    std::int64_t sum = 0;             // odd
};

// All (d2 > d3 >= 1) with d2 + d3 = odd_sum, descending d2.
// Rejects even input and sums below 3.
std::vector<PartitionTuple> doublets(std::int64_t odd_sum);

// All (d2 > d3 > d4 >= 1) with d2 + d3 + d4 = odd_sum, ascending d4 then d3.
// Rejects even input and sums below 7.
std::vector<PartitionTuple> triplets(std::int64_t odd_sum);

} // namespace recto
