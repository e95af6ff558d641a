#include "recto/partitions.hpp"

#include <stdexcept>

namespace recto {

std::vector<PartitionTuple> doublets(std::int64_t odd_sum) {
    if (odd_sum % 2 == 0)
        throw std::invalid_argument("doublets: sum must be odd");
    if (odd_sum < 3)
        throw std::invalid_argument("doublets: sum must be >= 3");
    std::vector<PartitionTuple> out;
    for (std::int64_t d2 = odd_sum - 1; 2 * d2 > odd_sum; --d2)
        out.push_back({{d2, odd_sum - d2}, odd_sum});
    return out;
}

std::vector<PartitionTuple> triplets(std::int64_t odd_sum) {
    if (odd_sum % 2 == 0)
        throw std::invalid_argument("triplets: sum must be odd");
    if (odd_sum < 7)
        throw std::invalid_argument("triplets: sum must be >= 7");
    std::vector<PartitionTuple> out;
    for (std::int64_t d4 = 1; 3 * d4 + 3 <= odd_sum; ++d4) {
        for (std::int64_t d3 = d4 + 1;; ++d3) {
            std::int64_t d2 = odd_sum - d3 - d4;
            if (d2 <= d3)
                break;
            out.push_back({{d2, d3, d4}, odd_sum});
        }
    }
    return out;
}

} // namespace recto
