#pragma once

// Generalized searches that drop the divisor constraint. general_search
// scans multiplier tuples directly and solves for the head; it finds every
// 2/D = 1/D1 + sum 1/(m_i D) with m_2 < ... < m_h <= flag, whether or not
// the multipliers divide D1. unrestricted_search drops even the multiplier
// form and brute-forces bounded denominator tuples; it exists as a
// verification oracle, not a solver.

#include <cstdint>
#include <vector>

namespace recto {

struct GeneralSolution {
    std::int64_t d = 0;
    std::int64_t head = 0;                   // solved from the residual 2/d - sum 1/(m_i d)
    std::vector<std::int64_t> multipliers;   // ascending, each >= 2
    std::vector<std::int64_t> denominators;  // [head, m_2*d, ...]

    // True when every multiplier divides the head, i.e. the solution also
    // has the divisor-derived form.
    bool divisor_compatible() const;

    friend bool operator==(const GeneralSolution&, const GeneralSolution&) = default;
};

// All solutions with multipliers bounded by flag, lexicographic in the
// multiplier tuple. h must be 2, 3 or 4.
std::vector<GeneralSolution> general_search(std::int64_t d, int h, std::int64_t flag);

// Every strictly increasing tuple of h distinct denominators <= max_denominator
// whose unit fractions sum exactly to 2/d. h must be 2 or 3 (oracle scale).
std::vector<std::vector<std::int64_t>> unrestricted_search(std::int64_t d, int h,
                                                           std::int64_t max_denominator);

} // namespace recto
