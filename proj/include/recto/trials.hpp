#pragma once

// Trial tables. Writing the head as D1 = (D+1)/2 + n turns the identity
// 2*D1 - D = 2n+1 into an additive puzzle: split the odd number 2n+1 into
// 2 or 3 strictly decreasing divisors of D1, each at most D1/2 so that all
// tail multipliers stay >= 2. Every surviving split yields an exact
// decomposition via D_i = D * D1 / d_i.

#include <cstdint>
#include <vector>

#include "recto/decomposition.hpp"
#include "recto/rational.hpp"

namespace recto {

struct TrialRecord {
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::int64_t odd_sum = 0;          // 2n+1 = 2*head - d
    std::vector<std::int64_t> parts;   // descending divisors of head
    std::int64_t delta = 0;            // difference of the two smallest parts
    std::int64_t head = 0;             // D1 = (d+1)/2 + n
    Decomposition decomposition;
    Rational r_param;                  // (2*head - d) / head

    std::int64_t last_multiplier() const { return decomposition.multipliers.back(); }

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// The unique 2-term decomposition 2/D = 1/D1 + 1/(D*D1) with D1 = (D+1)/2.
// Rejects even or composite D.
Decomposition two_term(std::int64_t d);

// No 3-term trial exists beyond n = (D-3)/2.
std::int64_t n_max3(std::int64_t d);

// Head bound for 3 parts: three distinct divisors of D1, each <= D1/2, sum
// to at most D1/2 + D1/3 + D1/4 = 13*D1/12, and the sum must reach
// 2*D1 - D; hence D1 <= 12D/11. Returns that bound mapped back to n.
std::int64_t n_max4(std::int64_t d);

// All 3-term trials for n = 1..n_max3(d), n ascending then descending d2.
std::vector<TrialRecord> trials3(std::int64_t d);

// All 4-term trials for n = 3..n_max4(d), n ascending then ascending d4, d3.
std::vector<TrialRecord> trials4(std::int64_t d);

} // namespace recto
