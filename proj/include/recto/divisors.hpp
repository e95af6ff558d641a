#pragma once

// Divisor and primality utilities. Trial division throughout: the whole
// domain tops out at four-digit numbers.

#include <cstdint>
#include <span>
#include <vector>

#include "recto/rational.hpp"

namespace recto {

// Positive divisors of n in strictly ascending order. Rejects n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// True iff n has exactly two divisors.
bool is_prime(std::int64_t n);

// Exact reduced sum of 1/d over the given denominators.
// Rejects an empty list and entries < 1.
Rational sum_of_unit_fractions(std::span<const std::int64_t> denominators);

// The target fraction 2/d.
Rational two_over(std::int64_t d);

} // namespace recto
