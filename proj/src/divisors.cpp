#include "recto/divisors.hpp"

#include <algorithm>
#include <stdexcept>

namespace recto {

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t i = 1; i <= n / i; ++i) {
        if (n % i != 0)
            continue;
        small.push_back(i);
        if (i != n / i)
            large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t i = 2; i <= n / i; ++i)
        if (n % i == 0)
            return false;
    return true;
}

Rational sum_of_unit_fractions(std::span<const std::int64_t> denominators) {
    if (denominators.empty())
        throw std::invalid_argument("sum_of_unit_fractions: empty denominator list");
    Rational sum;
    for (std::int64_t den : denominators)
        sum = sum + Rational::unit(den);
    return sum;
}

Rational two_over(std::int64_t d) {
    if (d < 1)
        throw std::invalid_argument("two_over: d must be >= 1");
    return Rational(2, d);
}

} // namespace recto
