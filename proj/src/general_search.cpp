#include "recto/general_search.hpp"

#include <stdexcept>

#include "recto/divisors.hpp"
#include "recto/rational.hpp"

namespace recto {

namespace {

void require_odd_prime(std::int64_t d, const char* who) {
    if (d < 3 || !is_prime(d))
        throw std::invalid_argument(std::string(who) + ": d must be an odd prime, got " +
                                    std::to_string(d));
}

// Solves 1/head = 2/d - sum 1/(m_i*d); the tuple is a solution iff the
// residual is a positive unit fraction. head < m_2*d always holds (the
// residual is at least 11/(12d) > 1/(2d)), so denominators stay ascending.
void try_multipliers(std::int64_t d, const std::vector<std::int64_t>& multipliers,
                     std::vector<GeneralSolution>& out) {
    Rational residual = two_over(d);
    for (std::int64_t m : multipliers)
        residual = residual - Rational::unit(checked_mul(m, d));
    if (!residual.is_positive() || !residual.is_unit_fraction())
        return;
    GeneralSolution solution;
    solution.d = d;
    solution.head = residual.den();
    solution.multipliers = multipliers;
    solution.denominators.push_back(solution.head);
    for (std::int64_t m : multipliers)
        solution.denominators.push_back(checked_mul(m, d));
    out.push_back(std::move(solution));
}

} // namespace

bool GeneralSolution::divisor_compatible() const {
    for (std::int64_t m : multipliers)
        if (m < 1 || head % m != 0)
            return false;
    return true;
}

std::vector<GeneralSolution> general_search(std::int64_t d, int h, std::int64_t flag) {
    require_odd_prime(d, "general_search");
    if (h < 2 || h > 4)
        throw std::invalid_argument("general_search: term count must be 2, 3 or 4");
    if (flag < 2)
        throw std::invalid_argument("general_search: flag must be >= 2");

    std::vector<GeneralSolution> out;
    for (std::int64_t m2 = 2; m2 <= flag; ++m2) {
        if (h == 2) {
            try_multipliers(d, {m2}, out);
            continue;
        }
        for (std::int64_t m3 = m2 + 1; m3 <= flag; ++m3) {
            if (h == 3) {
                try_multipliers(d, {m2, m3}, out);
                continue;
            }
            for (std::int64_t m4 = m3 + 1; m4 <= flag; ++m4)
                try_multipliers(d, {m2, m3, m4}, out);
        }
    }
    return out;
}

std::vector<std::vector<std::int64_t>> unrestricted_search(std::int64_t d, int h,
                                                           std::int64_t max_denominator) {
    require_odd_prime(d, "unrestricted_search");
    if (h != 2 && h != 3)
        throw std::invalid_argument("unrestricted_search: oracle supports 2 or 3 terms");
    if (max_denominator < d)
        throw std::invalid_argument("unrestricted_search: max_denominator must be >= d");

    const Rational target = two_over(d);
    std::vector<std::vector<std::int64_t>> out;

    if (h == 2) {
        // 1/a < 2/d forces a > d/2, and a < b forces a < d.
        for (std::int64_t a = d / 2 + 1; a < d && a <= max_denominator; ++a) {
            Rational rest = target - Rational::unit(a);
            if (rest.is_positive() && rest.is_unit_fraction() && rest.den() > a &&
                rest.den() <= max_denominator)
                out.push_back({a, rest.den()});
        }
        return out;
    }

    // d/2 < a < 3d/2 from 1/a < 2/d < 3/a.
    for (std::int64_t a = d / 2 + 1; 2 * a < 3 * d && a <= max_denominator; ++a) {
        const Rational r1 = target - Rational::unit(a);
        if (!r1.is_positive())
            continue;
        // 1/b must be strictly between r1/2 and r1.
        std::int64_t b = std::max(a + 1, r1.den() / r1.num() + 1);
        for (; b <= max_denominator; ++b) {
            const Rational u = Rational::unit(b);
            if (u >= r1)
                continue;
            if (r1 - u >= u)
                break;  // remaining term could no longer exceed b
            Rational rest = r1 - u;
            if (rest.is_unit_fraction() && rest.den() > b && rest.den() <= max_denominator)
                out.push_back({a, b, rest.den()});
        }
    }
    return out;
}

} // namespace recto
