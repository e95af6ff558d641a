#pragma once

// Unit-fraction decompositions 2/D = 1/D1 + sum 1/(m_i * D) and their
// validation. D1 is the head: the only denominator that is not a multiple
// of D. Tail denominators carry multipliers m_i = D_i / D; when the
// multipliers divide the head, the decomposition also carries the parts
// d_i = D1 / m_i, which are divisors of the head and satisfy
// D_i = D * D1 / d_i.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace recto {

struct Decomposition {
    std::int64_t d = 0;                      // prime denominator of 2/D
    std::int64_t head = 0;                   // D1
    std::vector<std::int64_t> multipliers;   // m_2..m_h, strictly ascending, each >= 2
    std::vector<std::int64_t> denominators;  // [D1, m_2*D, ..., m_h*D], strictly ascending
    std::vector<std::int64_t> parts;         // d_i = D1/m_i, strictly descending; empty
                                             // when the form is not divisor-derived

    int term_count() const { return static_cast<int>(denominators.size()); }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Builds the divisor-derived form from descending parts d_i | head.
Decomposition decomposition_from_parts(std::int64_t d, std::int64_t head,
                                       std::vector<std::int64_t> parts_descending);

// Best-effort reconstruction from a raw denominator list; multipliers and
// parts are filled in only where the arithmetic allows, so that check() can
// report what is wrong with an inconsistent input.
Decomposition decomposition_from_denominators(std::int64_t d,
                                              std::vector<std::int64_t> denominators);

enum class ViolationKind {
    DNotPrime,
    HeadNotPositive,
    TooFewTerms,
    HeadMismatch,
    DenominatorOrder,
    TailNotMultipleOfD,
    MultiplierMismatch,
    MultiplierFloor,
    MultiplierOrder,
    PartsOrder,
    PartNotDivisorOfHead,
    PartDerivation,
    SumMismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport check(const Decomposition& decomposition);

// True iff every invariant holds, including the exact sum 2/D.
bool validate(const Decomposition& decomposition);

} // namespace recto
