#include "recto/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "recto/divisors.hpp"
#include "recto/rational.hpp"

namespace recto {

Decomposition decomposition_from_parts(std::int64_t d, std::int64_t head,
                                       std::vector<std::int64_t> parts_descending) {
    if (head < 1)
        throw std::invalid_argument("decomposition head must be positive");
    if (parts_descending.empty())
        throw std::invalid_argument("decomposition needs at least one part");
    Decomposition out;
    out.d = d;
    out.head = head;
    out.parts = std::move(parts_descending);
    out.denominators.push_back(head);
    for (std::int64_t part : out.parts) {
        if (part < 1 || head % part != 0)
            throw std::invalid_argument("parts must divide the head");
        std::int64_t multiplier = head / part;
        out.multipliers.push_back(multiplier);
        out.denominators.push_back(checked_mul(multiplier, d));
    }
    return out;
}

Decomposition decomposition_from_denominators(std::int64_t d,
                                              std::vector<std::int64_t> denominators) {
    if (denominators.empty())
        throw std::invalid_argument("decomposition needs at least one denominator");
    Decomposition out;
    out.d = d;
    out.head = denominators.front();
    out.denominators = std::move(denominators);

    bool tails_are_multiples = d >= 1;
    for (std::size_t i = 1; i < out.denominators.size(); ++i)
        if (out.denominators[i] < 1 || out.denominators[i] % d != 0)
            tails_are_multiples = false;
    if (!tails_are_multiples)
        return out;  // leave multipliers/parts empty; check() reports the issues

    for (std::size_t i = 1; i < out.denominators.size(); ++i)
        out.multipliers.push_back(out.denominators[i] / d);

    bool divisor_derived = out.head >= 1;
    for (std::int64_t m : out.multipliers)
        if (m < 1 || out.head % m != 0)
            divisor_derived = false;
    if (divisor_derived)
        for (std::int64_t m : out.multipliers)
            out.parts.push_back(out.head / m);
    return out;
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::DNotPrime: return "d-not-prime";
    case ViolationKind::HeadNotPositive: return "head-not-positive";
    case ViolationKind::TooFewTerms: return "too-few-terms";
    case ViolationKind::HeadMismatch: return "head-mismatch";
    case ViolationKind::DenominatorOrder: return "denominator-order";
    case ViolationKind::TailNotMultipleOfD: return "tail-not-multiple-of-d";
    case ViolationKind::MultiplierMismatch: return "multiplier-mismatch";
    case ViolationKind::MultiplierFloor: return "multiplier-floor";
    case ViolationKind::MultiplierOrder: return "multiplier-order";
    case ViolationKind::PartsOrder: return "parts-order";
    case ViolationKind::PartNotDivisorOfHead: return "part-not-divisor-of-head";
    case ViolationKind::PartDerivation: return "part-derivation";
    case ViolationKind::SumMismatch: return "sum-mismatch";
    }
    return "unknown";
}

ValidationReport check(const Decomposition& dc) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
    };

    if (dc.d < 3 || !is_prime(dc.d))
        add(ViolationKind::DNotPrime, "d=" + std::to_string(dc.d));
    if (dc.head < 1)
        add(ViolationKind::HeadNotPositive, "head=" + std::to_string(dc.head));
    if (dc.denominators.size() < 2)
        add(ViolationKind::TooFewTerms,
            std::to_string(dc.denominators.size()) + " denominator(s)");
    if (!dc.denominators.empty() && dc.denominators.front() != dc.head)
        add(ViolationKind::HeadMismatch, "first denominator is not the head");

    bool positive_and_sorted = !dc.denominators.empty();
    for (std::size_t i = 0; i < dc.denominators.size(); ++i) {
        if (dc.denominators[i] < 1)
            positive_and_sorted = false;
        if (i > 0 && dc.denominators[i] <= dc.denominators[i - 1])
            positive_and_sorted = false;
    }
    if (!positive_and_sorted && !dc.denominators.empty())
        add(ViolationKind::DenominatorOrder, "denominators not strictly increasing");

    for (std::size_t i = 1; i < dc.denominators.size(); ++i)
        if (dc.d < 1 || dc.denominators[i] % dc.d != 0)
            add(ViolationKind::TailNotMultipleOfD,
                std::to_string(dc.denominators[i]) + " is not a multiple of d");

    if (dc.multipliers.size() + 1 != dc.denominators.size()) {
        add(ViolationKind::MultiplierMismatch, "multiplier count does not match tail count");
    } else {
        for (std::size_t i = 0; i < dc.multipliers.size(); ++i) {
            std::int64_t m = dc.multipliers[i];
            if (m < 2)
                add(ViolationKind::MultiplierFloor, "multiplier " + std::to_string(m));
            if (i > 0 && m <= dc.multipliers[i - 1])
                add(ViolationKind::MultiplierOrder, "multipliers not strictly increasing");
            if (dc.d >= 1 && dc.denominators[i + 1] != m * dc.d)
                add(ViolationKind::MultiplierMismatch,
                    "denominator " + std::to_string(dc.denominators[i + 1]) +
                        " != " + std::to_string(m) + "*d");
        }
    }

    if (!dc.parts.empty()) {
        if (dc.parts.size() != dc.multipliers.size())
            add(ViolationKind::PartDerivation, "part count does not match multiplier count");
        for (std::size_t i = 0; i < dc.parts.size(); ++i) {
            std::int64_t part = dc.parts[i];
            if (i > 0 && part >= dc.parts[i - 1])
                add(ViolationKind::PartsOrder, "parts not strictly decreasing");
            if (part < 1 || dc.head < 1 || dc.head % part != 0) {
                add(ViolationKind::PartNotDivisorOfHead, std::to_string(part));
                continue;
            }
            if (i < dc.multipliers.size() && dc.head / part != dc.multipliers[i])
                add(ViolationKind::PartDerivation,
                    "part " + std::to_string(part) + " does not derive multiplier");
        }
    }

    if (positive_and_sorted && dc.d >= 1) {
        if (sum_of_unit_fractions(dc.denominators) != two_over(dc.d))
            add(ViolationKind::SumMismatch, "unit fractions do not sum to 2/d");
    } else if (!dc.denominators.empty()) {
        add(ViolationKind::SumMismatch, "sum not checkable");
    }

    return report;
}

bool validate(const Decomposition& decomposition) {
    return check(decomposition).ok();
}

} // namespace recto
