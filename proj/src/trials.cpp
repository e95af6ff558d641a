#include "recto/trials.hpp"

#include <stdexcept>

#include "recto/divisors.hpp"
#include "recto/partitions.hpp"

namespace recto {

namespace {

void require_odd_prime(std::int64_t d, const char* who) {
    if (d < 3 || !is_prime(d))
        throw std::invalid_argument(std::string(who) + ": d must be an odd prime, got " +
                                    std::to_string(d));
}

TrialRecord make_trial(std::int64_t d, std::int64_t n, std::int64_t head,
                       std::vector<std::int64_t> parts) {
    TrialRecord rec;
    rec.d = d;
    rec.n = n;
    rec.odd_sum = 2 * n + 1;
    rec.head = head;
    rec.delta = parts[parts.size() - 2] - parts.back();
    rec.decomposition = decomposition_from_parts(d, head, parts);
    rec.parts = std::move(parts);
    rec.r_param = Rational(2 * head - d, head);
    return rec;
}

// A partition joins the trial table when all parts divide the head and the
// largest stays at or below head/2, keeping every tail multiplier >= 2.
bool admissible(const std::vector<std::int64_t>& parts, std::int64_t head) {
    if (2 * parts.front() > head)
        return false;
    for (std::int64_t part : parts)
        if (head % part != 0)
            return false;
    return true;
}

} // namespace

Decomposition two_term(std::int64_t d) {
    require_odd_prime(d, "two_term");
    return decomposition_from_parts(d, (d + 1) / 2, {1});
}

std::int64_t n_max3(std::int64_t d) {
    return (d - 3) / 2;
}

std::int64_t n_max4(std::int64_t d) {
    return (12 * d) / 11 - (d + 1) / 2;
}

std::vector<TrialRecord> trials3(std::int64_t d) {
    require_odd_prime(d, "trials3");
    std::vector<TrialRecord> out;
    const std::int64_t base = (d + 1) / 2;
    for (std::int64_t n = 1; n <= n_max3(d); ++n) {
        const std::int64_t head = base + n;
        for (auto& tuple : doublets(2 * n + 1))
            if (admissible(tuple.parts, head))
                out.push_back(make_trial(d, n, head, std::move(tuple.parts)));
    }
    return out;
}

std::vector<TrialRecord> trials4(std::int64_t d) {
    require_odd_prime(d, "trials4");
    std::vector<TrialRecord> out;
    const std::int64_t base = (d + 1) / 2;
    for (std::int64_t n = 3; n <= n_max4(d); ++n) {
        const std::int64_t head = base + n;
        for (auto& tuple : triplets(2 * n + 1))
            if (admissible(tuple.parts, head))
                out.push_back(make_trial(d, n, head, std::move(tuple.parts)));
    }
    return out;
}

} // namespace recto
