#include "recto/ground_truth.hpp"

#include <algorithm>
#include <stdexcept>

namespace recto {

Decomposition GroundTruthEntry::decomposition() const {
    std::vector<std::int64_t> parts;
    parts.reserve(multipliers.size());
    for (std::int64_t m : multipliers)
        parts.push_back(head / m);  // every table multiplier divides its head
    return decomposition_from_parts(d, head, std::move(parts));
}

GroundTruthTable::GroundTruthTable(std::vector<GroundTruthEntry> entries)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const GroundTruthEntry& a, const GroundTruthEntry& b) { return a.d < b.d; });
}

const GroundTruthEntry* GroundTruthTable::find(std::int64_t d) const {
    for (const auto& e : entries_)
        if (e.d == d)
            return &e;
    return nullptr;
}

std::vector<std::int64_t> GroundTruthTable::denominators(std::int64_t d) const {
    const GroundTruthEntry* e = find(d);
    if (e == nullptr)
        throw std::out_of_range("no table entry for d=" + std::to_string(d));
    return e->decomposition().denominators;
}

const GroundTruthTable& ground_truth() {
    static const GroundTruthTable table = [] {
        GroundTruthTable t{{
            // 2-term
            {3, 2, {2}},
            {5, 3, {3}},
            {7, 4, {4}},
            {11, 6, {6}},
            {23, 12, {12}},
            // 3-term
            {13, 8, {4, 8}},
            {17, 12, {3, 4}},
            {19, 12, {4, 6}},
            {31, 20, {4, 5}},
            {37, 24, {3, 8}},
            {41, 24, {6, 8}},
            {47, 30, {3, 10}},
            {53, 30, {6, 15}},
            {59, 36, {4, 9}},
            {67, 40, {5, 8}},
            {71, 40, {8, 10}},
            {97, 56, {7, 8}},
            // 4-term
            {29, 24, {2, 6, 8}},
            {43, 42, {2, 3, 7}},
            {61, 40, {4, 8, 10}},
            {73, 60, {3, 4, 5}},
            {79, 60, {3, 4, 10}},
            {83, 60, {4, 5, 6}},
            {89, 60, {4, 6, 10}},
        }};
        for (const auto& entry : t.entries())
            if (!validate(entry.decomposition()))
                throw std::logic_error("embedded table entry fails validation: d=" +
                                       std::to_string(entry.d));
        return t;
    }();
    return table;
}

} // namespace recto
