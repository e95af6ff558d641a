#include <doctest.h>

#include <stdexcept>

#include "recto/ground_truth.hpp"

TEST_CASE("ground truth has 24 entries split 5/12/7 by term count") {
    const auto& table = recto::ground_truth();
    CHECK(table.size() == 24);
    int by_terms[5] = {0, 0, 0, 0, 0};
    for (const auto& entry : table.entries())
        ++by_terms[entry.decomposition().term_count()];
    CHECK(by_terms[2] == 5);
    CHECK(by_terms[3] == 12);
    CHECK(by_terms[4] == 7);
}

TEST_CASE("ground truth lookups") {
    const auto& table = recto::ground_truth();
    CHECK(table.denominators(23) == std::vector<std::int64_t>{12, 276});
    CHECK(table.denominators(29) == std::vector<std::int64_t>{24, 58, 174, 232});
    CHECK(table.denominators(97) == std::vector<std::int64_t>{56, 679, 776});
    CHECK(table.find(101) == nullptr);
    CHECK_THROWS_AS(table.denominators(101), std::out_of_range);
}

TEST_CASE("every entry validates, multipliers match tails, parts divide heads") {
    for (const auto& entry : recto::ground_truth().entries()) {
        auto dc = entry.decomposition();
        CHECK(recto::validate(dc));
        REQUIRE(dc.multipliers.size() + 1 == dc.denominators.size());
        for (std::size_t i = 0; i < dc.multipliers.size(); ++i)
            CHECK(dc.denominators[i + 1] == dc.multipliers[i] * entry.d);
        REQUIRE(dc.parts.size() == dc.multipliers.size());
        for (std::size_t i = 0; i < dc.parts.size(); ++i) {
            CHECK(entry.head % dc.parts[i] == 0);
            CHECK(entry.head / dc.parts[i] == dc.multipliers[i]);
        }
    }
}
