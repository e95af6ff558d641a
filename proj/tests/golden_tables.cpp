#include "golden_tables.hpp"

namespace golden {

using recto::Rule;

const std::vector<Trial3Row>& table3() {
    static const std::vector<Trial3Row> rows = {
        // delta 1
        {13, 1, 2, 1, 1, 8},
        {17, 1, 2, 1, 1, 10},
        {17, 3, 4, 3, 1, 12},
        {19, 2, 3, 2, 1, 12},
        {29, 1, 2, 1, 1, 16},
        {31, 2, 3, 2, 1, 18},
        {31, 4, 5, 4, 1, 20},
        {37, 1, 2, 1, 1, 20},
        {41, 1, 2, 1, 1, 22},
        {41, 3, 4, 3, 1, 24},
        {43, 2, 3, 2, 1, 24},
        {53, 1, 2, 1, 1, 28},
        {61, 1, 2, 1, 1, 32},
        {67, 2, 3, 2, 1, 36},
        {71, 4, 5, 4, 1, 40},
        {71, 6, 7, 6, 1, 42},
        {73, 1, 2, 1, 1, 38},
        {79, 2, 3, 2, 1, 42},
        {89, 1, 2, 1, 1, 46},
        {89, 3, 4, 3, 1, 48},
        {97, 1, 2, 1, 1, 50},
        {97, 7, 8, 7, 1, 56},
        // delta 3
        {13, 3, 5, 2, 3, 10},
        {19, 2, 4, 1, 3, 12},
        {43, 2, 4, 1, 3, 24},
        {53, 3, 5, 2, 3, 30},
        {59, 2, 4, 1, 3, 32},
        {67, 2, 4, 1, 3, 36},
        {67, 6, 8, 5, 3, 40},
        {73, 3, 5, 2, 3, 40},
        {83, 2, 4, 1, 3, 44},
        // delta 5
        {17, 3, 6, 1, 5, 12},
        {19, 4, 7, 2, 5, 14},
        {29, 3, 6, 1, 5, 18},
        {37, 5, 8, 3, 5, 24},
        {41, 3, 6, 1, 5, 24},
        {47, 4, 7, 2, 5, 28},
        {53, 3, 6, 1, 5, 30},
        {59, 6, 9, 4, 5, 36},
        {89, 3, 6, 1, 5, 48},
        // delta 7
        {23, 4, 8, 1, 7, 16},
        {47, 6, 10, 3, 7, 30},
        {61, 5, 9, 2, 7, 36},
        {71, 4, 8, 1, 7, 40},
        {73, 7, 11, 4, 7, 44},
        {97, 5, 9, 2, 7, 54},
        // delta 9
        {29, 5, 10, 1, 9, 20},
        {31, 6, 11, 2, 9, 22},
        {89, 5, 10, 1, 9, 50},
        // delta 11
        {37, 7, 13, 2, 11, 26},
        {59, 6, 12, 1, 11, 36},
        {67, 8, 14, 3, 11, 42},
        {83, 6, 12, 1, 11, 48},
        {89, 7, 13, 2, 11, 52},
        // delta 13
        {41, 7, 14, 1, 13, 28},
        {43, 8, 15, 2, 13, 30},
        {97, 7, 14, 1, 13, 56},
        // delta 15
        {47, 8, 16, 1, 15, 32},
        {79, 8, 16, 1, 15, 48},
        // delta 17
        {53, 9, 18, 1, 17, 36},
        {89, 9, 18, 1, 17, 54},
        {97, 11, 20, 3, 17, 60},
        // delta 19
        {59, 10, 20, 1, 19, 40},
        {61, 11, 21, 2, 19, 42},
        // delta 21
        {67, 12, 23, 2, 21, 46},
        // delta 23
        {71, 12, 24, 1, 23, 48},
        {73, 13, 25, 2, 23, 50},
        // delta 25
        {79, 14, 27, 2, 25, 54},
        // delta 27
        {83, 14, 28, 1, 27, 56},
        // delta 29
        {89, 15, 30, 1, 29, 60},
        // delta 31
        {97, 17, 33, 2, 31, 66},
    };
    return rows;
}

const std::vector<Trial4Row>& table10() {
    static const std::vector<Trial4Row> rows = {
        // delta' 1
        {29, 9, 12, 4, 3, 1, 24},
        {61, 5, 6, 3, 2, 1, 36},
        {61, 9, 10, 5, 4, 1, 40},
        {73, 3, 4, 2, 1, 1, 40},
        {73, 5, 6, 3, 2, 1, 42},
        {73, 11, 16, 4, 3, 1, 48},
        {79, 8, 12, 3, 2, 1, 48},
        {79, 20, 30, 6, 5, 1, 60},
        {83, 6, 8, 3, 2, 1, 48},
        {83, 6, 6, 4, 3, 1, 48},
        {83, 14, 14, 8, 7, 1, 56},
        {83, 18, 30, 4, 3, 1, 60},
        {89, 3, 4, 2, 1, 1, 48},
        {89, 15, 20, 6, 5, 1, 60},
        // delta' 2
        {23, 6, 9, 3, 1, 2, 18},
        {29, 5, 5, 4, 2, 2, 20},
        {43, 6, 7, 4, 2, 2, 28},
        {61, 8, 13, 3, 1, 2, 39},
        {73, 5, 7, 3, 1, 2, 42},
        {73, 8, 9, 5, 3, 2, 45},
        {83, 18, 15, 12, 10, 2, 60},
        {89, 18, 21, 9, 7, 2, 63},
        // delta' 3
        {23, 8, 10, 5, 2, 3, 20},
        {43, 8, 10, 5, 2, 3, 30},
        {43, 10, 16, 4, 1, 3, 32},
        {61, 5, 6, 4, 1, 3, 36},
        {61, 11, 14, 6, 3, 3, 42},
        {61, 13, 22, 4, 1, 3, 44},
        {73, 15, 26, 4, 1, 3, 52},
        {73, 19, 28, 7, 4, 3, 56},
        {73, 23, 20, 15, 12, 3, 60},
        {79, 8, 12, 4, 1, 3, 48},
        {79, 8, 8, 6, 3, 3, 48},
        {79, 16, 28, 4, 1, 3, 56},
        {83, 6, 8, 4, 1, 3, 48},
        {83, 8, 10, 5, 2, 3, 50},
        {83, 18, 30, 5, 2, 3, 60},
        // delta' 4
        {29, 15, 15, 10, 6, 4, 30},
        {61, 14, 15, 9, 5, 4, 45},
        {73, 17, 27, 6, 2, 4, 54},
        {89, 15, 15, 10, 6, 4, 60},
        // delta' 5
        {29, 9, 12, 6, 1, 5, 24},
        {43, 8, 10, 6, 1, 5, 30},
        {61, 11, 14, 7, 2, 5, 42},
        {61, 17, 24, 8, 3, 5, 48},
        {73, 11, 16, 6, 1, 5, 48},
        {73, 11, 12, 8, 3, 5, 48},
        {83, 12, 18, 6, 1, 5, 54},
        {83, 18, 30, 6, 1, 5, 60},
        {89, 11, 14, 7, 2, 5, 56},
        // delta' 7
        {43, 14, 18, 9, 2, 7, 36},
        {61, 9, 10, 8, 1, 7, 40},
        {73, 23, 30, 12, 5, 7, 60},
        {79, 14, 18, 9, 2, 7, 54},
        {83, 18, 20, 12, 5, 7, 60},
        {89, 11, 14, 8, 1, 7, 56},
        // delta' 8
        {43, 20, 21, 14, 6, 8, 42},
        {89, 15, 15, 12, 4, 8, 60},
        // delta' 9
        {61, 21, 26, 13, 4, 9, 52},
        {79, 20, 30, 10, 1, 9, 60},
        {79, 20, 20, 15, 6, 9, 60},
        {89, 15, 20, 10, 1, 9, 60},
        // delta' 12
        {89, 25, 35, 14, 2, 12, 70},
        // delta' 13
        {73, 23, 30, 15, 2, 13, 60},
        {83, 18, 20, 15, 2, 13, 60},
        // delta' 15
        {79, 24, 32, 16, 1, 15, 64},
        {83, 26, 34, 17, 2, 15, 68},
        // delta' 16
        {61, 23, 27, 18, 2, 16, 54},
        // delta' 17
        {89, 27, 36, 18, 1, 17, 72},
        // delta' 23
        {83, 30, 36, 24, 1, 23, 72},
        // delta' 24
        {89, 33, 39, 26, 2, 24, 78},
    };
    return rows;
}

const std::vector<Key3>& table4_keys() {
    static const std::vector<Key3> keys = {
        {13, 1, 2, 1},
        {17, 1, 2, 1},
        {17, 3, 4, 3},
        {19, 2, 3, 2},
        {31, 2, 3, 2},
        {31, 4, 5, 4},
        {41, 3, 4, 3},
        {71, 4, 5, 4},
        {71, 6, 7, 6},
        {97, 7, 8, 7},
        {13, 3, 5, 2},
        {67, 6, 8, 5},
        {19, 4, 7, 2},
        {37, 5, 8, 3},
        {59, 6, 9, 4},
        {47, 6, 10, 3},
    };
    return keys;
}

const std::vector<Key4>& table11_keys() {
    static const std::vector<Key4> keys = {
        {29, 9, 12, 4, 3},
        {61, 9, 10, 5, 4},
        {83, 14, 14, 8, 7},
        {29, 5, 5, 4, 2},
        {83, 18, 15, 12, 10},
        {89, 18, 21, 9, 7},
        {23, 8, 10, 5, 2},
        {73, 23, 20, 15, 12},
        {29, 15, 15, 10, 6},
        {61, 14, 15, 9, 5},
        {89, 15, 15, 10, 6},
        {43, 20, 21, 14, 6},
        {79, 20, 20, 15, 6},
    };
    return keys;
}

const std::vector<TraceExpectation>& eg_traces() {
    static const std::vector<TraceExpectation> traces = {
        // 3-term entries
        {13, {Rule::SmallestDelta}, Rule::SmallestDelta},
        {17,
         {Rule::SmallestDelta, Rule::FilterTwoNLe10, Rule::ConsecutiveMultipliers},
         Rule::ConsecutiveMultipliers},
        {19, {Rule::SmallestDelta}, Rule::SmallestDelta},
        {31,
         {Rule::SmallestDelta, Rule::FilterTwoNLe10, Rule::ConsecutiveMultipliers},
         Rule::ConsecutiveMultipliers},
        {37, {Rule::SingleCandidate}, Rule::SingleCandidate},
        {41, {Rule::SingleCandidate}, Rule::SingleCandidate},
        {47, {Rule::SingleCandidate}, Rule::SingleCandidate},
        {53, {Rule::TransitionTooNear, Rule::FlagRelaxed15}, Rule::TransitionTooNear},
        {59, {Rule::SingleCandidate}, Rule::SingleCandidate},
        {67, {Rule::SingleCandidate}, Rule::SingleCandidate},
        {71, {Rule::SmallestDelta, Rule::FilterTwoNLe10}, Rule::FilterTwoNLe10},
        {97, {Rule::SingleCandidate}, Rule::SingleCandidate},
        // 4-term entries
        {29, {Rule::SmallestDelta, Rule::TransitionAcceptable}, Rule::SmallestDelta},
        {43, {Rule::GapTooHigh, Rule::SingleCandidate}, Rule::SingleCandidate},
        {61, {Rule::SmallestDelta}, Rule::SmallestDelta},
        {73, {Rule::SingleCandidate, Rule::TransitionImprovement}, Rule::SingleCandidate},
        {79, {Rule::SingleCandidate}, Rule::SingleCandidate},
        {83, {Rule::ConsecutiveMultipliers}, Rule::ConsecutiveMultipliers},
        {89, {Rule::OddHeadDiscarded, Rule::SingleCandidate}, Rule::OddHeadDiscarded},
    };
    return traces;
}

const std::vector<ReferenceDens>& reference_denominators() {
    static const std::vector<ReferenceDens> rows = {
        // selected 3-term rows
        {13, 1, {2, 1}, {8, 52, 104}},
        {17, 3, {4, 3}, {12, 51, 68}},
        {19, 2, {3, 2}, {12, 76, 114}},
        {31, 4, {5, 4}, {20, 124, 155}},
        {37, 5, {8, 3}, {24, 111, 296}},
        {41, 3, {4, 3}, {24, 246, 328}},
        {47, 6, {10, 3}, {30, 141, 470}},
        {53, 3, {5, 2}, {30, 318, 795}},
        {59, 6, {9, 4}, {36, 236, 531}},
        {67, 6, {8, 5}, {40, 335, 536}},
        {71, 4, {5, 4}, {40, 568, 710}},
        {97, 7, {8, 7}, {56, 679, 776}},
        // selected 4-term rows
        {29, 9, {12, 4, 3}, {24, 58, 174, 232}},
        {43, 20, {21, 14, 6}, {42, 86, 129, 301}},
        {61, 9, {10, 5, 4}, {40, 244, 488, 610}},
        {73, 23, {20, 15, 12}, {60, 219, 292, 365}},
        {79, 20, {20, 15, 6}, {60, 237, 316, 790}},
        {83, 18, {15, 12, 10}, {60, 332, 415, 498}},
        {89, 15, {15, 10, 6}, {60, 356, 534, 890}},
        // the two 2/73 rows whose tails follow from D_i = D*D1/d_i
        {73, 1, {2, 1}, {38, 1387, 2774}},
        {73, 3, {5, 2}, {40, 584, 1460}},
        // rows the transition analysis relies on
        {23, 4, {8, 1}, {16, 46, 368}},
        {23, 8, {10, 5, 2}, {20, 46, 92, 230}},
        {29, 1, {2, 1}, {16, 232, 464}},
        {53, 9, {9, 6, 4}, {36, 212, 318, 477}},
        {89, 3, {4, 3}, {48, 1068, 1424}},
    };
    return rows;
}

} // namespace golden
