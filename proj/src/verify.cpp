#include "recto/verify.hpp"

#include "recto/ground_truth.hpp"

namespace recto {

VerifyReport run_verify(const TopFlags& flags) {
    VerifyReport report;
    for (const auto& entry : ground_truth().entries()) {
        VerifyEntry v;
        v.d = entry.d;
        v.expected = entry.decomposition().denominators;
        try {
            SelectionOutcome outcome = reconstruct(entry.d, flags);
            v.actual = outcome.chosen.denominators;
            v.rationale = std::move(outcome.rationale);
            v.match = (v.actual == v.expected);
        } catch (const SelectionError& e) {
            v.match = false;
            v.error = e.what();
        }
        if (v.match)
            ++report.matches;
        else
            ++report.mismatches;
        report.entries.push_back(std::move(v));
    }
    return report;
}

} // namespace recto
