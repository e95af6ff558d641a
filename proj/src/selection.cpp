#include "recto/selection.hpp"

#include <algorithm>

#include "recto/divisors.hpp"

namespace recto {

namespace {

struct CascadeResult {
    std::vector<Rule> tags;
    TrialRecord chosen;
};

SelectionOutcome make_outcome(std::int64_t d, Decomposition chosen, std::int64_t topflag_used,
                              std::vector<Rule> rationale) {
    SelectionOutcome out;
    out.d = d;
    out.term_count = chosen.term_count();
    out.chosen = std::move(chosen);
    out.topflag_used = topflag_used;
    out.rationale = std::move(rationale);
    return out;
}

std::int64_t min_delta(const std::vector<TrialRecord>& records) {
    std::int64_t best = records.front().delta;
    for (const auto& r : records)
        best = std::min(best, r.delta);
    return best;
}

// Restricts to records satisfying pred; an empty result leaves the set
// untouched and reports the stage as skipped.
template <typename Pred>
bool restrict_to(std::vector<TrialRecord>& records, Pred pred) {
    std::vector<TrialRecord> kept;
    for (const auto& r : records)
        if (pred(r))
            kept.push_back(r);
    if (kept.empty())
        return false;
    records = std::move(kept);
    return true;
}

bool consecutive_pair(const TrialRecord& r) {
    const auto& m = r.decomposition.multipliers;
    return m.size() == 2 && m[1] == m[0] + 1;
}

bool full_consecutive_run(const Decomposition& dc) {
    const auto& m = dc.multipliers;
    return m.size() == 3 && m[1] == m[0] + 1 && m[2] == m[1] + 1;
}

CascadeResult cascade3(std::int64_t d, std::vector<TrialRecord> candidates) {
    if (candidates.size() == 1)
        return {{Rule::SingleCandidate}, candidates.front()};
    std::vector<Rule> tags;

    const std::int64_t best = min_delta(candidates);
    restrict_to(candidates, [&](const TrialRecord& r) { return r.delta == best; });
    tags.push_back(Rule::SmallestDelta);
    if (candidates.size() == 1)
        return {tags, candidates.front()};

    if (restrict_to(candidates, [](const TrialRecord& r) { return 2 * r.n <= kTwoNLimit; })) {
        tags.push_back(Rule::FilterTwoNLe10);
        if (candidates.size() == 1)
            return {tags, candidates.front()};
    }

    if (restrict_to(candidates, consecutive_pair)) {
        tags.push_back(Rule::ConsecutiveMultipliers);
        if (candidates.size() == 1)
            return {tags, candidates.front()};
    }

    throw AmbiguityError(d, "3-term cascade cannot decide for d=" + std::to_string(d));
}

CascadeResult cascade4(std::int64_t d, std::vector<TrialRecord> candidates) {
    if (candidates.size() == 1)
        return {{Rule::SingleCandidate}, candidates.front()};
    std::vector<Rule> tags;

    if (restrict_to(candidates,
                    [](const TrialRecord& r) { return full_consecutive_run(r.decomposition); })) {
        tags.push_back(Rule::ConsecutiveMultipliers);
        if (candidates.size() == 1)
            return {tags, candidates.front()};
    }

    const std::int64_t best = min_delta(candidates);
    restrict_to(candidates, [&](const TrialRecord& r) { return r.delta == best; });
    tags.push_back(Rule::SmallestDelta);
    if (candidates.size() == 1)
        return {tags, candidates.front()};

    throw AmbiguityError(d, "4-term cascade cannot decide for d=" + std::to_string(d));
}

std::vector<TrialRecord> to_vector(std::span<const TrialRecord> records) {
    return {records.begin(), records.end()};
}

} // namespace

void validate_flags(const TopFlags& flags) {
    if (flags.tf3 < 2 || flags.tf4 < 2 || flags.tf3_relaxed < 2 || flags.borderline_m3_max < 2)
        throw std::invalid_argument("all selection flags must be >= 2");
    if (flags.tf3 > flags.tf3_relaxed)
        throw std::invalid_argument("tf3 must not exceed tf3_relaxed");
}

std::string_view to_string(Rule rule) {
    switch (rule) {
    case Rule::MotherTable: return "MotherTable";
    case Rule::TwoTermUnique: return "TwoTermUnique";
    case Rule::SingleCandidate: return "SingleCandidate";
    case Rule::SmallestDelta: return "SmallestDelta";
    case Rule::FilterTwoNLe10: return "FilterTwoNLe10";
    case Rule::ConsecutiveMultipliers: return "ConsecutiveMultipliers";
    case Rule::OddHeadDiscarded: return "OddHeadDiscarded";
    case Rule::GapTooHigh: return "GapTooHigh";
    case Rule::TransitionNoInterest: return "TransitionNoInterest";
    case Rule::TransitionTooNear: return "TransitionTooNear";
    case Rule::TransitionAcceptable: return "TransitionAcceptable";
    case Rule::TransitionImprovement: return "TransitionImprovement";
    case Rule::FlagRelaxed15: return "FlagRelaxed15";
    case Rule::Fallback2Terms: return "Fallback2Terms";
    }
    return "unknown";
}

std::string_view to_string(Appreciation appreciation) {
    switch (appreciation) {
    case Appreciation::NoInterest: return "no-interest";
    case Appreciation::TooNear: return "too-near";
    case Appreciation::Acceptable: return "acceptable";
    case Appreciation::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

std::vector<TrialRecord> apply_topflag(std::vector<TrialRecord> trials, std::int64_t flag) {
    if (flag < 2)
        throw std::invalid_argument("topflag must be >= 2");
    std::vector<TrialRecord> kept;
    for (auto& r : trials)
        if (r.last_multiplier() <= flag)
            kept.push_back(std::move(r));
    return kept;
}

SelectionOutcome select3_over(std::int64_t d, std::span<const TrialRecord> candidates,
                              const TopFlags& flags) {
    validate_flags(flags);
    if (candidates.empty())
        throw std::invalid_argument("select3_over: empty candidate list");
    auto result = cascade3(d, to_vector(candidates));
    return make_outcome(d, result.chosen.decomposition, flags.tf3, std::move(result.tags));
}

std::optional<SelectionOutcome> select3(std::int64_t d, const TopFlags& flags) {
    validate_flags(flags);
    if (d < 13 || d > 97 || !is_prime(d))
        throw std::invalid_argument("select3: d must be a prime in [13, 97]");
    auto survivors = apply_topflag(trials3(d), flags.tf3);
    if (survivors.empty())
        return std::nullopt;
    return select3_over(d, survivors, flags);
}

SelectionOutcome select4_over(std::int64_t d, std::span<const TrialRecord> candidates,
                              const TopFlags& flags) {
    validate_flags(flags);
    if (candidates.empty())
        throw std::invalid_argument("select4_over: empty candidate list");
    auto result = cascade4(d, to_vector(candidates));
    // The no-odd-head precept has the lowest priority: it fires only when
    // the winner itself has an odd head and an even-headed rival exists.
    if (result.chosen.head % 2 != 0) {
        std::vector<TrialRecord> evens;
        for (const auto& r : candidates)
            if (r.head % 2 == 0)
                evens.push_back(r);
        if (!evens.empty()) {
            auto redo = cascade4(d, std::move(evens));
            redo.tags.insert(redo.tags.begin(), Rule::OddHeadDiscarded);
            result = std::move(redo);
        }
    }
    return make_outcome(d, result.chosen.decomposition, flags.tf4, std::move(result.tags));
}

std::optional<SelectionOutcome> select4(std::int64_t d, const TopFlags& flags) {
    validate_flags(flags);
    auto survivors = apply_topflag(trials4(d), flags.tf4);
    if (survivors.empty())
        return std::nullopt;
    return select4_over(d, survivors, flags);
}

std::optional<BorderlineCandidate> borderline_candidate(std::int64_t d, const TopFlags& flags) {
    validate_flags(flags);
    std::vector<TrialRecord> rows;
    bool gap_discarded = false;
    for (auto& r : trials3(d)) {
        if (r.last_multiplier() > flags.borderline_m3_max)
            continue;
        if (r.delta >= kGapTooHighDelta) {
            gap_discarded = true;
            continue;
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty())
        return std::nullopt;
    const TrialRecord* best = &rows.front();
    for (const auto& r : rows)
        if (r.delta < best->delta)
            best = &r;  // ties keep enumeration order (smallest n)
    return BorderlineCandidate{*best, gap_discarded};
}

bool is_borderline(std::int64_t d, const TopFlags& flags) {
    validate_flags(flags);
    if (d < 13 || d > 97 || !is_prime(d))
        return false;
    if (!apply_topflag(trials3(d), flags.tf3).empty())
        return false;
    return borderline_candidate(d, flags).has_value();
}

SelectionOutcome two_term_outcome(std::int64_t d) {
    return make_outcome(d, two_term(d), 0, {Rule::TwoTermUnique});
}

TransitionDecision transition_decide(std::int64_t d, const TopFlags& flags) {
    validate_flags(flags);
    if (!is_borderline(d, flags))
        throw std::invalid_argument("transition_decide: d=" + std::to_string(d) +
                                    " is not a borderline prime under these flags");
    const BorderlineCandidate candidate = *borderline_candidate(d, flags);
    std::vector<Rule> prologue;
    if (candidate.gap_discarded)
        prologue.push_back(Rule::GapTooHigh);

    auto four = select4(d, flags);
    if (!four)
        throw SelectionError(d, "no 4-term survivor for borderline prime d=" + std::to_string(d));

    TransitionDecision decision;
    decision.analysis.d = d;
    const auto& dens3 = candidate.record.decomposition.denominators;
    const auto& dens4 = four->chosen.denominators;
    for (std::size_t i = 0; i < dens3.size() && !decision.analysis.shared_denominator; ++i)
        for (std::size_t j = 0; j < dens4.size(); ++j)
            if (dens3[i] == dens4[j]) {
                decision.analysis.shared_denominator = dens3[i];
                decision.analysis.rank3 = static_cast<int>(i) + 1;
                decision.analysis.rank4 = static_cast<int>(j) + 1;
                break;
            }
    if (decision.analysis.shared_denominator) {
        const int diff = decision.analysis.rank4 - decision.analysis.rank3;
        decision.analysis.appreciation = diff == 0   ? Appreciation::NoInterest
                                         : diff == 1 ? Appreciation::TooNear
                                                     : Appreciation::Acceptable;
    }

    auto adopt_four = [&](std::optional<Rule> extra) {
        SelectionOutcome out = *four;
        out.rationale.insert(out.rationale.begin(), prologue.begin(), prologue.end());
        if (extra)
            out.rationale.push_back(*extra);
        decision.outcome = std::move(out);
    };

    if (full_consecutive_run(four->chosen)) {
        adopt_four(Rule::TransitionImprovement);
        return decision;
    }
    if (!decision.analysis.shared_denominator) {
        adopt_four(std::nullopt);
        return decision;
    }
    switch (decision.analysis.appreciation) {
    case Appreciation::NoInterest: {
        std::vector<Rule> tags = prologue;
        tags.push_back(Rule::TransitionNoInterest);
        tags.push_back(Rule::Fallback2Terms);
        decision.outcome = make_outcome(d, two_term(d), 0, std::move(tags));
        break;
    }
    case Appreciation::TooNear: {
        if (candidate.record.last_multiplier() > flags.tf3_relaxed)
            throw SelectionError(d, "3-term candidate for d=" + std::to_string(d) +
                                        " exceeds the relaxed flag; no admissible outcome");
        std::vector<Rule> tags = prologue;
        tags.push_back(Rule::TransitionTooNear);
        tags.push_back(Rule::FlagRelaxed15);
        decision.outcome = make_outcome(d, candidate.record.decomposition, flags.tf3_relaxed,
                                        std::move(tags));
        break;
    }
    case Appreciation::Acceptable:
        adopt_four(Rule::TransitionAcceptable);
        break;
    case Appreciation::NotApplicable:
        break;  // unreachable: handled above
    }
    return decision;
}

SelectionOutcome reconstruct(std::int64_t d, const TopFlags& flags) {
    validate_flags(flags);
    if (d < 3 || d > 97 || !is_prime(d))
        throw std::invalid_argument("reconstruct: d must be a prime in [3, 97]");
    if (d <= 11)
        return make_outcome(d, two_term(d), 0, {Rule::MotherTable});
    if (is_borderline(d, flags))
        return transition_decide(d, flags).outcome;
    if (auto three = select3(d, flags))
        return *three;
    if (auto four = select4(d, flags))
        return *four;
    throw SelectionError(d, "no admissible decomposition for d=" + std::to_string(d) +
                                " under the given flags");
}

std::map<std::int64_t, SelectionOutcome> reconstruct_table(const TopFlags& flags) {
    std::map<std::int64_t, SelectionOutcome> out;
    for (std::int64_t d = 3; d <= 97; ++d)
        if (is_prime(d))
            out.emplace(d, reconstruct(d, flags));
    return out;
}

} // namespace recto
