#pragma once

// The decision layer: multiplier cutoffs, delta classification and the
// scribal decision cascades that pick one decomposition per prime.
//
// Cascade order is forced by the data, not by taste. In the 3-term cascade
// the 2n <= 10 filter must run before the consecutive-multiplier filter
// (2/71 would otherwise flip to the n=6 row), and in the 4-term cascade the
// consecutive-run filter must run before delta minimisation (2/83 keeps the
// 4,5,6 run over the smaller-delta 4,7,8 row). The odd-head rule has the
// lowest priority of all: it only fires when the provisional winner itself
// has an odd head and an even-headed alternative exists (2/89 discards
// D1 = 63; 2/61's odd head already loses on delta and is never tagged).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "recto/decomposition.hpp"
#include "recto/trials.hpp"

namespace recto {

struct TopFlags {
    std::int64_t tf3 = 10;                // cap on m_3: D_3 <= tf3 * D
    std::int64_t tf4 = 10;                // cap on m_4: D_4 <= tf4 * D
    std::int64_t tf3_relaxed = 15;        // fallback cap kept for 2/53
    std::int64_t borderline_m3_max = 16;  // 3-term rows reviewed when tf3 < m_3 <= this
};

// Throws std::invalid_argument unless all flags >= 2 and tf3 <= tf3_relaxed.
void validate_flags(const TopFlags& flags);

inline constexpr std::int64_t kTwoNLimit = 10;        // the "2n <= 10" tie filter
inline constexpr std::int64_t kGapTooHighDelta = 13;  // borderline row dropped at this gap

enum class Rule {
    MotherTable,
    TwoTermUnique,
    SingleCandidate,
    SmallestDelta,
    FilterTwoNLe10,
    ConsecutiveMultipliers,
    OddHeadDiscarded,
    GapTooHigh,
    TransitionNoInterest,
    TransitionTooNear,
    TransitionAcceptable,
    TransitionImprovement,
    FlagRelaxed15,
    Fallback2Terms,
};

std::string_view to_string(Rule rule);

enum class Appreciation { NoInterest, TooNear, Acceptable, NotApplicable };

std::string_view to_string(Appreciation appreciation);

struct SelectionOutcome {
    std::int64_t d = 0;
    Decomposition chosen;
    int term_count = 0;
    std::int64_t topflag_used = 0;  // 0 for 2-term outcomes
    std::vector<Rule> rationale;    // rules in application order, never empty
};

// Ranks a denominator shared between the borderline 3-term candidate and the
// 4-term winner. Appreciation is a pure function of the rank difference:
// 0 -> NoInterest, 1 -> TooNear, >= 2 -> Acceptable; no shared denominator
// -> NotApplicable (ranks stay 0).
struct TransitionAnalysis {
    std::int64_t d = 0;
    std::optional<std::int64_t> shared_denominator;
    int rank3 = 0;  // 1-based position in the 3-term candidate
    int rank4 = 0;  // 1-based position in the 4-term candidate
    Appreciation appreciation = Appreciation::NotApplicable;
};

class SelectionError : public std::runtime_error {
public:
    SelectionError(std::int64_t d, const std::string& what)
        : std::runtime_error(what), d_(d) {}
    std::int64_t d() const { return d_; }

private:
    std::int64_t d_;
};

// A cascade that cannot decide signals a rule-reconstruction failure; ties
// are never broken silently.
class AmbiguityError : public SelectionError {
public:
    using SelectionError::SelectionError;
};

// Keeps records whose largest multiplier is <= flag; order preserved.
std::vector<TrialRecord> apply_topflag(std::vector<TrialRecord> trials, std::int64_t flag);

// 3-term cascade over the flag survivors: single candidate wins outright;
// otherwise smallest delta, then 2n <= 10, then consecutive multipliers.
// Returns nothing when the flag leaves no survivor.
std::optional<SelectionOutcome> select3(std::int64_t d, const TopFlags& flags = {});

// Same cascade over an explicit candidate list (order must not matter).
SelectionOutcome select3_over(std::int64_t d, std::span<const TrialRecord> candidates,
                              const TopFlags& flags = {});

// 4-term cascade: single candidate, else consecutive run, else smallest
// delta'; an odd-headed winner is then discarded and the cascade rerun over
// the even-headed candidates.
std::optional<SelectionOutcome> select4(std::int64_t d, const TopFlags& flags = {});

SelectionOutcome select4_over(std::int64_t d, std::span<const TrialRecord> candidates,
                              const TopFlags& flags = {});

struct BorderlineCandidate {
    TrialRecord record;
    bool gap_discarded = false;  // true when a delta >= 13 row was dropped
};

// The review row for the 3->4 transition: smallest delta among the 3-term
// trials with m_3 <= borderline_m3_max, after dropping too-high gaps.
std::optional<BorderlineCandidate> borderline_candidate(std::int64_t d,
                                                        const TopFlags& flags = {});

// A prime is borderline when the 3-term flag leaves no survivor but a
// reviewable row with m_3 <= borderline_m3_max exists.
bool is_borderline(std::int64_t d, const TopFlags& flags = {});

struct TransitionDecision {
    TransitionAnalysis analysis;
    SelectionOutcome outcome;
};

// Rules on a borderline prime. A 4-term winner with a full consecutive
// multiplier run is adopted outright; one sharing no denominator with the
// 3-term candidate is adopted as well; otherwise the shared denominator's
// rank difference decides: 0 falls back to the 2-term solution, 1 keeps the
// 3-term candidate under the relaxed flag, >= 2 adopts the 4-term winner.
TransitionDecision transition_decide(std::int64_t d, const TopFlags& flags = {});

// SelectionOutcome for the unique 2-term solution of any odd prime.
SelectionOutcome two_term_outcome(std::int64_t d);

// One outcome per prime 3 <= d <= 97: the four mother-table primes keep
// their 2-term rows; everything else runs the 3-term cascade, entering the
// transition path (or directly the 4-term cascade) when no survivor exists.
SelectionOutcome reconstruct(std::int64_t d, const TopFlags& flags = {});

// Outcomes for every prime in [3, 97]; errors carry the offending prime.
std::map<std::int64_t, SelectionOutcome> reconstruct_table(const TopFlags& flags = {});

} // namespace recto
