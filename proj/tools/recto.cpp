// recto -- reconstruct and inspect the 2/D table for prime D.
//
// Subcommands: table, trials, select, search, verify.
// Exit codes: 0 success (verify: full match), 1 verification mismatch,
// 2 usage error, 3 cascade ambiguity / no admissible outcome.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "recto/divisors.hpp"
#include "recto/general_search.hpp"
#include "recto/render.hpp"
#include "recto/selection.hpp"
#include "recto/trials.hpp"
#include "recto/verify.hpp"

namespace {

using namespace recto;

OutputFormat format_or_throw(const std::string& name) {
    auto format = parse_format(name);
    if (!format)
        throw std::invalid_argument("unknown format: " + name);
    return *format;
}

void require_table_prime(std::int64_t d) {
    if (d < 3 || d > 97 || !is_prime(d))
        throw std::invalid_argument("--d must be a prime in [3, 97], got " + std::to_string(d));
}

void add_flag_overrides(CLI::App* cmd, TopFlags& flags) {
    cmd->add_option("--topflag3", flags.tf3, "3-term multiplier cap (default 10)");
    cmd->add_option("--topflag4", flags.tf4, "4-term multiplier cap (default 10)");
    cmd->add_option("--topflag3-relaxed", flags.tf3_relaxed,
                    "relaxed 3-term cap used by the transition ruling (default 15)");
    cmd->add_option("--borderline-max", flags.borderline_m3_max,
                    "largest m3 reviewed in the transition analysis (default 16)");
}

int run_table(std::int64_t min, std::int64_t max, const std::string& format_name, bool trace,
              const TopFlags& flags) {
    if (min < 3 || min > max || max > 97)
        throw std::invalid_argument("range must satisfy 3 <= min <= max <= 97");
    OutputFormat format = format_or_throw(format_name);
    std::map<std::int64_t, SelectionOutcome> rows;
    for (std::int64_t d = min; d <= max; ++d)
        if (is_prime(d))
            rows.emplace(d, reconstruct(d, flags));
    std::cout << render_table(rows, format, trace);
    return 0;
}

int run_trials(std::int64_t d, int terms, std::optional<std::int64_t> topflag,
               const std::string& sort, const std::string& format_name) {
    require_table_prime(d);
    if (terms != 3 && terms != 4)
        throw std::invalid_argument("--terms must be 3 or 4");
    if (sort != "delta" && sort != "n")
        throw std::invalid_argument("--sort must be delta or n");
    OutputFormat format = format_or_throw(format_name);

    auto rows = terms == 3 ? trials3(d) : trials4(d);
    if (topflag)
        rows = apply_topflag(std::move(rows), *topflag);
    if (sort == "delta")
        std::stable_sort(rows.begin(), rows.end(),
                         [](const TrialRecord& a, const TrialRecord& b) { return a.delta < b.delta; });
    std::cout << render_trials(d, terms, rows, format);
    return 0;
}

int run_select(std::int64_t d, bool explain, const TopFlags& flags) {
    require_table_prime(d);
    std::optional<TransitionAnalysis> analysis;
    SelectionOutcome outcome;
    if (d >= 13 && is_borderline(d, flags)) {
        TransitionDecision decision = transition_decide(d, flags);
        analysis = decision.analysis;
        outcome = std::move(decision.outcome);
    } else {
        outcome = reconstruct(d, flags);
    }
    std::cout << render_select(outcome, analysis, explain);
    return 0;
}

int run_search(std::int64_t d, int terms, std::int64_t topflag, bool general) {
    require_table_prime(d);
    if (terms < 2 || terms > 4)
        throw std::invalid_argument("--terms must be 2, 3 or 4");
    if (general) {
        auto solutions = general_search(d, terms, topflag);
        std::cout << render_search(solutions);
        return 0;
    }
    std::vector<Decomposition> decompositions;
    if (terms == 2) {
        decompositions.push_back(two_term(d));
    } else {
        auto rows = apply_topflag(terms == 3 ? trials3(d) : trials4(d), topflag);
        for (auto& rec : rows)
            decompositions.push_back(std::move(rec.decomposition));
    }
    std::cout << render_search(decompositions);
    return 0;
}

int run_verify_cmd(const std::string& format_name, const TopFlags& flags) {
    OutputFormat format = format_or_throw(format_name);
    VerifyReport report = run_verify(flags);
    std::cout << render_verify(report, format);
    return report.all_match() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recto: the 2/D table for prime D, rebuilt from trials and verified exactly"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "reconstruct the table for a range of primes");
    std::int64_t table_min = 3, table_max = 97;
    std::string table_format = "text";
    bool table_trace = false;
    TopFlags table_flags;
    table->add_option("--min", table_min, "smallest prime (default 3)");
    table->add_option("--max", table_max, "largest prime (default 97)");
    table->add_option("--format", table_format, "text, csv or json");
    table->add_flag("--trace", table_trace, "append the rationale tags (text output)");
    add_flag_overrides(table, table_flags);

    // trials
    auto* trials = app.add_subcommand("trials", "dump the trial table for one prime");
    std::int64_t trials_d = 0;
    int trials_terms = 3;
    std::optional<std::int64_t> trials_topflag;
    std::string trials_sort = "delta";
    std::string trials_format = "text";
    trials->add_option("--d", trials_d, "prime denominator")->required();
    trials->add_option("--terms", trials_terms, "3 or 4")->required();
    trials->add_option("--topflag", trials_topflag, "keep rows with last multiplier <= flag");
    trials->add_option("--sort", trials_sort, "delta (presentation order) or n");
    trials->add_option("--format", trials_format, "text, csv or json");

    // select
    auto* select = app.add_subcommand("select", "run the decision cascade for one prime");
    std::int64_t select_d = 0;
    bool select_explain = false;
    TopFlags select_flags;
    select->add_option("--d", select_d, "prime denominator")->required();
    select->add_flag("--explain", select_explain, "print rationale and transition analysis");
    add_flag_overrides(select, select_flags);

    // search
    auto* search = app.add_subcommand("search", "list solutions under a multiplier cap");
    std::int64_t search_d = 0;
    int search_terms = 3;
    std::int64_t search_topflag = 10;
    bool search_general = false;
    search->add_option("--d", search_d, "prime denominator")->required();
    search->add_option("--terms", search_terms, "2, 3 or 4")->required();
    search->add_option("--topflag", search_topflag, "multiplier cap (default 10)");
    search->add_flag("--general", search_general,
                     "drop the divisor constraint and scan multiplier tuples");

    // verify
    auto* verify = app.add_subcommand("verify", "compare the reconstruction with the papyrus");
    std::string verify_format = "text";
    TopFlags verify_flags;
    verify->add_option("--format", verify_format, "text, csv or json");
    add_flag_overrides(verify, verify_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(table))
            return run_table(table_min, table_max, table_format, table_trace, table_flags);
        if (app.got_subcommand(trials))
            return run_trials(trials_d, trials_terms, trials_topflag, trials_sort, trials_format);
        if (app.got_subcommand(select))
            return run_select(select_d, select_explain, select_flags);
        if (app.got_subcommand(search))
            return run_search(search_d, search_terms, search_topflag, search_general);
        if (app.got_subcommand(verify))
            return run_verify_cmd(verify_format, verify_flags);
    } catch (const AmbiguityError& e) {
        std::cerr << "error: cascade ambiguity at D=" << e.d() << ": " << e.what() << "\n";
        return 3;
    } catch (const SelectionError& e) {
        std::cerr << "error: no outcome for D=" << e.d() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
