#include "recto/render.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace recto {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fraction_line(std::int64_t d, std::span<const std::int64_t> denominators,
                          std::span<const std::int64_t> multipliers) {
    std::ostringstream os;
    os << "2/" << d << " = 1/" << denominators.front();
    for (std::size_t i = 1; i < denominators.size(); ++i) {
        os << " + 1/" << denominators[i];
        if (i - 1 < multipliers.size())
            os << "_" << multipliers[i - 1];
    }
    return os.str();
}

std::vector<std::string> rationale_names(std::span<const Rule> rationale) {
    std::vector<std::string> out;
    out.reserve(rationale.size());
    for (Rule rule : rationale)
        out.emplace_back(to_string(rule));
    return out;
}

ordered_json trial_to_json(const TrialRecord& rec) {
    ordered_json row;
    row["n"] = rec.n;
    row["odd_sum"] = rec.odd_sum;
    row["parts"] = rec.parts;
    row["delta"] = rec.delta;
    row["head"] = rec.head;
    row["denominators"] = rec.decomposition.denominators;
    row["multipliers"] = rec.decomposition.multipliers;
    return row;
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "text")
        return OutputFormat::Text;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    return std::nullopt;
}

std::string fraction_text(const Decomposition& decomposition) {
    return fraction_line(decomposition.d, decomposition.denominators, decomposition.multipliers);
}

std::string fraction_text(const GeneralSolution& solution) {
    return fraction_line(solution.d, solution.denominators, solution.multipliers);
}

std::string join(std::span<const std::int64_t> values, char separator) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out.push_back(separator);
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<std::int64_t> split_int_list(std::string_view cell, char separator) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= cell.size()) {
        std::size_t end = cell.find(separator, start);
        if (end == std::string_view::npos)
            end = cell.size();
        std::string piece(cell.substr(start, end - start));
        if (piece.empty())
            throw std::invalid_argument("empty piece in integer list");
        std::size_t used = 0;
        std::int64_t value = std::stoll(piece, &used);
        if (used != piece.size())
            throw std::invalid_argument("trailing characters in integer list: " + piece);
        out.push_back(value);
        if (end == cell.size())
            break;
        start = end + 1;
    }
    return out;
}

std::string rationale_text(std::span<const Rule> rationale, char separator) {
    std::string out;
    for (std::size_t i = 0; i < rationale.size(); ++i) {
        if (i > 0) {
            out.push_back(separator);
            if (separator == ',')
                out.push_back(' ');
        }
        out += to_string(rationale[i]);
    }
    return out;
}

std::string render_table(const std::map<std::int64_t, SelectionOutcome>& rows,
                         OutputFormat format, bool trace) {
    switch (format) {
    case OutputFormat::Text: {
        std::ostringstream os;
        for (const auto& [d, outcome] : rows) {
            os << fraction_text(outcome.chosen);
            if (trace)
                os << "  [" << rationale_text(outcome.rationale, ',') << "]";
            os << "\n";
        }
        return os.str();
    }
    case OutputFormat::Csv: {
        std::ostringstream os;
        os << "d,terms,head,denominators,multipliers,rationale\n";
        for (const auto& [d, outcome] : rows)
            os << d << "," << outcome.term_count << "," << outcome.chosen.head << ","
               << join(outcome.chosen.denominators, '+') << ","
               << join(outcome.chosen.multipliers, ';') << ","
               << rationale_text(outcome.rationale, ';') << "\n";
        return os.str();
    }
    case OutputFormat::Json: {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "table";
        doc["rows"] = ordered_json::array();
        for (const auto& [d, outcome] : rows) {
            ordered_json row;
            row["d"] = d;
            row["terms"] = outcome.term_count;
            row["head"] = outcome.chosen.head;
            row["denominators"] = outcome.chosen.denominators;
            row["multipliers"] = outcome.chosen.multipliers;
            row["topflag"] = outcome.topflag_used;
            row["rationale"] = rationale_names(outcome.rationale);
            doc["rows"].push_back(std::move(row));
        }
        return doc.dump(2) + "\n";
    }
    }
    return {};
}

std::string render_trials(std::int64_t d, int terms, std::span<const TrialRecord> rows,
                          OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: {
        std::ostringstream os;
        for (const auto& rec : rows) {
            os << "n=" << rec.n << "  2n+1=" << rec.odd_sum << "  parts=" << join(rec.parts, '+')
               << "  delta=" << rec.delta << "  head=" << rec.head << "  "
               << fraction_text(rec.decomposition) << "\n";
        }
        return os.str();
    }
    case OutputFormat::Csv: {
        std::ostringstream os;
        os << (terms == 3 ? "d,n,odd_sum,d2,d3,delta,head,denominators,multipliers\n"
                          : "d,n,odd_sum,d2,d3,d4,delta,head,denominators,multipliers\n");
        for (const auto& rec : rows) {
            os << rec.d << "," << rec.n << "," << rec.odd_sum;
            for (std::int64_t part : rec.parts)
                os << "," << part;
            os << "," << rec.delta << "," << rec.head << ","
               << join(rec.decomposition.denominators, '+') << ","
               << join(rec.decomposition.multipliers, ';') << "\n";
        }
        return os.str();
    }
    case OutputFormat::Json: {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "trials";
        doc["d"] = d;
        doc["terms"] = terms;
        doc["rows"] = ordered_json::array();
        for (const auto& rec : rows)
            doc["rows"].push_back(trial_to_json(rec));
        return doc.dump(2) + "\n";
    }
    }
    return {};
}

std::string render_select(const SelectionOutcome& outcome,
                          const std::optional<TransitionAnalysis>& transition, bool explain) {
    std::ostringstream os;
    os << fraction_text(outcome.chosen) << "\n";
    if (!explain)
        return os.str();
    os << "terms: " << outcome.term_count << "\n";
    os << "topflag: " << outcome.topflag_used << "\n";
    os << "rationale: " << rationale_text(outcome.rationale, ',') << "\n";
    if (transition) {
        os << "transition: ";
        if (transition->shared_denominator)
            os << "shared denominator " << *transition->shared_denominator << ", rank "
               << transition->rank3 << " in 3-term vs rank " << transition->rank4
               << " in 4-term, appreciation " << to_string(transition->appreciation) << "\n";
        else
            os << "no shared denominator, appreciation "
               << to_string(transition->appreciation) << "\n";
    }
    return os.str();
}

std::string render_search(std::span<const GeneralSolution> solutions) {
    std::ostringstream os;
    for (const auto& solution : solutions)
        os << fraction_text(solution) << "\n";
    return os.str();
}

std::string render_search(std::span<const Decomposition> decompositions) {
    std::ostringstream os;
    for (const auto& decomposition : decompositions)
        os << fraction_text(decomposition) << "\n";
    return os.str();
}

std::string render_verify(const VerifyReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: {
        std::ostringstream os;
        for (const auto& e : report.entries) {
            os << "D=" << e.d << "  ";
            if (e.match) {
                os << "match     2/" << e.d << " -> " << join(e.actual, '+');
            } else if (!e.error.empty()) {
                os << "ERROR     " << e.error;
            } else {
                os << "MISMATCH  expected " << join(e.expected, '+') << ", got "
                   << (e.actual.empty() ? std::string("nothing") : join(e.actual, '+'));
            }
            os << "\n";
        }
        os << "matched " << report.matches << "/" << report.entries.size() << "\n";
        return os.str();
    }
    case OutputFormat::Csv: {
        std::ostringstream os;
        os << "d,match,expected,actual,rationale\n";
        for (const auto& e : report.entries)
            os << e.d << "," << (e.match ? "true" : "false") << "," << join(e.expected, '+')
               << "," << join(e.actual, '+') << "," << rationale_text(e.rationale, ';') << "\n";
        return os.str();
    }
    case OutputFormat::Json: {
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "verify";
        doc["total"] = report.entries.size();
        doc["matches"] = report.matches;
        doc["mismatches"] = report.mismatches;
        doc["entries"] = ordered_json::array();
        for (const auto& e : report.entries) {
            ordered_json row;
            row["d"] = e.d;
            row["match"] = e.match;
            row["expected"] = e.expected;
            row["actual"] = e.actual;
            row["rationale"] = rationale_names(e.rationale);
            if (!e.error.empty())
                row["error"] = e.error;
            doc["entries"].push_back(std::move(row));
        }
        return doc.dump(2) + "\n";
    }
    }
    return {};
}

} // namespace recto
