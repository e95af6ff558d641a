#pragma once

// Text/CSV/JSON rendering for the command-line surface, plus the small
// parsers the round-trip tests use. Output is byte-deterministic: no
// timestamps, fixed field order, '\n' line ends. CSV cells hold denominator
// lists joined by '+' and other lists joined by ';'. JSON documents carry
// schema_version 1.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recto/general_search.hpp"
#include "recto/selection.hpp"
#include "recto/trials.hpp"
#include "recto/verify.hpp"

namespace recto {

enum class OutputFormat { Text, Csv, Json };

// Parses "text" / "csv" / "json".
std::optional<OutputFormat> parse_format(std::string_view name);

inline constexpr int kSchemaVersion = 1;

// "2/13 = 1/8 + 1/52_4 + 1/104_8": denominators with multiplier subscripts.
std::string fraction_text(const Decomposition& decomposition);
std::string fraction_text(const GeneralSolution& solution);

std::string join(std::span<const std::int64_t> values, char separator);

// Inverse of join; rejects empty cells and non-numeric pieces.
std::vector<std::int64_t> split_int_list(std::string_view cell, char separator);

std::string rationale_text(std::span<const Rule> rationale, char separator);

std::string render_table(const std::map<std::int64_t, SelectionOutcome>& rows,
                         OutputFormat format, bool trace);

std::string render_trials(std::int64_t d, int terms, std::span<const TrialRecord> rows,
                          OutputFormat format);

std::string render_select(const SelectionOutcome& outcome,
                          const std::optional<TransitionAnalysis>& transition, bool explain);

std::string render_search(std::span<const GeneralSolution> solutions);
std::string render_search(std::span<const Decomposition> decompositions);

std::string render_verify(const VerifyReport& report, OutputFormat format);

} // namespace recto
