#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grc/symbol.hpp"

namespace grc {

/// Per-level record. text_len is |T_h| (sentinels excluded) before the
/// replacement at that level; grammar_size and live_vars are zero for the
/// plain-text engines.
struct LevelStats {
    std::uint32_t level = 0;
    Bigram bigram;
    std::uint64_t freq = 0;
    std::uint64_t grammar_size = 0;
    std::uint64_t live_vars = 0;
    std::uint64_t text_len = 0;
    std::uint64_t cumulative_replacements = 0;
    int phase = 1;
};

/// Whole-run statistics. The aggregates follow the usual reporting
/// convention of sampling levels 0..m where level m is the terminal state,
/// so final_grammar_size / final_live_vars take part in the sums.
struct RunStats {
    std::vector<LevelStats> levels;
    std::uint64_t input_vars = 0;       // n
    std::uint64_t pairs = 0;            // m
    std::uint64_t final_grammar_size = 0;
    std::uint64_t final_live_vars = 0;

    std::uint64_t max_grammar_size() const;   // Max
    std::uint64_t sum_grammar_size() const;   // sum over h of |G_h|
    std::uint64_t sum_live_vars() const;      // sum over h of n_h
    std::uint64_t total_replacements() const; // R
};

/// One diff-friendly line per record, stable key order.
std::string stats_line(const LevelStats& s);
std::string aggregate_line(const RunStats& s);
void write_stats(const RunStats& s, std::ostream& out);

}  // namespace grc
