#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grc/freq.hpp"
#include "grc/level_grammar.hpp"
#include "grc/repair_grammar.hpp"
#include "grc/slp.hpp"
#include "grc/stats.hpp"

namespace grc {

/// Exact frequencies of all bigrams of #T_h$, computed on the grammar: each
/// live rule scans rmb(left) . mid . lmb(right), counting run boundaries
/// and maximal blocks it witnesses, weighted by vocc. Agrees with
/// freq_table_text of the expansion.
FreqTable compute_frequencies(const LevelGrammar& g, std::span<const std::uint64_t> vocc,
                              const BoundaryInfo& boundary);

/// Makes every occurrence of the non-repeating bigram (c1, c2) explicit:
/// letters are popped into rules next to variable occurrences whose
/// expansions start with c2 / end with c1 and popped out of the rules that
/// held them, with the boundary snapshot fixing all decisions up front.
/// Rules that empty out become null and vanish from their parents. The
/// derived string does not change.
void uncross_nonrepeating(LevelGrammar& g, Symbol c1, Symbol c2, const BoundaryInfo& boundary);

/// Same for a repeating bigram cc: every variable sheds the leading and
/// trailing c-runs of its expansion, bottom-up, so each maximal block of c
/// ends up as one explicit run in exactly one mid.
void uncross_repeating(LevelGrammar& g, Symbol c, const BoundaryInfo& boundary);

/// Rewrites all (now explicit) occurrences of `b` with `fresh` and returns
/// the number of replacements weighted by vocc, which equals the bigram's
/// frequency. Decrements text_len accordingly.
std::uint64_t replace_explicit(LevelGrammar& g, Bigram b, Symbol fresh,
                               std::span<const std::uint64_t> vocc);

struct RecompressOptions {
    /// Re-verify expansion, frequencies and vocc against brute force at
    /// every level. Test-depth switch; far too slow for production runs.
    bool debug_verify = false;
};

struct RecompressResult {
    RePairGrammar grammar;
    RunStats stats;
};

/// Level-by-level driver for the scan engine.
class ScanRecompressor {
public:
    ScanRecompressor(const Slp& slp, RecompressOptions opt = {});

    /// Runs one level; false when no bigram has frequency >= 2 anymore.
    bool step();

    /// Final grammar + stats; call after step() returned false (or early,
    /// for hybrid switch-over).
    RecompressResult finish();

    const LevelGrammar& grammar() const { return g_; }
    const std::vector<LevelStats>& levels() const { return levels_; }
    std::uint64_t text_len() const { return g_.text_len; }  // |#T_h$|

    static RecompressResult run(const Slp& slp, RecompressOptions opt = {});

private:
    LevelGrammar g_;
    std::vector<std::uint64_t> vocc_;
    std::vector<LevelStats> levels_;
    std::uint64_t input_vars_ = 0;
    std::uint64_t cumulative_ = 0;
    RecompressOptions opt_;
    std::vector<Symbol> debug_text_;  // maintained copy of #T_h$ when verifying
    int phase_ = 1;

public:
    void set_phase(int phase) { phase_ = phase; }
};

}  // namespace grc
