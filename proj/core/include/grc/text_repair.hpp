#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grc/freq.hpp"
#include "grc/repair_grammar.hpp"
#include "grc/stats.hpp"
#include "grc/symbol.hpp"

namespace grc {

/// Exact non-overlapping frequency of every bigram in w: plain occurrence
/// count for distinct letters, sum of floor(d/2) over maximal blocks c^d for
/// a repeating bigram.
FreqTable freq_table_text(std::span<const Symbol> w);

/// Replaces every non-overlapping occurrence of `b` with `fresh`, greedy
/// left to right, so a block c^d turns into fresh^(d/2) plus a trailing c
/// when d is odd. |result| = |w| - freq(b, w).
std::vector<Symbol> replace_pair_text(std::span<const Symbol> w, Bigram b, Symbol fresh);

struct TextRepairResult {
    RePairGrammar grammar;
    RunStats stats;
};

struct TextRepairOptions {
    Symbol first_fresh = 0;  // 0 means "use sigma"
    int phase = 1;           // phase tag copied into the level records
};

/// Reference engine: full rescan per level. The fixed point of
/// select/replace under the shared tie-break; everything else in the
/// toolkit is tested against it.
TextRepairResult repair_naive(std::span<const Symbol> text, std::uint32_t sigma,
                              const TextRepairOptions& opt = {});

/// Linked-run engine: doubly linked run list, per-bigram occurrence sets and
/// a max queue, each replacement touching O(1) adjacencies. Output is
/// bit-identical to repair_naive.
TextRepairResult repair_fast(std::span<const Symbol> text, std::uint32_t sigma,
                             const TextRepairOptions& opt = {});

}  // namespace grc
