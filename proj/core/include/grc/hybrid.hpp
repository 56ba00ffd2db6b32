#pragma once

#include <cstdint>

#include "grc/recompress_fast.hpp"
#include "grc/recompress_scan.hpp"

namespace grc {

/// t is the shrink factor: recompression runs while |T_h| >= N/t, then the
/// virtual text is materialized and the linked-run text engine finishes.
/// t = 1 materializes immediately; a very large t never switches.
struct HybridConfig {
    std::uint64_t t = 2;
    enum class Phase1 { Scan, Fast };
    Phase1 phase1 = Phase1::Scan;
    bool debug_verify = false;
};

struct HybridSummary {
    std::uint64_t t = 0;
    std::uint32_t switch_level = 0;  // levels run before materializing
    std::uint64_t switch_len = 0;    // |T_h| at materialization
    std::uint64_t peak_metric = 0;   // max |G_h| plus |T_h| at the switch
    std::uint64_t total_replacements = 0;
    bool phase2_ran = false;
};

struct HybridResult {
    RePairGrammar grammar;
    RunStats stats;
    HybridSummary summary;
};

/// Output is bit-identical to a full single-engine run: both phases share
/// the tie-break and the introduced letters continue the same numbering.
HybridResult run_hybrid(const Slp& slp, const HybridConfig& cfg);

}  // namespace grc
