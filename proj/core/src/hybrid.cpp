#include "grc/hybrid.hpp"

#include <algorithm>

#include "grc/errors.hpp"
#include "grc/text_repair.hpp"

namespace grc {

namespace {

// Minimal stepping facade over the two recompression engines.
class Phase1Engine {
public:
    Phase1Engine(const Slp& slp, HybridConfig::Phase1 kind, bool debug) {
        RecompressOptions opt{debug};
        if (kind == HybridConfig::Phase1::Scan) {
            scan_.emplace(slp, opt);
        } else {
            fast_.emplace(slp, opt);
        }
    }

    bool step() { return scan_ ? scan_->step() : fast_->step(); }
    std::uint64_t text_len() const { return scan_ ? scan_->text_len() : fast_->text_len(); }
    RecompressResult finish() { return scan_ ? scan_->finish() : fast_->finish(); }

private:
    std::optional<ScanRecompressor> scan_;
    std::optional<FastRecompressor> fast_;
};

}  // namespace

HybridResult run_hybrid(const Slp& slp, const HybridConfig& cfg) {
    GRC_CHECK(cfg.t >= 1, "hybrid shrink factor must be at least 1");
    const std::uint64_t n_len = expansion_length(slp);

    HybridResult res;
    res.summary.t = cfg.t;

    Phase1Engine engine(slp, cfg.phase1, cfg.debug_verify);
    std::uint32_t levels_run = 0;
    bool terminated = false;

    // The threshold is checked before each level using the maintained text
    // length; t = 1 degenerates to immediate materialization.
    auto below_threshold = [&]() {
        if (cfg.t == 1) return true;
        std::uint64_t t_h = engine.text_len() - 2;  // strip the sentinels
        return static_cast<unsigned __int128>(t_h) * cfg.t < n_len;
    };

    while (!below_threshold()) {
        if (!engine.step()) {
            terminated = true;
            break;
        }
        ++levels_run;
    }

    RecompressResult phase1 = engine.finish();
    res.summary.switch_level = levels_run;
    res.summary.total_replacements = phase1.stats.total_replacements();
    std::uint64_t peak_g = 0;
    for (const LevelStats& l : phase1.stats.levels) peak_g = std::max(peak_g, l.grammar_size);
    peak_g = std::max(peak_g, phase1.stats.final_grammar_size);

    if (terminated) {
        // Recompression finished before the text shrank past N/t.
        res.grammar = std::move(phase1.grammar);
        res.stats = std::move(phase1.stats);
        res.summary.switch_len = res.grammar.final_seq.size();
        res.summary.peak_metric = peak_g;
        res.summary.phase2_ran = false;
        return res;
    }

    // Materialize T_h and hand over to the text engine, continuing the
    // letter numbering where phase 1 stopped.
    std::vector<Symbol> text = std::move(phase1.grammar.final_seq);
    res.summary.switch_len = text.size();
    res.summary.phase2_ran = true;
    res.summary.peak_metric = peak_g + text.size();

    TextRepairOptions topt;
    topt.first_fresh = slp.sigma + static_cast<Symbol>(phase1.grammar.pairs.size());
    topt.phase = 2;
    TextRepairResult phase2 = repair_fast(text, slp.sigma, topt);

    res.grammar.sigma = slp.sigma;
    res.grammar.pairs = std::move(phase1.grammar.pairs);
    res.grammar.pairs.insert(res.grammar.pairs.end(), phase2.grammar.pairs.begin(),
                             phase2.grammar.pairs.end());
    res.grammar.final_seq = std::move(phase2.grammar.final_seq);

    res.stats.levels = std::move(phase1.stats.levels);
    std::uint64_t base = res.summary.total_replacements;
    std::uint32_t level = levels_run;
    for (LevelStats l : phase2.stats.levels) {
        l.level = level++;
        l.cumulative_replacements += base;
        res.stats.levels.push_back(l);
    }
    res.stats.input_vars = slp.rules.size();
    res.stats.pairs = res.grammar.pairs.size();
    res.stats.final_grammar_size = 0;
    res.stats.final_live_vars = 0;
    res.summary.total_replacements += phase2.stats.total_replacements();
    return res;
}

}  // namespace grc
