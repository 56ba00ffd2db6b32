#include "grc/recompress_scan.hpp"

#include <algorithm>

#include "grc/errors.hpp"
#include "grc/text_repair.hpp"

namespace grc {

FreqTable compute_frequencies(const LevelGrammar& g, std::span<const std::uint64_t> vocc,
                              const BoundaryInfo& boundary) {
    FreqTable table;
    std::vector<RlRun> raw;
    for (std::uint32_t i = 0; i < g.rules.size(); ++i) {
        const LevelRule& rule = g.rules[i];
        if (rule.null || vocc[i] == 0) continue;
        const std::uint64_t v = vocc[i];

        raw.clear();
        if (rule.left) raw.push_back(boundary.at(*rule.left).rmb);
        for (const RlRun& r : rule.mid.runs()) raw.push_back(r);
        if (rule.right) raw.push_back(boundary.at(*rule.right).lmb);

        // Walk the local string rmb(l) mid lmb(r), merging equal-letter
        // neighbours into blocks. Every block boundary is one occurrence
        // stabbed by this rule; a block counts floor(d/2) unless it is a
        // prefix or suffix of val(X), which the child-derived window ends
        // and the single-block flags decide.
        Symbol prev_letter = 0;
        bool have_prev = false;
        std::size_t idx = 0;
        while (idx < raw.size()) {
            const Symbol c = raw[idx].letter;
            const bool includes_first = (idx == 0);
            std::uint64_t d = 0;
            while (idx < raw.size() && raw[idx].letter == c) {
                d += raw[idx].exp;
                ++idx;
            }
            const bool includes_last = (idx == raw.size());
            if (have_prev) table[{prev_letter, c}] += v;
            prev_letter = c;
            have_prev = true;
            if (d >= 2) {
                const bool is_prefix =
                    includes_first && (!rule.left || boundary.at(*rule.left).single_block);
                const bool is_suffix =
                    includes_last && (!rule.right || boundary.at(*rule.right).single_block);
                if (!is_prefix && !is_suffix) table[{c, c}] += (d / 2) * v;
            }
        }
    }
    return table;
}

void uncross_nonrepeating(LevelGrammar& g, Symbol c1, Symbol c2,
                          const BoundaryInfo& boundary) {
    GRC_CHECK(c1 != c2, "uncross_nonrepeating on a repeating bigram");
    // All pop decisions are taken against the pre-pop boundary snapshot, so
    // one ascending pass realizes the simultaneous semantics; children are
    // always final before any parent looks at them.
    for (std::uint32_t i = 0; i < g.rules.size(); ++i) {
        LevelRule& rule = g.rules[i];
        if (rule.null) continue;

        const bool has_l = rule.left.has_value();
        const bool has_r = rule.right.has_value();
        const bool mid_empty = rule.mid.empty();

        // Pop-out conditions refer to the pre-pop rule string: an explicit
        // leading c2 exists only without a left variable, an explicit
        // trailing c1 only without a right variable.
        const bool del_front = !has_l && !mid_empty && rule.mid.first_letter() == c2;
        const bool del_back = !has_r && !mid_empty && rule.mid.last_letter() == c1;

        // Pop-in around variable occurrences that are not at the very first
        // or very last position of the rule string.
        if (has_l) {
            const bool at_last = mid_empty && !has_r;
            if (!at_last && boundary.at(*rule.left).last_letter() == c1)
                rule.mid.prepend(c1, 1);
        }
        if (has_r) {
            const bool at_first = !has_l && mid_empty;
            if (!at_first && boundary.at(*rule.right).first_letter() == c2)
                rule.mid.append(c2, 1);
        }

        if (del_front) rule.mid.pop_front_letter();
        if (del_back) rule.mid.pop_back_letter();

        // Null elimination: children that emptied out earlier in this pass
        // disappear; any letters popped around them stay.
        if (has_l && g.rules[*rule.left].null) rule.left.reset();
        if (has_r && g.rules[*rule.right].null) rule.right.reset();

        if (rule.empty()) rule.null = true;
    }
    GRC_CHECK(!g.rules[g.start_rule()].null, "start rule nulled during uncross");
}

void uncross_repeating(LevelGrammar& g, Symbol c, const BoundaryInfo& boundary) {
    const std::size_t n = g.rules.size();
    std::vector<std::uint64_t> pre(n, 0), suf(n, 0), full(n, 0);
    std::vector<bool> now_null(n, false);

    for (std::uint32_t i = 0; i < n; ++i) {
        LevelRule& rule = g.rules[i];
        if (rule.null) continue;

        // Substitute this pass's child pops: a nullified child is exactly a
        // c-power and turns into its run; a live child contributes the
        // suffix run (after the left variable) or prefix run (before the
        // right variable) it shed. The child's own outer pops that sit at
        // the first/last rule position never materialize here; they simply
        // bubble into this rule's pre/suf record.
        RlString mid;
        std::optional<std::uint32_t> new_left, new_right;
        if (rule.left) {
            const std::uint32_t y = *rule.left;
            if (now_null[y]) {
                mid.append(c, full[y]);
            } else {
                new_left = y;
            }
        }
        if (new_left) mid.append(c, suf[*new_left]);
        mid.append(rule.mid);
        if (rule.right) {
            const std::uint32_t z = *rule.right;
            if (now_null[z]) {
                mid.append(c, full[z]);
                new_right.reset();
            } else {
                mid.append(c, pre[z]);
                new_right = z;
            }
        }

        // Strip this rule's own explicit affix runs of c.
        std::uint64_t p = 0, s = 0;
        if (!new_left && !mid.empty() && mid.first_letter() == c)
            p = mid.strip_front_run().exp;
        if (!new_right && !mid.empty() && mid.last_letter() == c)
            s = mid.strip_back_run().exp;

        rule.left = new_left;
        rule.right = new_right;
        rule.mid = std::move(mid);

        if (rule.empty()) {
            rule.null = true;
            now_null[i] = true;
            full[i] = p + s;
            GRC_CHECK(full[i] == boundary.at(i).length,
                      "nullified rule was not a pure power of the target letter");
        } else {
            pre[i] = new_left ? pre[*new_left] : p;
            suf[i] = new_right ? suf[*new_right] : s;
            const BoundaryEntry& be = boundary.at(i);
            GRC_CHECK(pre[i] == (be.lmb.letter == c ? be.lmb.exp : 0),
                      "popped prefix run disagrees with the boundary snapshot");
            GRC_CHECK(suf[i] == (be.rmb.letter == c ? be.rmb.exp : 0),
                      "popped suffix run disagrees with the boundary snapshot");
        }
    }

    const std::uint32_t start = g.start_rule();
    GRC_CHECK(!now_null[start] && pre[start] == 0 && suf[start] == 0,
              "sentinels failed to bound a block pop");
}

std::uint64_t replace_explicit(LevelGrammar& g, Bigram b, Symbol fresh,
                               std::span<const std::uint64_t> vocc) {
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < g.rules.size(); ++i) {
        LevelRule& rule = g.rules[i];
        if (rule.null || rule.mid.empty()) continue;

        std::uint64_t cnt = 0;
        RlString out;
        if (b.repeating()) {
            const Symbol c = b.left;
            for (const RlRun& run : rule.mid.runs()) {
                if (run.letter == c && run.exp >= 2) {
                    out.append(fresh, run.exp / 2);
                    if (run.exp % 2) out.append(c, 1);
                    cnt += run.exp / 2;
                } else {
                    out.append(run);
                }
            }
        } else {
            std::vector<RlRun> runs(rule.mid.runs());
            for (std::size_t k = 0; k < runs.size(); ++k) {
                if (runs[k].letter == b.left && k + 1 < runs.size() &&
                    runs[k + 1].letter == b.right && runs[k].exp > 0) {
                    out.append(b.left, runs[k].exp - 1);
                    out.append(fresh, 1);
                    runs[k + 1].exp -= 1;
                    ++cnt;
                } else {
                    out.append(runs[k].letter, runs[k].exp);
                }
            }
        }
        if (cnt == 0) continue;
        rule.mid = std::move(out);
        total += cnt * vocc[i];
    }
    GRC_CHECK(g.text_len >= total, "replacement would exceed the text length");
    g.text_len -= total;
    return total;
}

namespace {

void debug_no_crossing(const LevelGrammar& g, Bigram b, const BoundaryInfo& boundary) {
    for (std::uint32_t i = 0; i < g.rules.size(); ++i) {
        const LevelRule& rule = g.rules[i];
        if (rule.null) continue;
        if (b.repeating()) {
            if (i == g.start_rule()) continue;
            GRC_CHECK(boundary.at(i).first_letter() != b.left &&
                          boundary.at(i).last_letter() != b.left,
                      "a block of the target letter still crosses a boundary");
            continue;
        }
        std::optional<Symbol> after_left, before_right;
        if (rule.left) {
            if (!rule.mid.empty()) after_left = rule.mid.first_letter();
            else if (rule.right) after_left = boundary.at(*rule.right).first_letter();
            if (after_left)
                GRC_CHECK(!(boundary.at(*rule.left).last_letter() == b.left &&
                            *after_left == b.right),
                          "target bigram still crosses a left-child boundary");
        }
        if (rule.right) {
            if (!rule.mid.empty()) before_right = rule.mid.last_letter();
            else if (rule.left) before_right = boundary.at(*rule.left).last_letter();
            if (before_right)
                GRC_CHECK(!(*before_right == b.left &&
                            boundary.at(*rule.right).first_letter() == b.right),
                          "target bigram still crosses a right-child boundary");
        }
    }
}

}  // namespace

ScanRecompressor::ScanRecompressor(const Slp& slp, RecompressOptions opt)
    : g_(attach_sentinels(slp)), vocc_(compute_vocc(g_)),
      input_vars_(slp.rules.size()), opt_(opt) {
    if (opt_.debug_verify) debug_text_ = expand_level(g_, false);
}

bool ScanRecompressor::step() {
    BoundaryInfo boundary = compute_boundary_info(g_);
    if (opt_.debug_verify) {
        GRC_CHECK(expand_level(g_, false) == debug_text_, "expansion drifted before level");
        std::vector<std::uint64_t> fresh_vocc = compute_vocc(g_);
        for (std::uint32_t i = 0; i < g_.rules.size(); ++i)
            GRC_CHECK(g_.rules[i].null || fresh_vocc[i] == vocc_[i],
                      "vocc of a live variable changed");
    }

    FreqTable freq = compute_frequencies(g_, vocc_, boundary);
    if (opt_.debug_verify) {
        FreqTable brute = freq_table_text(debug_text_);
        GRC_CHECK(freq == brute, "grammar frequencies disagree with brute force");
    }

    std::optional<Bigram> sel = select_bigram(freq);
    if (!sel) return false;
    const std::uint64_t f = freq[*sel];
    const std::uint64_t gsize = g_.grammar_size();
    const std::uint64_t live = g_.live_rules();
    const std::uint64_t tlen_pre = g_.text_len;

    if (sel->repeating())
        uncross_repeating(g_, sel->left, boundary);
    else
        uncross_nonrepeating(g_, sel->left, sel->right, boundary);

    if (opt_.debug_verify) {
        GRC_CHECK(expand_level(g_, false) == debug_text_, "uncross changed the expansion");
        BoundaryInfo after = compute_boundary_info(g_);
        debug_no_crossing(g_, *sel, after);
    }

    const std::uint64_t count = replace_explicit(g_, *sel, g_.next_letter, vocc_);
    GRC_CHECK(count == f, "weighted replacement count disagrees with the frequency");
    GRC_CHECK(g_.text_len == tlen_pre - f, "length law violated");
    GRC_CHECK(g_.grammar_size() <= g_.text_len + 2 * g_.rules.size(), "size law violated");

    if (opt_.debug_verify) {
        debug_text_ = replace_pair_text(debug_text_, *sel, g_.next_letter);
        GRC_CHECK(expand_level(g_, false) == debug_text_, "replacement changed the expansion");
    }

    cumulative_ += f;
    levels_.push_back({g_.level, *sel, f, gsize, live, tlen_pre - 2, cumulative_, phase_});
    ++g_.next_letter;
    ++g_.level;
    return true;
}

RecompressResult ScanRecompressor::finish() {
    RecompressResult res;
    res.grammar.sigma = g_.sigma;
    res.grammar.pairs.reserve(levels_.size());
    for (const LevelStats& l : levels_)
        res.grammar.pairs.emplace_back(l.bigram.left, l.bigram.right);
    res.grammar.final_seq = expand_level(g_, true);
    res.stats.levels = levels_;
    res.stats.input_vars = input_vars_;
    res.stats.pairs = levels_.size();
    res.stats.final_grammar_size = g_.grammar_size();
    res.stats.final_live_vars = g_.live_rules();
    return res;
}

RecompressResult ScanRecompressor::run(const Slp& slp, RecompressOptions opt) {
    ScanRecompressor engine(slp, opt);
    while (engine.step()) {
    }
    return engine.finish();
}

}  // namespace grc
