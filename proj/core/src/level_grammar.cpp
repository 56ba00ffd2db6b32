#include "grc/level_grammar.hpp"

#include "grc/errors.hpp"

namespace grc {

LevelGrammar attach_sentinels(const Slp& slp) {
    SlpValidation v = validate_slp(slp);
    GRC_CHECK(v.ok, v.violations.empty() ? std::string("invalid SLP")
                                         : "invalid SLP: " + v.violations.front());

    LevelGrammar g;
    g.sigma = slp.sigma;
    g.level = 0;
    g.next_letter = slp.sigma;
    const std::uint32_t n = static_cast<std::uint32_t>(slp.rules.size());
    g.rules.resize(n + 2);

    for (std::uint32_t i = 0; i < n; ++i) {
        auto [l, r] = slp.rules[i];
        LevelRule& rule = g.rules[i];
        if (slp.is_variable(l)) {
            rule.left = l - slp.sigma;
        } else {
            rule.mid.append(l, 1);
        }
        if (slp.is_variable(r)) {
            rule.right = r - slp.sigma;
        } else {
            rule.mid.append(r, 1);
        }
    }

    g.hash_rule = n;
    g.dollar_rule = n + 1;
    LevelRule& hash = g.rules[g.hash_rule];
    hash.mid.append(kHash, 1);
    hash.right = n - 1;  // start variable of the input SLP
    LevelRule& dollar = g.rules[g.dollar_rule];
    dollar.left = g.hash_rule;
    dollar.mid.append(kDollar, 1);

    g.text_len = expansion_length(slp) + 2;

    // Tombstone rules the start cannot reach; they would otherwise carry
    // weight zero through every frequency count and break the size law.
    std::vector<std::uint64_t> vocc = compute_vocc(g);
    for (std::uint32_t i = 0; i < n; ++i)
        if (vocc[i] == 0) g.rules[i].null = true;
    return g;
}

std::vector<Symbol> expand_level(const LevelGrammar& g, bool strip_sentinels) {
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(g.text_len));

    // Explicit stack over (rule, stage): stage 0 expands left + mid, stage 1
    // expands right.
    struct Frame {
        std::uint32_t rule;
        int stage;
    };
    std::vector<Frame> stack{{g.start_rule(), 0}};
    while (!stack.empty()) {
        auto [ri, stage] = stack.back();
        stack.pop_back();
        const LevelRule& rule = g.rules[ri];
        GRC_CHECK(!rule.null, "expansion reached a null rule");
        if (stage == 0) {
            stack.push_back({ri, 1});
            if (rule.left) {
                stack.push_back({*rule.left, 0});
            }
        } else {
            for (const RlRun& r : rule.mid.runs())
                out.insert(out.end(), static_cast<std::size_t>(r.exp), r.letter);
            if (rule.right) stack.push_back({*rule.right, 0});
        }
    }

    GRC_CHECK(out.size() == g.text_len, "expansion length disagrees with text_len");
    if (strip_sentinels) {
        GRC_CHECK(out.front() == kHash && out.back() == kDollar,
                  "sentinels missing from expansion");
        out.erase(out.begin());
        out.pop_back();
    }
    return out;
}

std::vector<std::uint64_t> compute_vocc(const LevelGrammar& g) {
    std::vector<std::uint64_t> vocc(g.rules.size(), 0);
    vocc[g.start_rule()] = 1;
    for (std::size_t i = g.rules.size(); i-- > 0;) {
        const LevelRule& rule = g.rules[i];
        if (rule.null || vocc[i] == 0) continue;
        if (rule.left) vocc[*rule.left] += vocc[i];
        if (rule.right) vocc[*rule.right] += vocc[i];
    }
    return vocc;
}

BoundaryInfo compute_boundary_info(const LevelGrammar& g) {
    BoundaryInfo info(g.rules.size());
    for (std::uint32_t i = 0; i < g.rules.size(); ++i) {
        const LevelRule& rule = g.rules[i];
        if (rule.null) continue;
        GRC_CHECK(!rule.empty(), "live rule with empty body");

        BoundaryEntry e;
        e.length = 0;
        if (rule.left) e.length += info.at(*rule.left).length;
        e.length += rule.mid.letter_count();
        if (rule.right) e.length += info.at(*rule.right).length;

        // Leftmost block: start from the left child's lmb (or the first mid
        // run); extend rightward only while the pieces crossed so far are
        // single blocks of the same letter.
        auto extend = [](RlRun& block, bool& open, const RlRun& next, bool next_is_whole) {
            if (!open) return;
            if (next.letter == block.letter) {
                block.exp += next.exp;
                open = next_is_whole;
            } else {
                open = false;
            }
        };

        bool have = false;
        bool open = true;  // block still touches the right edge of what we consumed
        RlRun lmb{};
        if (rule.left) {
            const BoundaryEntry& le = info.at(*rule.left);
            lmb = le.lmb;
            open = le.single_block;
            have = true;
        }
        for (std::size_t k = 0; k < rule.mid.run_count(); ++k) {
            const RlRun& run = rule.mid.runs()[k];
            if (!have) {
                lmb = run;
                open = true;
                have = true;
            } else {
                extend(lmb, open, run, true);
            }
            if (!open) break;
        }
        if (open && rule.right) {
            const BoundaryEntry& re = info.at(*rule.right);
            if (!have) {
                lmb = re.lmb;
                open = re.single_block;
                have = true;
            } else if (re.lmb.letter == lmb.letter) {
                lmb.exp += re.lmb.exp;
                open = re.single_block;
            } else {
                open = false;
            }
        }
        e.lmb = lmb;

        // Rightmost block, mirrored.
        bool rhave = false;
        bool ropen = true;
        RlRun rmb{};
        if (rule.right) {
            const BoundaryEntry& re = info.at(*rule.right);
            rmb = re.rmb;
            ropen = re.single_block;
            rhave = true;
        }
        for (std::size_t k = rule.mid.run_count(); k-- > 0;) {
            const RlRun& run = rule.mid.runs()[k];
            if (!rhave) {
                rmb = run;
                ropen = true;
                rhave = true;
            } else {
                extend(rmb, ropen, run, true);
            }
            if (!ropen) break;
        }
        if (ropen && rule.left) {
            const BoundaryEntry& le = info.at(*rule.left);
            if (!rhave) {
                rmb = le.rmb;
                rhave = true;
            } else if (le.rmb.letter == rmb.letter) {
                rmb.exp += le.rmb.exp;
            }
        }
        e.rmb = rmb;
        e.single_block = (e.lmb.exp == e.length);
        if (e.single_block) e.rmb = e.lmb;
        info.at(i) = e;
    }
    return info;
}

}  // namespace grc
