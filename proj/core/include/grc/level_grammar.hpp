#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grc/rlstring.hpp"
#include "grc/slp.hpp"
#include "grc/symbol.hpp"

namespace grc {

/// One rule of a level grammar. The derived string is
///     val(left) . mid . val(right)
/// with absent variables omitted; variables only ever sit at the two ends
/// and mid is run-length encoded. A rule whose variables are gone and whose
/// mid is empty is null (tombstoned, never compacted away).
struct LevelRule {
    std::optional<std::uint32_t> left;   // rule index of the left variable
    std::optional<std::uint32_t> right;  // rule index of the right variable
    RlString mid;
    bool null = false;

    /// rle-size of the rule: run count plus number of present variables.
    std::uint64_t size() const {
        if (null) return 0;
        return mid.run_count() + (left ? 1 : 0) + (right ? 1 : 0);
    }
    bool empty() const { return !left && !right && mid.empty(); }
};

/// The evolving grammar G_h deriving #T_h$. Rules 0..n-1 mirror the input
/// SLP variables, rule n is X_# and rule n+1 is X_$ (the start).
struct LevelGrammar {
    std::uint32_t sigma = 0;
    std::vector<LevelRule> rules;
    std::uint32_t hash_rule = 0;
    std::uint32_t dollar_rule = 0;
    std::uint32_t level = 0;
    std::uint64_t text_len = 0;  // |#T_h$|, sentinels included
    Symbol next_letter = 0;      // code the next introduced letter will get

    std::uint32_t start_rule() const { return dollar_rule; }

    std::uint64_t grammar_size() const {
        std::uint64_t s = 0;
        for (const LevelRule& r : rules) s += r.size();
        return s;
    }
    std::uint64_t live_rules() const {
        std::uint64_t n = 0;
        for (const LevelRule& r : rules) n += r.null ? 0 : 1;
        return n;
    }
};

/// Wraps a valid SLP into G_0: X_# -> # X_n and X_$ -> X_# $ are appended,
/// every bigram rule becomes a LevelRule, and rules unreachable from the
/// start are tombstoned so that every live rule has vocc >= 1.
LevelGrammar attach_sentinels(const Slp& slp);

/// T_h (or #T_h$ when strip_sentinels is false) as a symbol sequence.
std::vector<Symbol> expand_level(const LevelGrammar& g, bool strip_sentinels);

/// Occurrence counts of live variables in the derivation tree of the start.
std::vector<std::uint64_t> compute_vocc(const LevelGrammar& g);

/// Leftmost/rightmost block of val(X) plus the single-block flag, valid for
/// live rules only.
struct BoundaryEntry {
    RlRun lmb;
    RlRun rmb;
    bool single_block = false;
    std::uint64_t length = 0;  // |val(X)|

    Symbol first_letter() const { return lmb.letter; }
    Symbol last_letter() const { return rmb.letter; }
};

class BoundaryInfo {
public:
    explicit BoundaryInfo(std::size_t n) : entries_(n) {}

    BoundaryEntry& at(std::uint32_t rule) { return entries_[rule]; }
    const BoundaryEntry& at(std::uint32_t rule) const { return entries_[rule]; }

private:
    std::vector<BoundaryEntry> entries_;
};

/// One bottom-up pass; O(1) merge work per live rule.
BoundaryInfo compute_boundary_info(const LevelGrammar& g);

}  // namespace grc
