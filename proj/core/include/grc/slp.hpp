#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grc/symbol.hpp"

namespace grc {

/// A straight-line program: every rule derives exactly a bigram, variables
/// are listed in reversed topological order and the last one is the start.
/// Rule i defines the variable with symbol code sigma + i; a child code
/// below sigma is a terminal, anything else refers to an earlier rule.
struct Slp {
    std::uint32_t sigma = 0;
    std::vector<std::pair<Symbol, Symbol>> rules;

    std::size_t variable_count() const { return rules.size(); }
    Symbol start() const { return sigma + static_cast<Symbol>(rules.size()) - 1; }
    bool is_variable(Symbol s) const {
        return s >= sigma && s < sigma + rules.size();
    }

    friend bool operator==(const Slp&, const Slp&) = default;
};

struct SlpValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks topological order, child ranges and expansion length >= 2.
/// Diagnostic; never throws.
SlpValidation validate_slp(const Slp& slp);

/// Lengths of val(X) for every variable, by one bottom-up pass.
std::vector<std::uint64_t> rule_lengths(const Slp& slp);

std::uint64_t expansion_length(const Slp& slp);

/// val(start) as a symbol vector.
std::vector<Symbol> expand_slp(const Slp& slp);

/// Streams val(start) as raw bytes; requires sigma <= 256. Working state is
/// one stack bounded by the derivation depth.
void expand_slp(const Slp& slp, std::ostream& out);

/// Number of derivation-tree nodes labeled with each variable, computed
/// top-down over the rules in reverse order, vocc(start) = 1.
std::vector<std::uint64_t> compute_vocc(const Slp& slp);

/// Builds an SLP for `text` by level-wise pairing: adjacent symbols are
/// paired left to right, one variable is reused per distinct pair, an odd
/// trailing symbol is carried to the next level. Requires |text| >= 2.
Slp build_slp(std::span<const Symbol> text, std::uint32_t sigma);

Slp build_slp_bytes(std::span<const std::uint8_t> text);

}  // namespace grc
