#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grc/symbol.hpp"

namespace grc {

/// Output of a RePair run: pairs[i] is the righthand side of the letter
/// with code sigma + i, final_seq is the residual string T_m with the
/// sentinels stripped.
struct RePairGrammar {
    std::uint32_t sigma = 0;
    std::vector<std::pair<Symbol, Symbol>> pairs;
    std::vector<Symbol> final_seq;

    Symbol letter_for_pair(std::size_t i) const {
        return sigma + static_cast<Symbol>(i);
    }

    friend bool operator==(const RePairGrammar&, const RePairGrammar&) = default;
};

/// Substitutes pairs back into the final sequence; the original text.
std::vector<Symbol> expand_repair(const RePairGrammar& g);

}  // namespace grc
