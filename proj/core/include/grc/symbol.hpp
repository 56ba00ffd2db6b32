#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace grc {

/// A symbol is a plain integer code. For an alphabet of size sigma the
/// terminals occupy [0, sigma); letters introduced by pair replacement
/// follow from sigma upward in introduction order. The two sentinels sit
/// at the very top of the code space so that they compare greater than
/// every other symbol and can never collide with a user alphabet.
using Symbol = std::uint32_t;

inline constexpr Symbol kHash = 0xFFFFFFFEu;    // '#', prepended sentinel
inline constexpr Symbol kDollar = 0xFFFFFFFFu;  // '$', appended sentinel

inline constexpr bool is_sentinel(Symbol s) { return s >= kHash; }
inline constexpr bool is_terminal(Symbol s, std::uint32_t sigma) { return s < sigma; }

std::string symbol_name(Symbol s, std::uint32_t sigma);

/// An ordered pair of adjacent symbols. Repeating means both members equal.
struct Bigram {
    Symbol left = 0;
    Symbol right = 0;

    bool repeating() const { return left == right; }
    friend auto operator<=>(const Bigram&, const Bigram&) = default;
};

/// Lexicographic key on (left, right). Engines break frequency ties by
/// taking the bigram with the smallest key, so every engine that shares
/// this function replays the identical selection sequence.
inline constexpr std::uint64_t tie_break_key(Bigram b) {
    return (static_cast<std::uint64_t>(b.left) << 32) | b.right;
}

struct BigramHash {
    std::size_t operator()(const Bigram& b) const {
        return std::hash<std::uint64_t>{}(tie_break_key(b));
    }
};

}  // namespace grc
