#pragma once

#include <cstdint>
#include <vector>

namespace grc {

// Deterministic generators for small repetitive test corpora. All of them
// emit lowercase ASCII bytes.

/// Fibonacci word: F(1) = "b", F(2) = "a", F(k) = F(k-1) F(k-2).
std::vector<std::uint8_t> gen_fib(unsigned k);

/// Prefix of the Thue-Morse word of length 2^(k-1).
std::vector<std::uint8_t> gen_thue_morse(unsigned k);

/// Uniform random string over the first sigma lowercase letters.
std::vector<std::uint8_t> gen_random(std::size_t length, unsigned sigma,
                                     std::uint64_t seed);

/// 'a' repeated n times.
std::vector<std::uint8_t> gen_unary(std::size_t n);

/// `copies` concatenated copies of one random base block, each copy with a
/// sprinkle of point mutations. Highly repetitive by construction.
std::vector<std::uint8_t> gen_copy_mutate(unsigned copies, unsigned sigma,
                                          std::uint64_t seed);

}  // namespace grc
