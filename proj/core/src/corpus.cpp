#include "grc/corpus.hpp"

#include <bit>
#include <random>

#include "grc/errors.hpp"

namespace grc {

std::vector<std::uint8_t> gen_fib(unsigned k) {
    GRC_CHECK(k >= 1 && k <= 40, "fib parameter out of range [1, 40]");
    std::vector<std::uint8_t> prev{'b'};  // F(1)
    if (k == 1) return prev;
    std::vector<std::uint8_t> cur{'a'};  // F(2)
    for (unsigned i = 3; i <= k; ++i) {
        std::vector<std::uint8_t> next;
        next.reserve(cur.size() + prev.size());
        next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::uint8_t> gen_thue_morse(unsigned k) {
    GRC_CHECK(k >= 1 && k <= 24, "thue-morse parameter out of range [1, 24]");
    std::size_t len = std::size_t{1} << (k - 1);
    std::vector<std::uint8_t> out(len);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = (std::popcount(i) & 1) ? 'b' : 'a';
    return out;
}

std::vector<std::uint8_t> gen_random(std::size_t length, unsigned sigma,
                                     std::uint64_t seed) {
    GRC_CHECK(sigma >= 1 && sigma <= 26, "random sigma out of range [1, 26]");
    GRC_CHECK(length <= (std::size_t{1} << 28), "random length out of range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> dist(0, sigma - 1);
    std::vector<std::uint8_t> out(length);
    for (auto& b : out) b = static_cast<std::uint8_t>('a' + dist(rng));
    return out;
}

std::vector<std::uint8_t> gen_unary(std::size_t n) {
    GRC_CHECK(n <= (std::size_t{1} << 28), "unary length out of range");
    return std::vector<std::uint8_t>(n, 'a');
}

std::vector<std::uint8_t> gen_copy_mutate(unsigned copies, unsigned sigma,
                                          std::uint64_t seed) {
    GRC_CHECK(copies >= 1 && copies <= 100000, "copies out of range [1, 100000]");
    constexpr std::size_t kBaseLen = 4096;
    constexpr double kMutationRate = 0.001;
    std::vector<std::uint8_t> base = gen_random(kBaseLen, sigma, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<unsigned> letter(0, sigma - 1);
    std::vector<std::uint8_t> out;
    out.reserve(kBaseLen * copies);
    for (unsigned c = 0; c < copies; ++c) {
        std::size_t start = out.size();
        out.insert(out.end(), base.begin(), base.end());
        if (c == 0) continue;  // keep the first copy pristine
        for (std::size_t i = start; i < out.size(); ++i)
            if (coin(rng) < kMutationRate)
                out[i] = static_cast<std::uint8_t>('a' + letter(rng));
    }
    return out;
}

}  // namespace grc
