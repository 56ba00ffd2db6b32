#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "grc/symbol.hpp"

namespace grc {

/// Exact non-overlapping frequencies of bigrams, keyed by bigram.
using FreqTable = std::unordered_map<Bigram, std::uint64_t, BigramHash>;

/// The bigram every engine would pick next: maximal frequency, ties broken
/// by the smallest (left, right) pair; none when the maximum is below 2.
std::optional<Bigram> select_bigram(const FreqTable& table);

/// Max-priority structure over bigram frequencies supporting deltas of
/// arbitrary magnitude. Buckets are kept in an ordered dictionary keyed by
/// frequency and hold lexicographically ordered bigram sets, so extraction
/// applies the shared tie-break directly. The interface is small on purpose;
/// a predecessor structure with faster asymptotics could sit behind it.
class FreqQueue {
public:
    void add(Bigram b, std::int64_t delta);

    std::uint64_t freq(Bigram b) const {
        auto it = freq_.find(b);
        return it == freq_.end() ? 0 : it->second;
    }

    /// Largest-frequency bigram (tie-broken), or nothing if empty.
    std::optional<std::pair<Bigram, std::uint64_t>> max() const;

    /// Same as max() but only when the frequency is at least 2.
    std::optional<Bigram> select() const;

    FreqTable snapshot() const { return FreqTable(freq_.begin(), freq_.end()); }

    std::size_t distinct() const { return freq_.size(); }

private:
    std::unordered_map<Bigram, std::uint64_t, BigramHash> freq_;
    std::map<std::uint64_t, std::set<Bigram>> buckets_;
};

}  // namespace grc
