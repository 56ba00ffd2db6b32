#include "grc/freq.hpp"

#include "grc/errors.hpp"

namespace grc {

std::optional<Bigram> select_bigram(const FreqTable& table) {
    std::optional<Bigram> best;
    std::uint64_t best_freq = 1;  // anything at or below 1 never qualifies
    for (const auto& [bigram, freq] : table) {
        if (freq < 2) continue;
        if (freq > best_freq ||
            (freq == best_freq && best && tie_break_key(bigram) < tie_break_key(*best))) {
            best = bigram;
            best_freq = freq;
        }
    }
    return best;
}

void FreqQueue::add(Bigram b, std::int64_t delta) {
    if (delta == 0) return;
    auto it = freq_.find(b);
    std::uint64_t old = it == freq_.end() ? 0 : it->second;
    if (old != 0) {
        auto bucket = buckets_.find(old);
        bucket->second.erase(b);
        if (bucket->second.empty()) buckets_.erase(bucket);
    }
    GRC_CHECK(delta > 0 || old >= static_cast<std::uint64_t>(-delta),
              "frequency would go negative");
    std::uint64_t now = old + delta;
    if (now == 0) {
        if (it != freq_.end()) freq_.erase(it);
    } else {
        freq_[b] = now;
        buckets_[now].insert(b);
    }
}

std::optional<std::pair<Bigram, std::uint64_t>> FreqQueue::max() const {
    if (buckets_.empty()) return std::nullopt;
    const auto& [freq, set] = *buckets_.rbegin();
    return std::make_pair(*set.begin(), freq);
}

std::optional<Bigram> FreqQueue::select() const {
    auto top = max();
    if (!top || top->second < 2) return std::nullopt;
    return top->first;
}

}  // namespace grc
