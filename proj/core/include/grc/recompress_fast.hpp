#pragma once

#include <cstdint>
#include <memory>

#include "grc/recompress_scan.hpp"

namespace grc {

/// Occurrence-indexed recompression engine: rule strings live in doubly
/// linked item lists (variable occurrences and runs), every explicit bigram
/// site is indexed, and a max queue holds the weighted frequencies. Bigram
/// mass that crosses child boundaries cannot be maintained under
/// replacement, so it is carried by per-rule junction records that are
/// recollected once per level from fresh boundary information; everything
/// interior is updated in place by each splice. At every selection point
/// the queue equals the exact frequency table of T_h.
class FastRecompressor {
public:
    FastRecompressor(const Slp& slp, RecompressOptions opt = {});
    ~FastRecompressor();

    FastRecompressor(FastRecompressor&&) noexcept;
    FastRecompressor& operator=(FastRecompressor&&) noexcept;

    /// Runs one level: recollect, select, uncross, replace. False once no
    /// bigram reaches frequency 2.
    bool step();

    RecompressResult finish();

    std::uint64_t text_len() const;  // |#T_h$|

    /// Queue/index mutations posted by the last recollect_level call and in
    /// total; the recollect share is asserted to stay within a fixed
    /// multiple of the live-variable count.
    std::uint64_t last_recollect_mutations() const;
    std::uint64_t total_mutations() const;

    static RecompressResult run(const Slp& slp, RecompressOptions opt = {});

    int phase = 1;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace grc
