#pragma once

#include <cstdint>
#include <vector>

#include "grc/errors.hpp"
#include "grc/symbol.hpp"

namespace grc {

/// One maximal run c^d inside a run-length encoded string.
struct RlRun {
    Symbol letter = 0;
    std::uint64_t exp = 0;

    friend bool operator==(const RlRun&, const RlRun&) = default;
};

/// Run-length encoded symbol string. Canonical form is maintained by every
/// mutator: adjacent runs always carry distinct letters and exponents are
/// at least one.
class RlString {
public:
    RlString() = default;

    bool empty() const { return runs_.empty(); }
    std::size_t run_count() const { return runs_.size(); }
    std::uint64_t letter_count() const { return letters_; }

    const std::vector<RlRun>& runs() const { return runs_; }
    const RlRun& front() const { return runs_.front(); }
    const RlRun& back() const { return runs_.back(); }

    Symbol first_letter() const { return runs_.front().letter; }
    Symbol last_letter() const { return runs_.back().letter; }

    void clear() {
        runs_.clear();
        letters_ = 0;
    }

    /// Appends c^exp, merging with the last run when the letters match.
    void append(Symbol letter, std::uint64_t exp) {
        if (exp == 0) return;
        if (!runs_.empty() && runs_.back().letter == letter) {
            runs_.back().exp += exp;
        } else {
            runs_.push_back({letter, exp});
        }
        letters_ += exp;
    }

    void append(const RlRun& run) { append(run.letter, run.exp); }

    void append(const RlString& other) {
        for (const RlRun& r : other.runs_) append(r);
    }

    /// Prepends c^exp, merging with the first run when the letters match.
    void prepend(Symbol letter, std::uint64_t exp) {
        if (exp == 0) return;
        if (!runs_.empty() && runs_.front().letter == letter) {
            runs_.front().exp += exp;
        } else {
            runs_.insert(runs_.begin(), {letter, exp});
        }
        letters_ += exp;
    }

    /// Removes one letter from the front. Precondition: non-empty.
    void pop_front_letter() {
        GRC_CHECK(!runs_.empty(), "pop_front_letter on empty RlString");
        if (--runs_.front().exp == 0) runs_.erase(runs_.begin());
        --letters_;
    }

    /// Removes one letter from the back. Precondition: non-empty.
    void pop_back_letter() {
        GRC_CHECK(!runs_.empty(), "pop_back_letter on empty RlString");
        if (--runs_.back().exp == 0) runs_.pop_back();
        --letters_;
    }

    /// Removes the whole leading run and returns it.
    RlRun strip_front_run() {
        GRC_CHECK(!runs_.empty(), "strip_front_run on empty RlString");
        RlRun r = runs_.front();
        runs_.erase(runs_.begin());
        letters_ -= r.exp;
        return r;
    }

    /// Removes the whole trailing run and returns it.
    RlRun strip_back_run() {
        GRC_CHECK(!runs_.empty(), "strip_back_run on empty RlString");
        RlRun r = runs_.back();
        runs_.pop_back();
        letters_ -= r.exp;
        return r;
    }

    /// Re-establishes canonical form after external edits to a run vector.
    static RlString from_runs(const std::vector<RlRun>& raw) {
        RlString s;
        for (const RlRun& r : raw) s.append(r);
        return s;
    }

    std::vector<Symbol> expand() const {
        std::vector<Symbol> out;
        out.reserve(static_cast<std::size_t>(letters_));
        for (const RlRun& r : runs_)
            out.insert(out.end(), static_cast<std::size_t>(r.exp), r.letter);
        return out;
    }

    bool canonical() const {
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            if (runs_[i].exp == 0) return false;
            if (i + 1 < runs_.size() && runs_[i].letter == runs_[i + 1].letter) return false;
        }
        return true;
    }

    friend bool operator==(const RlString&, const RlString&) = default;

private:
    std::vector<RlRun> runs_;
    std::uint64_t letters_ = 0;
};

}  // namespace grc
