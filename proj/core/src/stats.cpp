#include "grc/stats.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace grc {

std::uint64_t RunStats::max_grammar_size() const {
    std::uint64_t m = final_grammar_size;
    for (const LevelStats& s : levels) m = std::max(m, s.grammar_size);
    return m;
}

std::uint64_t RunStats::sum_grammar_size() const {
    std::uint64_t sum = final_grammar_size;
    for (const LevelStats& s : levels) sum += s.grammar_size;
    return sum;
}

std::uint64_t RunStats::sum_live_vars() const {
    std::uint64_t sum = final_live_vars;
    for (const LevelStats& s : levels) sum += s.live_vars;
    return sum;
}

std::uint64_t RunStats::total_replacements() const {
    std::uint64_t r = 0;
    for (const LevelStats& s : levels) r += s.freq;
    return r;
}

std::string stats_line(const LevelStats& s) {
    std::ostringstream os;
    os << "level=" << s.level << " bigramLeft=" << s.bigram.left
       << " bigramRight=" << s.bigram.right << " freq=" << s.freq
       << " grammarSize=" << s.grammar_size << " liveVars=" << s.live_vars
       << " textLen=" << s.text_len << " cumulativeR=" << s.cumulative_replacements
       << " phase=" << s.phase;
    return os.str();
}

std::string aggregate_line(const RunStats& s) {
    std::ostringstream os;
    os << "n=" << s.input_vars << " m=" << s.pairs << " Max=" << s.max_grammar_size()
       << " SumG=" << s.sum_grammar_size() << " SumNh=" << s.sum_live_vars()
       << " R=" << s.total_replacements() << " finalG=" << s.final_grammar_size
       << " finalNh=" << s.final_live_vars;
    return os.str();
}

void write_stats(const RunStats& s, std::ostream& out) {
    for (const LevelStats& l : s.levels) out << stats_line(l) << '\n';
    out << aggregate_line(s) << '\n';
}

}  // namespace grc
