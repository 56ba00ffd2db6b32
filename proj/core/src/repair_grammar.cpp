#include "grc/repair_grammar.hpp"

#include <vector>

#include "grc/errors.hpp"

namespace grc {

std::vector<Symbol> expand_repair(const RePairGrammar& g) {
    std::vector<Symbol> out;
    std::vector<Symbol> stack(g.final_seq.rbegin(), g.final_seq.rend());
    while (!stack.empty()) {
        Symbol s = stack.back();
        stack.pop_back();
        if (s >= g.sigma) {
            std::size_t i = s - g.sigma;
            GRC_CHECK(i < g.pairs.size(), "dangling pair reference");
            stack.push_back(g.pairs[i].second);
            stack.push_back(g.pairs[i].first);
        } else {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace grc
