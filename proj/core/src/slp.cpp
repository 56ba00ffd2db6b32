#include "grc/slp.hpp"

#include <algorithm>
#include <unordered_map>

#include "grc/errors.hpp"

namespace grc {

namespace detail {
void check_failed(const char* expr, const char* file, int line, const std::string& msg) {
    throw InternalError(std::string("check failed: ") + expr + " at " + file + ":" +
                        std::to_string(line) + ": " + msg);
}
}  // namespace detail

std::string symbol_name(Symbol s, std::uint32_t sigma) {
    if (s == kHash) return "#";
    if (s == kDollar) return "$";
    if (s < sigma) {
        if (s >= 'a' && s <= 'z') return std::string(1, static_cast<char>(s));
        return "t" + std::to_string(s);
    }
    return "X" + std::to_string(s - sigma + 1);
}

SlpValidation validate_slp(const Slp& slp) {
    SlpValidation v;
    auto fail = [&](std::string msg) {
        v.ok = false;
        v.violations.push_back(std::move(msg));
    };
    if (slp.rules.empty()) {
        fail("no rules: an SLP needs at least one variable");
        return v;
    }
    for (std::size_t i = 0; i < slp.rules.size(); ++i) {
        auto [l, r] = slp.rules[i];
        Symbol self = slp.sigma + static_cast<Symbol>(i);
        for (Symbol child : {l, r}) {
            if (child < slp.sigma) continue;
            if (is_sentinel(child)) {
                fail("sentinel symbol in rule " + std::to_string(i));
            } else if (child >= slp.sigma + slp.rules.size()) {
                fail("out-of-range symbol in rule " + std::to_string(i));
            } else if (child >= self) {
                fail("forward reference at rule " + std::to_string(i));
            }
        }
    }
    if (v.ok && expansion_length(slp) < 2) {
        fail("expansion length below 2");
    }
    return v;
}

std::vector<std::uint64_t> rule_lengths(const Slp& slp) {
    std::vector<std::uint64_t> len(slp.rules.size(), 0);
    for (std::size_t i = 0; i < slp.rules.size(); ++i) {
        auto [l, r] = slp.rules[i];
        std::uint64_t a = slp.is_variable(l) ? len[l - slp.sigma] : 1;
        std::uint64_t b = slp.is_variable(r) ? len[r - slp.sigma] : 1;
        len[i] = a + b;
    }
    return len;
}

std::uint64_t expansion_length(const Slp& slp) {
    if (slp.rules.empty()) return 0;
    return rule_lengths(slp).back();
}

namespace {

template <typename Emit>
void expand_from(const Slp& slp, Symbol root, Emit&& emit) {
    std::vector<Symbol> stack{root};
    while (!stack.empty()) {
        Symbol s = stack.back();
        stack.pop_back();
        if (slp.is_variable(s)) {
            auto [l, r] = slp.rules[s - slp.sigma];
            stack.push_back(r);
            stack.push_back(l);
        } else {
            emit(s);
        }
    }
}

}  // namespace

std::vector<Symbol> expand_slp(const Slp& slp) {
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(expansion_length(slp)));
    expand_from(slp, slp.start(), [&](Symbol s) { out.push_back(s); });
    return out;
}

void expand_slp(const Slp& slp, std::ostream& out) {
    GRC_CHECK(slp.sigma <= 256, "byte expansion needs sigma <= 256");
    expand_from(slp, slp.start(),
                [&](Symbol s) { out.put(static_cast<char>(static_cast<unsigned char>(s))); });
    GRC_CHECK(out.good(), "output sink failure while expanding");
}

std::vector<std::uint64_t> compute_vocc(const Slp& slp) {
    std::vector<std::uint64_t> vocc(slp.rules.size(), 0);
    if (slp.rules.empty()) return vocc;
    vocc.back() = 1;
    for (std::size_t i = slp.rules.size(); i-- > 0;) {
        if (vocc[i] == 0) continue;  // unreachable from the start variable
        auto [l, r] = slp.rules[i];
        if (slp.is_variable(l)) vocc[l - slp.sigma] += vocc[i];
        if (slp.is_variable(r)) vocc[r - slp.sigma] += vocc[i];
    }
    return vocc;
}

Slp build_slp(std::span<const Symbol> text, std::uint32_t sigma) {
    GRC_CHECK(text.size() >= 2, "build_slp needs at least two symbols");
    Slp slp;
    slp.sigma = sigma;
    std::unordered_map<std::uint64_t, Symbol> pair_var;
    std::vector<Symbol> level(text.begin(), text.end());
    std::vector<Symbol> next;
    while (level.size() > 1) {
        next.clear();
        next.reserve(level.size() / 2 + 1);
        std::size_t i = 0;
        for (; i + 1 < level.size(); i += 2) {
            std::uint64_t key = (static_cast<std::uint64_t>(level[i]) << 32) | level[i + 1];
            auto it = pair_var.find(key);
            if (it == pair_var.end()) {
                Symbol var = sigma + static_cast<Symbol>(slp.rules.size());
                slp.rules.emplace_back(level[i], level[i + 1]);
                it = pair_var.emplace(key, var).first;
            }
            next.push_back(it->second);
        }
        if (i < level.size()) next.push_back(level[i]);  // odd leftover
        level.swap(next);
    }
    return slp;
}

Slp build_slp_bytes(std::span<const std::uint8_t> text) {
    std::vector<Symbol> syms(text.begin(), text.end());
    return build_slp(syms, 256);
}

}  // namespace grc
