#pragma once

#include <string>
#include <vector>

#include "grc/slp.hpp"
#include "grc/symbol.hpp"

namespace grc::test {

inline std::vector<Symbol> syms(const std::string& s) {
    return std::vector<Symbol>(s.begin(), s.end());
}

inline std::vector<std::uint8_t> bytes(const std::string& s) {
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

inline std::string to_string(const std::vector<Symbol>& v) {
    std::string s;
    for (Symbol x : v) s += static_cast<char>(x);
    return s;
}

inline std::vector<Symbol> byte_syms(const std::vector<std::uint8_t>& v) {
    return std::vector<Symbol>(v.begin(), v.end());
}

/// Builds a byte-alphabet SLP; rule entries use chars for terminals and
/// var(i) for variables.
struct SlpBuilder {
    Slp slp;
    explicit SlpBuilder(std::uint32_t sigma = 256) { slp.sigma = sigma; }
    Symbol var(std::size_t i) const { return slp.sigma + static_cast<Symbol>(i); }
    SlpBuilder& rule(Symbol l, Symbol r) {
        slp.rules.emplace_back(l, r);
        return *this;
    }
};

}  // namespace grc::test
