#include "grc/serialize.hpp"

#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "grc/errors.hpp"

namespace grc {

namespace {

constexpr char kSlpMagic[] = "SLPB1";
constexpr char kRpgMagic[] = "RPGB1";
constexpr char kSlpTextMagic[] = "SLPv1";
constexpr char kRpgTextMagic[] = "RPGv1";

void put_u32(std::ostream& out, std::uint32_t v) {
    std::array<char, 4> b{static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                          static_cast<char>((v >> 16) & 0xff),
                          static_cast<char>((v >> 24) & 0xff)};
    out.write(b.data(), 4);
}

std::uint32_t get_u32(std::istream& in, const char* what) {
    std::array<unsigned char, 4> b;
    in.read(reinterpret_cast<char*>(b.data()), 4);
    if (in.gcount() != 4)
        throw FormatError(FormatErrorKind::Truncated, std::string("truncated payload: ") + what);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void expect_magic(std::istream& in, const char* magic) {
    std::array<char, 5> b{};
    in.read(b.data(), 5);
    if (in.gcount() != 5)
        throw FormatError(FormatErrorKind::Truncated, "file shorter than its magic");
    if (std::memcmp(b.data(), magic, 5) != 0)
        throw FormatError(FormatErrorKind::BadMagic,
                          std::string("bad magic, expected ") + magic);
}

void validate_or_throw(const Slp& slp) {
    SlpValidation v = validate_slp(slp);
    if (!v.ok)
        throw FormatError(FormatErrorKind::Invariant,
                          "invariant violation: " + v.violations.front());
}

void validate_or_throw(const RePairGrammar& g) {
    for (std::size_t i = 0; i < g.pairs.size(); ++i) {
        Symbol limit = g.sigma + static_cast<Symbol>(i);
        if (g.pairs[i].first >= limit || g.pairs[i].second >= limit)
            throw FormatError(FormatErrorKind::Invariant,
                              "invariant violation: pair " + std::to_string(i) +
                                  " references a later symbol");
    }
    Symbol limit = g.sigma + static_cast<Symbol>(g.pairs.size());
    for (Symbol s : g.final_seq)
        if (s >= limit)
            throw FormatError(FormatErrorKind::Invariant,
                              "invariant violation: final sequence symbol out of range");
}

}  // namespace

void write_slp(const Slp& slp, std::ostream& out) {
    out.write(kSlpMagic, 5);
    put_u32(out, slp.sigma);
    put_u32(out, static_cast<std::uint32_t>(slp.rules.size()));
    for (auto [l, r] : slp.rules) {
        put_u32(out, l);
        put_u32(out, r);
    }
    GRC_CHECK(out.good(), "output sink failure while writing SLP");
}

Slp read_slp(std::istream& in) {
    expect_magic(in, kSlpMagic);
    Slp slp;
    slp.sigma = get_u32(in, "sigma");
    std::uint32_t n = get_u32(in, "rule count");
    slp.rules.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        Symbol l = get_u32(in, "rule left");
        Symbol r = get_u32(in, "rule right");
        slp.rules.emplace_back(l, r);
    }
    validate_or_throw(slp);
    return slp;
}

void write_slp_text(const Slp& slp, std::ostream& out) {
    out << kSlpTextMagic << ' ' << slp.sigma << ' ' << slp.rules.size() << '\n';
    for (auto [l, r] : slp.rules) out << l << ' ' << r << '\n';
}

Slp read_slp_text(std::istream& in) {
    std::string magic;
    if (!(in >> magic))
        throw FormatError(FormatErrorKind::Truncated, "empty SLP text file");
    if (magic != kSlpTextMagic)
        throw FormatError(FormatErrorKind::BadMagic,
                          std::string("bad magic, expected ") + kSlpTextMagic);
    Slp slp;
    std::uint32_t n = 0;
    if (!(in >> slp.sigma >> n))
        throw FormatError(FormatErrorKind::Truncated, "truncated SLP text header");
    for (std::uint32_t i = 0; i < n; ++i) {
        Symbol l, r;
        if (!(in >> l >> r))
            throw FormatError(FormatErrorKind::Truncated, "truncated SLP text rules");
        slp.rules.emplace_back(l, r);
    }
    validate_or_throw(slp);
    return slp;
}

void write_repair(const RePairGrammar& g, std::ostream& out) {
    out.write(kRpgMagic, 5);
    put_u32(out, g.sigma);
    put_u32(out, static_cast<std::uint32_t>(g.pairs.size()));
    put_u32(out, static_cast<std::uint32_t>(g.final_seq.size()));
    for (auto [l, r] : g.pairs) {
        put_u32(out, l);
        put_u32(out, r);
    }
    for (Symbol s : g.final_seq) put_u32(out, s);
    GRC_CHECK(out.good(), "output sink failure while writing RePair grammar");
}

RePairGrammar read_repair(std::istream& in) {
    expect_magic(in, kRpgMagic);
    RePairGrammar g;
    g.sigma = get_u32(in, "sigma");
    std::uint32_t m = get_u32(in, "pair count");
    std::uint32_t len = get_u32(in, "final length");
    g.pairs.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        Symbol l = get_u32(in, "pair left");
        Symbol r = get_u32(in, "pair right");
        g.pairs.emplace_back(l, r);
    }
    g.final_seq.reserve(len);
    for (std::uint32_t i = 0; i < len; ++i) g.final_seq.push_back(get_u32(in, "final symbol"));
    validate_or_throw(g);
    return g;
}

void write_repair_text(const RePairGrammar& g, std::ostream& out) {
    out << kRpgTextMagic << ' ' << g.sigma << ' ' << g.pairs.size() << ' '
        << g.final_seq.size() << '\n';
    for (auto [l, r] : g.pairs) out << l << ' ' << r << '\n';
    for (std::size_t i = 0; i < g.final_seq.size(); ++i)
        out << g.final_seq[i] << (i + 1 == g.final_seq.size() ? '\n' : ' ');
    if (g.final_seq.empty()) out << '\n';
}

RePairGrammar read_repair_text(std::istream& in) {
    std::string magic;
    if (!(in >> magic))
        throw FormatError(FormatErrorKind::Truncated, "empty RePair text file");
    if (magic != kRpgTextMagic)
        throw FormatError(FormatErrorKind::BadMagic,
                          std::string("bad magic, expected ") + kRpgTextMagic);
    RePairGrammar g;
    std::uint32_t m = 0, len = 0;
    if (!(in >> g.sigma >> m >> len))
        throw FormatError(FormatErrorKind::Truncated, "truncated RePair text header");
    for (std::uint32_t i = 0; i < m; ++i) {
        Symbol l, r;
        if (!(in >> l >> r))
            throw FormatError(FormatErrorKind::Truncated, "truncated RePair text pairs");
        g.pairs.emplace_back(l, r);
    }
    for (std::uint32_t i = 0; i < len; ++i) {
        Symbol s;
        if (!(in >> s))
            throw FormatError(FormatErrorKind::Truncated, "truncated RePair final sequence");
        g.final_seq.push_back(s);
    }
    validate_or_throw(g);
    return g;
}

FileKind sniff_kind(std::istream& in) {
    std::array<char, 5> b{};
    in.read(b.data(), 5);
    std::streamsize got = in.gcount();
    in.clear();
    in.seekg(0);
    if (got == 5) {
        if (std::memcmp(b.data(), kSlpMagic, 5) == 0) return FileKind::SlpBinary;
        if (std::memcmp(b.data(), kRpgMagic, 5) == 0) return FileKind::RpgBinary;
        if (std::memcmp(b.data(), kSlpTextMagic, 5) == 0) return FileKind::SlpText;
        if (std::memcmp(b.data(), kRpgTextMagic, 5) == 0) return FileKind::RpgText;
    }
    return FileKind::Raw;
}

}  // namespace grc
