#pragma once

#include <iosfwd>
#include <string>

#include "grc/repair_grammar.hpp"
#include "grc/slp.hpp"

namespace grc {

// Binary layouts, all integers 32-bit little-endian:
//   .slp  "SLPB1"  sigma  n  2n child codes (rule i at entries 2i, 2i+1)
//   .rpg  "RPGB1"  sigma  m  L  2m pair codes  L final codes
// Terminals are codes below sigma, the variable / introduced letter i is
// encoded as sigma + i. A line-oriented text twin of each format exists for
// fixtures ("SLPv1" / "RPGv1" header line, one rule per line).

void write_slp(const Slp& slp, std::ostream& out);
Slp read_slp(std::istream& in);  // throws FormatError

void write_slp_text(const Slp& slp, std::ostream& out);
Slp read_slp_text(std::istream& in);

void write_repair(const RePairGrammar& g, std::ostream& out);
RePairGrammar read_repair(std::istream& in);

void write_repair_text(const RePairGrammar& g, std::ostream& out);
RePairGrammar read_repair_text(std::istream& in);

enum class FileKind { SlpBinary, SlpText, RpgBinary, RpgText, Raw };

/// Decides what a file holds from its first bytes.
FileKind sniff_kind(std::istream& in);

}  // namespace grc
