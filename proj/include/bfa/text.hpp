#pragma once

#include <string>
#include <string_view>

#include "bfa/anf.hpp"
#include "bfa/truth_table.hpp"
#include "bfa/vbf.hpp"

namespace bfa {

// ANF grammar (whitespace insignificant):
//   expr := term ('+' term)*
//   term := '0' | '1' | var ('*' var)*
//   var  := 'x' DECIMAL          (1-based)
// Example: "x1*x2 + x3 + 1".
//
// declared_n = 0 infers the variable count from the highest index used;
// otherwise indices beyond declared_n are rejected. ParseError carries the
// 1-based column.
Anf parse_anf(std::string_view text, int declared_n = 0);

// Canonical rendering: monomials by descending degree, then ascending index.
std::string format_anf(const Anf& f);

// Truth-table hex format: "n=<k>:" followed by the 2^k bits packed LSB-first
// into bytes, rendered as lowercase hex.
std::string format_tt_hex(const TruthTable& t);
TruthTable parse_tt_hex(std::string_view text);

// vBf file format: line 1 "n=<k>", then k coordinate ANFs, one per line.
VectorialBf parse_vbf(std::string_view text);
std::string format_vbf(const VectorialBf& f);

}  // namespace bfa
