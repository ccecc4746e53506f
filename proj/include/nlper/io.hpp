#pragma once

#include <string>

#include "nlper/lattice.hpp"

namespace nlper {

// Reads either one "x y" pair per line or an ASCII grid of '#' and '.', rows
// listed top to bottom. The first non-blank character picks the format: a
// digit or sign means pairs, anything else a grid. Throws ParseError.
Polyomino parse_polyomino(const std::string& text);
// Throws ParseError when the file cannot be opened.
Polyomino read_polyomino(const std::string& path);

std::string format_pairs(const Polyomino& p);
// Grid output equals Polyomino::to_string.
void write_polyomino(const std::string& path, const Polyomino& p, bool grid = false);

}  // namespace nlper
