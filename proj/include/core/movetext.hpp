#pragma once

#include <string>

#include "core/position.hpp"

namespace chess {

// Canonical move text: `<PieceLetter><from><'-'|'x'><to>[=<QRBN>][+|#]`,
// e.g. "Qa5-c3+", "Pf8xe7#". The marker comes from the position after the move.
std::string format_move(const Position& before, const Move& m);
std::string format_move_bare(const Position& before, const Move& m);  // no +/# marker

// Accepts the canonical form plus common shorthand ("fxe7#", "d3", "Na1",
// "c8=N"); the move is resolved against the legal moves of `p`.
// Throws ParseError when nothing (or more than one move) matches.
Move parse_move(const Position& p, const std::string& text);

}  // namespace chess
