#pragma once

#include <string>

#include "core/position.hpp"

namespace chess {

// xFEN: `<F>x<R> PLACEMENT SIDE CASTLE EP HALF FULL`. Plain 6-field FEN
// (no size prefix) means 8x8. CASTLE must be "-": these boards have no
// castling. Ranks run top (rank R) to bottom; empty runs may be multi-digit.
Position parse_xfen(const std::string& text);

// Canonical form always carries the size prefix, including for 8x8.
std::string serialize_xfen(const Position& p);

}  // namespace chess
