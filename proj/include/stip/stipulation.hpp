#pragma once

#include <string>
#include <vector>

#include "core/movetext.hpp"
#include "core/position.hpp"

namespace stip {

enum class Kind { Direct, Self, Reflex, SemiReflex };

struct Stipulation {
    Kind kind = Kind::Direct;
    int n = 1;  // horizon in forced-side replies ("on or before move n")
    chess::Color forcing_side = chess::Color::White;
};

// Text forms: `#n`, `s#n`, `r#n`, `semi-r#n` (case-insensitive).
Stipulation parse_stipulation(const std::string& text);
std::string format_stipulation(const Stipulation& s);
std::string kind_name(Kind k);

// The reflex obligation: when it binds the side to move and that side has
// mating moves, only the mating moves are playable. Reflex binds both sides;
// semi-reflex binds only the side opposite the forcing side.
bool obligation_applies(const Stipulation& s, chess::Color mover);
std::vector<chess::Move> mating_moves(const chess::Position& p);
std::vector<chess::Move> playable_moves(const chess::Position& p, const Stipulation& s);

}  // namespace stip
