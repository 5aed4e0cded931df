#pragma once

#include <random>
#include <vector>

#include "core/movetext.hpp"
#include "core/position.hpp"
#include "core/xfen.hpp"

namespace fixtures {

// Composed problems carry no castling rights, so the castle field is "-".
inline const char* kInitial = "8x8 rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w - - 0 1";
inline const char* kPauly = "8x8 KB3N2/P1P1p1P1/5P1k/4P2p/7P/8/6B1/7b w - - 0 1";
inline const char* kBurbach = "8x8 1R4B1/5r2/5P1Q/p5r1/P7/KN6/1p1P1p1P/1k2b2R w - - 0 1";
inline const char* kBareKings = "8x8 7k/8/8/8/8/8/8/K7 w - - 0 1";

inline chess::Position pos(const char* xfen) { return chess::parse_xfen(xfen); }

inline chess::Position play(chess::Position p, std::initializer_list<const char*> moves) {
    for (const char* text : moves) p = p.apply(chess::parse_move(p, text));
    return p;
}

// Positions sampled from random playouts of the standard game.
inline std::vector<chess::Position> random_playout_positions(unsigned seed, int count,
                                                             int max_plies = 40) {
    std::mt19937 rng(seed);
    std::vector<chess::Position> out;
    while (static_cast<int>(out.size()) < count) {
        chess::Position p = pos(kInitial);
        int plies = std::uniform_int_distribution<int>(1, max_plies)(rng);
        for (int i = 0; i < plies; i++) {
            auto moves = p.legal_moves();
            if (moves.empty()) break;
            p = p.apply_unchecked(
                moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
            if (static_cast<int>(out.size()) < count && i % 7 == 3) out.push_back(p);
        }
        out.push_back(p);
    }
    while (out.size() > static_cast<std::size_t>(count)) out.pop_back();
    return out;
}

}  // namespace fixtures
