#pragma once

// Independent move generator used to cross-check the engine. Re-derived from
// the rules on its own char-board representation; shares no code with the
// production generator beyond the public Position accessors used to load it.

#include <cstdint>
#include <vector>

#include "core/position.hpp"

namespace oracle {

struct OBoard {
    int files = 0;
    int ranks = 0;
    std::vector<char> cells;  // 'KQRBNP' white, 'kqrbnp' black, '.' empty; row-major from rank 1
    bool white_to_move = true;
    int ep_file = 0;  // 0 = none
    int ep_rank = 0;
};

struct OMove {
    int from_file, from_rank, to_file, to_rank;
    char promo;  // 0 or QRBN
    bool en_passant;

    friend auto operator<=>(const OMove&, const OMove&) = default;
};

OBoard load(const chess::Position& p);
std::vector<OMove> legal_moves(const OBoard& b);
OBoard apply(const OBoard& b, const OMove& m);
std::uint64_t perft(const OBoard& b, int depth);

// Compare the production generator against this one, returning true when the
// full move sets agree (promotions included).
bool same_move_set(const chess::Position& p);

}  // namespace oracle
