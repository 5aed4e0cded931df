#pragma once

#include "stip/solver.hpp"

namespace stip {

enum class UnboundedVerdict { ForcingSideWins, NotWonWithinCap };

struct UnboundedResult {
    UnboundedVerdict verdict = UnboundedVerdict::NotWonWithinCap;
    bool truncated = false;  // exploration stopped at the state cap
    long long states = 0;
    long long elapsed_ms = 0;

    bool forcing_side_wins() const { return verdict == UnboundedVerdict::ForcingSideWins; }
};

// Unbounded forced-win question on the reachable state graph (states are
// positions modulo move counters; edges are playable moves, so reflex
// obligations shape the graph). Terminal wins: the forcing side checkmated
// for self/reflex/semi-reflex, the forced side checkmated for direct.
// Backward-induction attractor; cycles count as draws. Sound but incomplete
// when the cap truncates exploration: unexpanded states are never wins.
UnboundedResult solve_unbounded(const chess::Position& p, Kind kind, chess::Color forcing_side,
                                const SearchOptions& opts = {});

}  // namespace stip
