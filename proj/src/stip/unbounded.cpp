#include "stip/unbounded.hpp"

#include <chrono>
#include <deque>
#include <unordered_map>
#include <vector>

namespace stip {

using namespace chess;

UnboundedResult solve_unbounded(const Position& p, Kind kind, Color forcing_side,
                                const SearchOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Stipulation stip{kind, 1, forcing_side};

    struct Node {
        Position pos;
        std::vector<int> preds;
        int succ_count = -1;  // -1 until expanded
        bool terminal_win = false;
        bool win = false;
    };

    std::vector<Node> nodes;
    std::unordered_map<std::string, int> ids;
    std::deque<int> frontier;

    auto intern = [&](const Position& pos) {
        auto [it, inserted] = ids.try_emplace(pos.state_key(), static_cast<int>(nodes.size()));
        if (inserted) {
            nodes.push_back(Node{pos, {}, -1, false, false});
            frontier.push_back(it->second);
        }
        return it->second;
    };

    UnboundedResult result;
    intern(p);
    long long expanded = 0;
    while (!frontier.empty()) {
        if (expanded >= opts.node_cap) {
            result.truncated = true;
            break;
        }
        int id = frontier.front();
        frontier.pop_front();
        expanded++;
        Position pos = nodes[id].pos;  // copy: intern() may reallocate nodes
        auto moves = playable_moves(pos, stip);
        nodes[id].succ_count = static_cast<int>(moves.size());
        if (moves.empty()) {
            bool mate = pos.is_checkmate();
            Color stuck = pos.side_to_move();
            if (kind == Kind::Direct)
                nodes[id].terminal_win = mate && stuck == opposite(forcing_side);
            else
                nodes[id].terminal_win = mate && stuck == forcing_side;
            continue;
        }
        for (const Move& m : moves) {
            int succ = intern(pos.apply_unchecked(m));
            nodes[succ].preds.push_back(id);
        }
    }

    // Attractor for the forcing side: terminal wins seed the set; a node with
    // the forcing side on move joins when one successor is in; a forced-side
    // node joins when all its successors are (counted down). Unexpanded nodes
    // never join, which keeps truncated results sound.
    std::deque<int> queue;
    for (std::size_t i = 0; i < nodes.size(); i++) {
        if (nodes[i].terminal_win) {
            nodes[i].win = true;
            queue.push_back(static_cast<int>(i));
        }
    }
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        for (int pred : nodes[id].preds) {
            Node& pn = nodes[pred];
            if (pn.win || pn.succ_count < 0) continue;
            if (pn.pos.side_to_move() == forcing_side) {
                pn.win = true;
                queue.push_back(pred);
            } else if (--pn.succ_count == 0) {
                pn.win = true;
                queue.push_back(pred);
            }
        }
    }

    result.verdict = nodes[0].win ? UnboundedVerdict::ForcingSideWins
                                  : UnboundedVerdict::NotWonWithinCap;
    result.states = static_cast<long long>(nodes.size());
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return result;
}

}  // namespace stip
