#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/types.hpp"

namespace chess {

// Loose piece arrangement used while assembling positions (gadget merges,
// harnesses, tests). Carries no invariants; finalize() validates everything.
struct BoardSketch {
    BoardSize size;
    std::map<Square, Piece> placement;
    Color side_to_move = Color::White;
    std::optional<Square> ep_target;
    int halfmove_clock = 0;
    int fullmove_number = 1;

    void put(Square s, Piece p);  // throws ValidationError on collision
};

class Position {
public:
    // Validates: board bounds, exactly one king per color, ep consistency,
    // side not to move never in check. Pawns may stand on any rank; a pawn
    // on its own promotion rank simply has no moves.
    static Position finalize(const BoardSketch& sketch);

    BoardSize size() const { return size_; }
    Color side_to_move() const { return stm_; }
    std::optional<Square> ep_target() const { return ep_; }
    int halfmove_clock() const { return halfmove_; }
    int fullmove_number() const { return fullmove_; }

    bool on_board(Square s) const {
        return s.file >= 1 && s.file <= size_.files && s.rank >= 1 && s.rank <= size_.ranks;
    }
    std::optional<Piece> piece_at(Square s) const;
    Square king_square(Color c) const;
    int piece_count() const;
    std::vector<std::pair<Square, Piece>> pieces() const;

    // True iff some piece of color c attacks s (pawn attacks are diagonal only).
    bool attacked_by(Square s, Color c) const;
    // True iff the piece on `from` attacks `to` given the current occupancy.
    bool square_attacks(Square from, Square to) const;

    // All legal moves for side_to_move, in canonical order.
    std::vector<Move> legal_moves() const;
    bool has_legal_move() const;

    bool in_check(Color c) const { return attacked_by(king_square(c), opposite(c)); }
    bool is_check() const { return in_check(stm_); }
    bool is_checkmate() const { return is_check() && !has_legal_move(); }
    bool is_stalemate() const { return !is_check() && !has_legal_move(); }

    // Throws IllegalMoveError unless m is exactly one of legal_moves().
    Position apply(const Move& m) const;
    // Fast path for moves already known to come from legal_moves().
    Position apply_unchecked(const Move& m) const;

    BoardSketch to_sketch() const;

    // Placement + side to move + ep target; move counters excluded.
    std::string state_key() const;

    std::uint64_t perft(int depth) const;

    friend bool operator==(const Position& a, const Position& b);

private:
    Position() = default;
    void pseudo_moves(std::vector<Move>& out) const;
    bool leaves_mover_in_check(const Move& m) const;

    int idx(Square s) const { return (s.rank - 1) * size_.files + (s.file - 1); }
    std::uint8_t cell(Square s) const { return cells_[idx(s)]; }

    BoardSize size_;
    std::vector<std::uint8_t> cells_;  // 0 empty, else kind | color<<3
    Color stm_ = Color::White;
    std::optional<Square> ep_;
    int halfmove_ = 0;
    int fullmove_ = 1;
    Square kings_[2];
};

// Vertical mirror (rank r -> R+1-r) with colors swapped; side to move flips.
// Legal move sets correspond square-for-square under the same mapping.
Position flip_colors(const Position& p);
Square flip_square(Square s, const BoardSize& size);
Move flip_move(const Move& m, const BoardSize& size);

}  // namespace chess
