#include "core/position.hpp"

#include <algorithm>
#include <array>

namespace chess {

namespace {

constexpr std::uint8_t encode(Piece p) {
    return static_cast<std::uint8_t>(p.kind) | (static_cast<std::uint8_t>(p.color) << 3);
}

constexpr Piece decode(std::uint8_t c) {
    return Piece{static_cast<Color>((c >> 3) & 1), static_cast<PieceKind>(c & 7)};
}

constexpr std::array<std::pair<int, int>, 8> kKnightSteps{
    {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}}};
constexpr std::array<std::pair<int, int>, 8> kKingSteps{
    {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
constexpr std::array<std::pair<int, int>, 4> kRookDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<std::pair<int, int>, 4> kBishopDirs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

int pawn_dir(Color c) { return c == Color::White ? 1 : -1; }

}  // namespace

void BoardSketch::put(Square s, Piece p) {
    if (placement.count(s))
        throw ValidationError("square " + square_name(s) + " already occupied");
    placement[s] = p;
}

Position Position::finalize(const BoardSketch& sk) {
    if (sk.size.files < 4 || sk.size.files > 26 || sk.size.ranks < 4 || sk.size.ranks > 64)
        throw ValidationError("board size out of range (4..26 files, 4..64 ranks)");
    Position p;
    p.size_ = sk.size;
    p.cells_.assign(static_cast<std::size_t>(sk.size.files) * sk.size.ranks, 0);
    p.stm_ = sk.side_to_move;
    p.ep_ = sk.ep_target;
    p.halfmove_ = sk.halfmove_clock;
    p.fullmove_ = sk.fullmove_number;
    if (p.halfmove_ < 0 || p.fullmove_ < 1)
        throw ValidationError("move counters out of range");

    int kings[2] = {0, 0};
    for (const auto& [sq, piece] : sk.placement) {
        if (!p.on_board(sq))
            throw ValidationError("piece off board at " + square_name(sq));
        p.cells_[p.idx(sq)] = encode(piece);
        if (piece.kind == PieceKind::King) {
            kings[static_cast<int>(piece.color)]++;
            p.kings_[static_cast<int>(piece.color)] = sq;
        }
    }
    for (Color c : {Color::White, Color::Black}) {
        int n = kings[static_cast<int>(c)];
        if (n != 1)
            throw ValidationError(color_name(c) + " must have exactly one king, found " +
                                  std::to_string(n));
    }
    if (p.ep_) {
        Square ep = *p.ep_;
        if (!p.on_board(ep)) throw ValidationError("en-passant target off board");
        // The previous mover must have just double-stepped onto the square in
        // front of ep; ep itself and the origin square stay empty.
        Color mover = opposite(p.stm_);
        int dir = pawn_dir(mover);
        int expected_rank = mover == Color::White ? 3 : p.size_.ranks - 2;
        Square pawn_sq{ep.file, ep.rank + dir};
        Square origin{ep.file, ep.rank - dir};
        bool ok = ep.rank == expected_rank && p.cell(ep) == 0 && p.on_board(pawn_sq) &&
                  p.on_board(origin) && p.cell(origin) == 0 &&
                  p.cell(pawn_sq) == encode(Piece{mover, PieceKind::Pawn});
        if (!ok)
            throw ValidationError("en-passant target " + square_name(ep) +
                                  " inconsistent with a just-played double step");
    }
    if (p.in_check(opposite(p.stm_)))
        throw ValidationError("side not to move is in check");
    return p;
}

std::optional<Piece> Position::piece_at(Square s) const {
    if (!on_board(s)) return std::nullopt;
    std::uint8_t c = cell(s);
    if (!c) return std::nullopt;
    return decode(c);
}

Square Position::king_square(Color c) const { return kings_[static_cast<int>(c)]; }

int Position::piece_count() const {
    int n = 0;
    for (auto c : cells_)
        if (c) n++;
    return n;
}

std::vector<std::pair<Square, Piece>> Position::pieces() const {
    std::vector<std::pair<Square, Piece>> out;
    for (int r = 1; r <= size_.ranks; r++)
        for (int f = 1; f <= size_.files; f++) {
            Square s{f, r};
            if (std::uint8_t c = cell(s))
                out.emplace_back(s, decode(c));
        }
    return out;
}

bool Position::attacked_by(Square s, Color c) const {
    // Pawn attackers sit one rank behind their push direction.
    int dir = pawn_dir(c);
    for (int df : {-1, 1}) {
        Square from{s.file + df, s.rank - dir};
        if (on_board(from) && cell(from) == encode(Piece{c, PieceKind::Pawn})) return true;
    }
    for (auto [df, dr] : kKnightSteps) {
        Square from{s.file + df, s.rank + dr};
        if (on_board(from) && cell(from) == encode(Piece{c, PieceKind::Knight})) return true;
    }
    for (auto [df, dr] : kKingSteps) {
        Square from{s.file + df, s.rank + dr};
        if (on_board(from) && cell(from) == encode(Piece{c, PieceKind::King})) return true;
    }
    for (auto [df, dr] : kRookDirs) {
        Square t{s.file + df, s.rank + dr};
        while (on_board(t)) {
            if (std::uint8_t occ = cell(t)) {
                Piece pc = decode(occ);
                if (pc.color == c && (pc.kind == PieceKind::Rook || pc.kind == PieceKind::Queen))
                    return true;
                break;
            }
            t.file += df;
            t.rank += dr;
        }
    }
    for (auto [df, dr] : kBishopDirs) {
        Square t{s.file + df, s.rank + dr};
        while (on_board(t)) {
            if (std::uint8_t occ = cell(t)) {
                Piece pc = decode(occ);
                if (pc.color == c && (pc.kind == PieceKind::Bishop || pc.kind == PieceKind::Queen))
                    return true;
                break;
            }
            t.file += df;
            t.rank += dr;
        }
    }
    return false;
}

bool Position::square_attacks(Square from, Square to) const {
    auto pc = piece_at(from);
    if (!pc || from == to) return false;
    int df = to.file - from.file;
    int dr = to.rank - from.rank;
    switch (pc->kind) {
        case PieceKind::Pawn:
            return dr == pawn_dir(pc->color) && (df == 1 || df == -1);
        case PieceKind::Knight:
            return (df * df + dr * dr) == 5;
        case PieceKind::King:
            return std::max(std::abs(df), std::abs(dr)) == 1;
        case PieceKind::Rook:
        case PieceKind::Bishop:
        case PieceKind::Queen: {
            bool ortho = df == 0 || dr == 0;
            bool diag = std::abs(df) == std::abs(dr);
            bool fits = pc->kind == PieceKind::Rook    ? ortho
                        : pc->kind == PieceKind::Bishop ? diag
                                                        : (ortho || diag);
            if (!fits || (df == 0 && dr == 0)) return false;
            int sf = (df > 0) - (df < 0), sr = (dr > 0) - (dr < 0);
            Square t{from.file + sf, from.rank + sr};
            while (t != to) {
                if (cell(t)) return false;
                t.file += sf;
                t.rank += sr;
            }
            return true;
        }
    }
    return false;
}

void Position::pseudo_moves(std::vector<Move>& out) const {
    const Color us = stm_;
    const Color them = opposite(us);
    const int dir = pawn_dir(us);
    const int promo_rank = us == Color::White ? size_.ranks : 1;
    const int double_rank = us == Color::White ? 2 : size_.ranks - 1;

    auto push_pawn_move = [&](Square from, Square to, bool capture, bool ep) {
        if (to.rank == promo_rank) {
            for (PieceKind k :
                 {PieceKind::Queen, PieceKind::Rook, PieceKind::Bishop, PieceKind::Knight})
                out.push_back(Move{from, to, k, capture, ep});
        } else {
            out.push_back(Move{from, to, std::nullopt, capture, ep});
        }
    };

    for (int r = 1; r <= size_.ranks; r++)
        for (int f = 1; f <= size_.files; f++) {
            Square from{f, r};
            std::uint8_t occ = cell(from);
            if (!occ) continue;
            Piece pc = decode(occ);
            if (pc.color != us) continue;
            switch (pc.kind) {
                case PieceKind::Pawn: {
                    Square one{f, r + dir};
                    if (on_board(one) && !cell(one)) {
                        push_pawn_move(from, one, false, false);
                        Square two{f, r + 2 * dir};
                        if (r == double_rank && on_board(two) && !cell(two))
                            push_pawn_move(from, two, false, false);
                    }
                    for (int df : {-1, 1}) {
                        Square to{f + df, r + dir};
                        if (!on_board(to)) continue;
                        if (std::uint8_t t = cell(to); t && decode(t).color == them)
                            push_pawn_move(from, to, true, false);
                        else if (!t && ep_ && to == *ep_)
                            push_pawn_move(from, to, true, true);
                    }
                    break;
                }
                case PieceKind::Knight:
                    for (auto [df, dr] : kKnightSteps) {
                        Square to{f + df, r + dr};
                        if (!on_board(to)) continue;
                        std::uint8_t t = cell(to);
                        if (!t || decode(t).color == them)
                            out.push_back(Move{from, to, std::nullopt, t != 0, false});
                    }
                    break;
                case PieceKind::King:
                    for (auto [df, dr] : kKingSteps) {
                        Square to{f + df, r + dr};
                        if (!on_board(to)) continue;
                        std::uint8_t t = cell(to);
                        if (!t || decode(t).color == them)
                            out.push_back(Move{from, to, std::nullopt, t != 0, false});
                    }
                    break;
                case PieceKind::Rook:
                case PieceKind::Bishop:
                case PieceKind::Queen: {
                    auto slide = [&](auto dirs) {
                        for (auto [df, dr] : dirs) {
                            Square to{f + df, r + dr};
                            while (on_board(to)) {
                                std::uint8_t t = cell(to);
                                if (!t) {
                                    out.push_back(Move{from, to, std::nullopt, false, false});
                                } else {
                                    if (decode(t).color == them)
                                        out.push_back(Move{from, to, std::nullopt, true, false});
                                    break;
                                }
                                to.file += df;
                                to.rank += dr;
                            }
                        }
                    };
                    if (pc.kind != PieceKind::Bishop) slide(kRookDirs);
                    if (pc.kind != PieceKind::Rook) slide(kBishopDirs);
                    break;
                }
            }
        }
}

bool Position::leaves_mover_in_check(const Move& m) const {
    Position next = apply_unchecked(m);
    return next.in_check(stm_);
}

std::vector<Move> Position::legal_moves() const {
    std::vector<Move> moves;
    pseudo_moves(moves);
    std::erase_if(moves, [&](const Move& m) { return leaves_mover_in_check(m); });
    std::sort(moves.begin(), moves.end(), canonical_less);
    return moves;
}

bool Position::has_legal_move() const {
    std::vector<Move> moves;
    pseudo_moves(moves);
    return std::any_of(moves.begin(), moves.end(),
                       [&](const Move& m) { return !leaves_mover_in_check(m); });
}

Position Position::apply_unchecked(const Move& m) const {
    Position next = *this;
    std::uint8_t moving = next.cells_[idx(m.from)];
    Piece pc = decode(moving);
    bool capture = next.cells_[idx(m.to)] != 0;
    next.cells_[idx(m.from)] = 0;
    if (m.is_en_passant) {
        Square victim{m.to.file, m.to.rank - pawn_dir(pc.color)};
        next.cells_[idx(victim)] = 0;
        capture = true;
    }
    next.cells_[idx(m.to)] =
        m.promotion ? encode(Piece{pc.color, *m.promotion}) : moving;
    if (pc.kind == PieceKind::King) next.kings_[static_cast<int>(pc.color)] = m.to;

    next.ep_.reset();
    if (pc.kind == PieceKind::Pawn && std::abs(m.to.rank - m.from.rank) == 2)
        next.ep_ = Square{m.from.file, (m.from.rank + m.to.rank) / 2};

    if (pc.kind == PieceKind::Pawn || capture)
        next.halfmove_ = 0;
    else
        next.halfmove_++;
    if (stm_ == Color::Black) next.fullmove_++;
    next.stm_ = opposite(stm_);
    return next;
}

Position Position::apply(const Move& m) const {
    auto legal = legal_moves();
    if (std::find(legal.begin(), legal.end(), m) == legal.end())
        throw IllegalMoveError("move " + square_name(m.from) + "-" + square_name(m.to) +
                               " is not legal here");
    return apply_unchecked(m);
}

BoardSketch Position::to_sketch() const {
    BoardSketch sk;
    sk.size = size_;
    for (auto& [sq, pc] : pieces()) sk.placement[sq] = pc;
    sk.side_to_move = stm_;
    sk.ep_target = ep_;
    sk.halfmove_clock = halfmove_;
    sk.fullmove_number = fullmove_;
    return sk;
}

std::string Position::state_key() const {
    std::string key;
    key.reserve(cells_.size() + 8);
    key.push_back(static_cast<char>(size_.files));
    key.push_back(static_cast<char>(size_.ranks));
    for (auto c : cells_) key.push_back(static_cast<char>(c + 1));
    key.push_back(stm_ == Color::White ? 'w' : 'b');
    if (ep_) {
        key.push_back(static_cast<char>(ep_->file));
        key.push_back(static_cast<char>(ep_->rank));
    } else {
        key.push_back(0);
        key.push_back(0);
    }
    return key;
}

std::uint64_t Position::perft(int depth) const {
    if (depth <= 0) return 1;
    std::uint64_t total = 0;
    for (const Move& m : legal_moves()) {
        if (depth == 1)
            total++;
        else
            total += apply_unchecked(m).perft(depth - 1);
    }
    return total;
}

bool operator==(const Position& a, const Position& b) {
    return a.size_ == b.size_ && a.cells_ == b.cells_ && a.stm_ == b.stm_ && a.ep_ == b.ep_ &&
           a.halfmove_ == b.halfmove_ && a.fullmove_ == b.fullmove_;
}

Square flip_square(Square s, const BoardSize& size) { return Square{s.file, size.ranks + 1 - s.rank}; }

Move flip_move(const Move& m, const BoardSize& size) {
    return Move{flip_square(m.from, size), flip_square(m.to, size), m.promotion, m.is_capture,
                m.is_en_passant};
}

Position flip_colors(const Position& p) {
    BoardSketch sk;
    sk.size = p.size();
    for (auto& [sq, pc] : p.pieces())
        sk.placement[flip_square(sq, p.size())] = Piece{opposite(pc.color), pc.kind};
    sk.side_to_move = opposite(p.side_to_move());
    if (p.ep_target()) sk.ep_target = flip_square(*p.ep_target(), p.size());
    sk.halfmove_clock = p.halfmove_clock();
    sk.fullmove_number = p.fullmove_number();
    return Position::finalize(sk);
}

}  // namespace chess
