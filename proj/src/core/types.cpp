#include "core/types.hpp"

namespace chess {

int promotion_order(PieceKind k) {
    switch (k) {
        case PieceKind::Queen: return 0;
        case PieceKind::Rook: return 1;
        case PieceKind::Bishop: return 2;
        case PieceKind::Knight: return 3;
        default: return 4;
    }
}

bool canonical_less(const Move& a, const Move& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    int pa = a.promotion ? promotion_order(*a.promotion) : -1;
    int pb = b.promotion ? promotion_order(*b.promotion) : -1;
    return pa < pb;
}

char piece_letter(PieceKind k) {
    switch (k) {
        case PieceKind::King: return 'K';
        case PieceKind::Queen: return 'Q';
        case PieceKind::Rook: return 'R';
        case PieceKind::Bishop: return 'B';
        case PieceKind::Knight: return 'N';
        case PieceKind::Pawn: return 'P';
    }
    return '?';
}

std::optional<PieceKind> piece_from_letter(char c) {
    switch (c) {
        case 'K': return PieceKind::King;
        case 'Q': return PieceKind::Queen;
        case 'R': return PieceKind::Rook;
        case 'B': return PieceKind::Bishop;
        case 'N': return PieceKind::Knight;
        case 'P': return PieceKind::Pawn;
        default: return std::nullopt;
    }
}

std::string square_name(Square s) {
    std::string out;
    out.push_back(static_cast<char>('a' + s.file - 1));
    out += std::to_string(s.rank);
    return out;
}

std::string color_name(Color c) { return c == Color::White ? "white" : "black"; }

}  // namespace chess
