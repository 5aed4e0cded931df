#include "oracle_movegen.hpp"

#include <algorithm>
#include <cctype>

namespace oracle {

namespace {

char& at(OBoard& b, int f, int r) { return b.cells[(r - 1) * b.files + (f - 1)]; }
char get(const OBoard& b, int f, int r) { return b.cells[(r - 1) * b.files + (f - 1)]; }
bool inside(const OBoard& b, int f, int r) {
    return f >= 1 && f <= b.files && r >= 1 && r <= b.ranks;
}
bool is_white(char c) { return c != '.' && std::isupper(static_cast<unsigned char>(c)); }
bool is_black(char c) { return c != '.' && std::islower(static_cast<unsigned char>(c)); }

// Is (f, r) attacked by the given side? Walks outward from the target.
bool attacked(const OBoard& b, int f, int r, bool by_white) {
    auto hostile = [&](char c) { return by_white ? is_white(c) : is_black(c); };
    int pawn_from_rank = by_white ? r - 1 : r + 1;
    for (int df : {-1, 1})
        if (inside(b, f + df, pawn_from_rank)) {
            char c = get(b, f + df, pawn_from_rank);
            if (hostile(c) && (c == 'P' || c == 'p')) return true;
        }
    static const int kn[8][2] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
    for (auto& d : kn)
        if (inside(b, f + d[0], r + d[1])) {
            char c = get(b, f + d[0], r + d[1]);
            if (hostile(c) && (c == 'N' || c == 'n')) return true;
        }
    for (int df = -1; df <= 1; df++)
        for (int dr = -1; dr <= 1; dr++) {
            if (!df && !dr) continue;
            if (inside(b, f + df, r + dr)) {
                char c = get(b, f + df, r + dr);
                if (hostile(c) && (c == 'K' || c == 'k')) return true;
            }
        }
    static const int dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int i = 0; i < 8; i++) {
        bool diagonal = i >= 4;
        int tf = f + dirs[i][0], tr = r + dirs[i][1];
        while (inside(b, tf, tr)) {
            char c = get(b, tf, tr);
            if (c != '.') {
                if (hostile(c)) {
                    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
                    if (u == 'Q' || (diagonal ? u == 'B' : u == 'R')) return true;
                }
                break;
            }
            tf += dirs[i][0];
            tr += dirs[i][1];
        }
    }
    return false;
}

void find_king(const OBoard& b, bool white, int& kf, int& kr) {
    char want = white ? 'K' : 'k';
    for (int r = 1; r <= b.ranks; r++)
        for (int f = 1; f <= b.files; f++)
            if (get(b, f, r) == want) {
                kf = f;
                kr = r;
                return;
            }
    kf = kr = 0;
}

void pseudo(const OBoard& b, std::vector<OMove>& out) {
    bool white = b.white_to_move;
    int fwd = white ? 1 : -1;
    int start_rank = white ? 2 : b.ranks - 1;
    int last_rank = white ? b.ranks : 1;
    auto mine = [&](char c) { return white ? is_white(c) : is_black(c); };
    auto theirs = [&](char c) { return white ? is_black(c) : is_white(c); };

    auto add = [&](int ff, int fr, int tf, int tr, bool ep) {
        if (tr == last_rank &&
            std::toupper(static_cast<unsigned char>(get(b, ff, fr))) == 'P') {
            for (char promo : {'Q', 'R', 'B', 'N'}) out.push_back({ff, fr, tf, tr, promo, ep});
        } else {
            out.push_back({ff, fr, tf, tr, 0, ep});
        }
    };

    for (int r = 1; r <= b.ranks; r++)
        for (int f = 1; f <= b.files; f++) {
            char c = get(b, f, r);
            if (!mine(c)) continue;
            char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (u == 'P') {
                if (inside(b, f, r + fwd) && get(b, f, r + fwd) == '.') {
                    add(f, r, f, r + fwd, false);
                    if (r == start_rank && inside(b, f, r + 2 * fwd) &&
                        get(b, f, r + 2 * fwd) == '.')
                        add(f, r, f, r + 2 * fwd, false);
                }
                for (int df : {-1, 1}) {
                    int tf = f + df, tr = r + fwd;
                    if (!inside(b, tf, tr)) continue;
                    if (theirs(get(b, tf, tr)))
                        add(f, r, tf, tr, false);
                    else if (get(b, tf, tr) == '.' && tf == b.ep_file && tr == b.ep_rank)
                        add(f, r, tf, tr, true);
                }
            } else if (u == 'N' || u == 'K') {
                static const int kn[8][2] = {{1, 2}, {2, 1}, {2, -1}, {1, -2},
                                             {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
                static const int kg[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                             {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
                const auto& table = u == 'N' ? kn : kg;
                for (int i = 0; i < 8; i++) {
                    int tf = f + table[i][0], tr = r + table[i][1];
                    if (!inside(b, tf, tr)) continue;
                    char t = get(b, tf, tr);
                    if (t == '.' || theirs(t)) add(f, r, tf, tr, false);
                }
            } else {
                static const int dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                               {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
                int lo = u == 'B' ? 4 : 0;
                int hi = u == 'R' ? 4 : 8;
                for (int i = lo; i < hi; i++) {
                    int tf = f + dirs[i][0], tr = r + dirs[i][1];
                    while (inside(b, tf, tr)) {
                        char t = get(b, tf, tr);
                        if (t == '.') {
                            add(f, r, tf, tr, false);
                        } else {
                            if (theirs(t)) add(f, r, tf, tr, false);
                            break;
                        }
                        tf += dirs[i][0];
                        tr += dirs[i][1];
                    }
                }
            }
        }
}

}  // namespace

OBoard load(const chess::Position& p) {
    OBoard b;
    b.files = p.size().files;
    b.ranks = p.size().ranks;
    b.cells.assign(static_cast<std::size_t>(b.files) * b.ranks, '.');
    for (auto& [sq, pc] : p.pieces()) {
        char c = chess::piece_letter(pc.kind);
        if (pc.color == chess::Color::Black)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        at(b, sq.file, sq.rank) = c;
    }
    b.white_to_move = p.side_to_move() == chess::Color::White;
    if (p.ep_target()) {
        b.ep_file = p.ep_target()->file;
        b.ep_rank = p.ep_target()->rank;
    }
    return b;
}

OBoard apply(const OBoard& b, const OMove& m) {
    OBoard n = b;
    char moving = get(n, m.from_file, m.from_rank);
    at(n, m.from_file, m.from_rank) = '.';
    if (m.en_passant) at(n, m.to_file, b.white_to_move ? m.to_rank - 1 : m.to_rank + 1) = '.';
    if (m.promo) {
        at(n, m.to_file, m.to_rank) =
            b.white_to_move ? m.promo
                            : static_cast<char>(std::tolower(static_cast<unsigned char>(m.promo)));
    } else {
        at(n, m.to_file, m.to_rank) = moving;
    }
    n.ep_file = n.ep_rank = 0;
    if ((moving == 'P' || moving == 'p') && std::abs(m.to_rank - m.from_rank) == 2) {
        n.ep_file = m.from_file;
        n.ep_rank = (m.from_rank + m.to_rank) / 2;
    }
    n.white_to_move = !b.white_to_move;
    return n;
}

std::vector<OMove> legal_moves(const OBoard& b) {
    std::vector<OMove> out;
    std::vector<OMove> cand;
    pseudo(b, cand);
    for (const OMove& m : cand) {
        OBoard n = apply(b, m);
        int kf, kr;
        find_king(n, b.white_to_move, kf, kr);
        if (kf == 0) continue;  // no king: treat as illegal state
        if (!attacked(n, kf, kr, !b.white_to_move)) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t perft(const OBoard& b, int depth) {
    if (depth <= 0) return 1;
    std::uint64_t total = 0;
    for (const OMove& m : legal_moves(b)) {
        if (depth == 1)
            total++;
        else
            total += perft(apply(b, m), depth - 1);
    }
    return total;
}

bool same_move_set(const chess::Position& p) {
    std::vector<OMove> mine;
    for (const chess::Move& m : p.legal_moves()) {
        char promo = m.promotion ? chess::piece_letter(*m.promotion) : 0;
        mine.push_back({m.from.file, m.from.rank, m.to.file, m.to.rank, promo, m.is_en_passant});
    }
    std::sort(mine.begin(), mine.end());
    return mine == legal_moves(load(p));
}

}  // namespace oracle
