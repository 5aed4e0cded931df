#include "core/movetext.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace chess {

std::string format_move_bare(const Position& before, const Move& m) {
    auto pc = before.piece_at(m.from);
    std::string out;
    out.push_back(pc ? piece_letter(pc->kind) : '?');
    out += square_name(m.from);
    out.push_back(m.is_capture ? 'x' : '-');
    out += square_name(m.to);
    if (m.promotion) {
        out.push_back('=');
        out.push_back(piece_letter(*m.promotion));
    }
    return out;
}

std::string format_move(const Position& before, const Move& m) {
    std::string out = format_move_bare(before, m);
    Position after = before.apply(m);
    if (after.is_checkmate())
        out.push_back('#');
    else if (after.is_check())
        out.push_back('+');
    return out;
}

namespace {

struct Pattern {
    std::optional<PieceKind> piece;
    std::optional<int> from_file;
    std::optional<int> from_rank;
    Square to;
    std::optional<PieceKind> promotion;
    bool capture_marked = false;
};

// Grammar (markers already stripped): [KQRBNP] [<square>|<file>|<rank>] [-|x] <square> [=KQRBN]
Pattern parse_pattern(const std::string& text) {
    Pattern pat;
    std::string s = text;

    if (auto eq = s.find('='); eq != std::string::npos) {
        if (eq + 2 != s.size()) throw ParseError("bad promotion suffix in '" + text + "'", eq);
        auto kind = piece_from_letter(s[eq + 1]);
        if (!kind || *kind == PieceKind::King || *kind == PieceKind::Pawn)
            throw ParseError("bad promotion piece in '" + text + "'", eq + 1);
        pat.promotion = kind;
        s = s.substr(0, eq);
    }

    std::size_t i = 0;
    if (i < s.size() && std::isupper(static_cast<unsigned char>(s[i]))) {
        auto kind = piece_from_letter(s[i]);
        if (!kind) throw ParseError("bad piece letter in '" + text + "'", i);
        pat.piece = kind;
        i++;
    }

    // Collect squares / disambiguators around an optional '-' or 'x'.
    std::vector<std::pair<std::optional<int>, std::optional<int>>> parts;  // (file, rank)
    while (i < s.size()) {
        char c = s[i];
        if (c == '-' || c == 'x') {
            pat.capture_marked = pat.capture_marked || c == 'x';
            i++;
            continue;
        }
        std::optional<int> file, rank;
        if (c >= 'a' && c <= 'z') {
            file = c - 'a' + 1;
            i++;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) j++;
            rank = std::stoi(s.substr(i, j - i));
            i = j;
        }
        if (!file && !rank) throw ParseError("unexpected character in '" + text + "'", i);
        parts.emplace_back(file, rank);
    }
    if (parts.empty() || !parts.back().first || !parts.back().second)
        throw ParseError("missing destination square in '" + text + "'", s.size());
    pat.to = Square{*parts.back().first, *parts.back().second};
    if (parts.size() == 2) {
        pat.from_file = parts[0].first;
        pat.from_rank = parts[0].second;
    } else if (parts.size() > 2) {
        throw ParseError("too many squares in '" + text + "'", 0);
    }
    return pat;
}

}  // namespace

Move parse_move(const Position& p, const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '+' || s.back() == '#' || s.back() == '!' || s.back() == '?'))
        s.pop_back();
    if (s.empty()) throw ParseError("empty move text", 0);
    Pattern pat = parse_pattern(s);

    std::vector<Move> matches;
    for (const Move& m : p.legal_moves()) {
        if (m.to != pat.to) continue;
        auto pc = p.piece_at(m.from);
        PieceKind want = pat.piece.value_or(PieceKind::Pawn);
        if (pc->kind != want) continue;
        if (pat.from_file && m.from.file != *pat.from_file) continue;
        if (pat.from_rank && m.from.rank != *pat.from_rank) continue;
        if (pat.promotion) {
            if (m.promotion != pat.promotion) continue;
        } else if (m.promotion && promotion_order(*m.promotion) != 0) {
            continue;  // bare promotion text means queen
        }
        if (pat.capture_marked && !m.is_capture) continue;
        matches.push_back(m);
    }
    if (matches.empty()) throw ParseError("no legal move matches '" + text + "'", 0);
    if (matches.size() > 1) throw ParseError("ambiguous move '" + text + "'", 0);
    return matches[0];
}

}  // namespace chess
