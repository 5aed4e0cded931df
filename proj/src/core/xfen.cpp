#include "core/xfen.hpp"

#include <cctype>
#include <vector>

namespace chess {

namespace {

struct Token {
    std::string text;
    std::size_t offset;
};

std::vector<Token> split_ws(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) i++;
        if (i > start) out.push_back({s.substr(start, i - start), start});
    }
    return out;
}

int parse_int(const Token& tok, const char* what) {
    if (tok.text.empty()) throw ParseError(std::string("empty ") + what, tok.offset);
    std::size_t pos = 0;
    for (char c : tok.text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(std::string("bad ") + what + " '" + tok.text + "'", tok.offset + pos);
        else
            pos++;
    return std::stoi(tok.text);
}

BoardSize parse_size(const Token& tok) {
    auto x = tok.text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= tok.text.size())
        throw ParseError("bad size field '" + tok.text + "'", tok.offset);
    BoardSize size;
    size.files = parse_int({tok.text.substr(0, x), tok.offset}, "file count");
    size.ranks = parse_int({tok.text.substr(x + 1), tok.offset + x + 1}, "rank count");
    return size;
}

Square parse_square_text(const std::string& s, std::size_t offset) {
    if (s.size() < 2 || s[0] < 'a' || s[0] > 'z')
        throw ParseError("bad square '" + s + "'", offset);
    Square sq;
    sq.file = s[0] - 'a' + 1;
    for (std::size_t i = 1; i < s.size(); i++)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad square '" + s + "'", offset + i);
    sq.rank = std::stoi(s.substr(1));
    return sq;
}

}  // namespace

Position parse_xfen(const std::string& text) {
    auto toks = split_ws(text);
    BoardSize size{8, 8};
    std::size_t base = 0;
    if (toks.size() == 7) {
        size = parse_size(toks[0]);
        base = 1;
    } else if (toks.size() != 6) {
        throw ParseError("expected 6 or 7 fields, found " + std::to_string(toks.size()),
                         toks.empty() ? 0 : toks.back().offset);
    }
    if (size.files < 4 || size.files > 26 || size.ranks < 4 || size.ranks > 64)
        throw ValidationError("board size out of range (4..26 files, 4..64 ranks)");

    BoardSketch sk;
    sk.size = size;

    const Token& placement = toks[base];
    int rank = size.ranks;
    int file = 1;
    std::size_t i = 0;
    while (i < placement.text.size()) {
        char c = placement.text[i];
        std::size_t at = placement.offset + i;
        if (c == '/') {
            if (file != size.files + 1)
                throw ParseError("rank " + std::to_string(rank) + " has wrong width", at);
            rank--;
            file = 1;
            if (rank < 1) throw ParseError("too many ranks", at);
            i++;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < placement.text.size() &&
                   std::isdigit(static_cast<unsigned char>(placement.text[j])))
                j++;
            file += std::stoi(placement.text.substr(i, j - i));
            if (file > size.files + 1) throw ParseError("rank overflows board width", at);
            i = j;
        } else {
            auto kind = piece_from_letter(
                static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            if (!kind) throw ParseError(std::string("bad piece letter '") + c + "'", at);
            if (file > size.files) throw ParseError("rank overflows board width", at);
            Color color = std::isupper(static_cast<unsigned char>(c)) ? Color::White : Color::Black;
            sk.placement[Square{file, rank}] = Piece{color, *kind};
            file++;
            i++;
        }
    }
    if (rank != 1 || file != size.files + 1)
        throw ParseError("placement does not cover the full board",
                         placement.offset + placement.text.size());

    const Token& side = toks[base + 1];
    if (side.text == "w")
        sk.side_to_move = Color::White;
    else if (side.text == "b")
        sk.side_to_move = Color::Black;
    else
        throw ParseError("side to move must be 'w' or 'b'", side.offset);

    const Token& castle = toks[base + 2];
    if (castle.text != "-")
        throw ValidationError("castling field must be '-', found '" + castle.text + "'");

    const Token& ep = toks[base + 3];
    if (ep.text != "-") sk.ep_target = parse_square_text(ep.text, ep.offset);

    sk.halfmove_clock = parse_int(toks[base + 4], "halfmove clock");
    sk.fullmove_number = parse_int(toks[base + 5], "fullmove number");

    return Position::finalize(sk);
}

std::string serialize_xfen(const Position& p) {
    std::string out = std::to_string(p.size().files) + "x" + std::to_string(p.size().ranks) + " ";
    for (int r = p.size().ranks; r >= 1; r--) {
        int run = 0;
        for (int f = 1; f <= p.size().files; f++) {
            auto pc = p.piece_at(Square{f, r});
            if (!pc) {
                run++;
                continue;
            }
            if (run) {
                out += std::to_string(run);
                run = 0;
            }
            char letter = piece_letter(pc->kind);
            out.push_back(pc->color == Color::White
                              ? letter
                              : static_cast<char>(std::tolower(static_cast<unsigned char>(letter))));
        }
        if (run) out += std::to_string(run);
        if (r > 1) out.push_back('/');
    }
    out += p.side_to_move() == Color::White ? " w" : " b";
    out += " -";
    out += p.ep_target() ? " " + square_name(*p.ep_target()) : " -";
    out += " " + std::to_string(p.halfmove_clock());
    out += " " + std::to_string(p.fullmove_number());
    return out;
}

}  // namespace chess
