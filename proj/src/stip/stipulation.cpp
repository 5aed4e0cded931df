#include "stip/stipulation.hpp"

#include <algorithm>
#include <cctype>

namespace stip {

using namespace chess;

Stipulation parse_stipulation(const std::string& text) {
    std::string s;
    for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    Stipulation out;
    std::string prefix;
    auto hash = s.find('#');
    if (hash == std::string::npos) throw ParseError("stipulation needs '#': '" + text + "'", 0);
    prefix = s.substr(0, hash);
    if (prefix == "")
        out.kind = Kind::Direct;
    else if (prefix == "s")
        out.kind = Kind::Self;
    else if (prefix == "r")
        out.kind = Kind::Reflex;
    else if (prefix == "semi-r")
        out.kind = Kind::SemiReflex;
    else
        throw ParseError("unknown stipulation kind '" + prefix + "'", 0);

    std::string num = s.substr(hash + 1);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw ParseError("bad stipulation horizon in '" + text + "'", hash + 1);
    out.n = std::stoi(num);
    if (out.n < 1) throw ParseError("stipulation horizon must be >= 1", hash + 1);
    return out;
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Direct: return "direct";
        case Kind::Self: return "self";
        case Kind::Reflex: return "reflex";
        case Kind::SemiReflex: return "semi-reflex";
    }
    return "?";
}

std::string format_stipulation(const Stipulation& s) {
    std::string prefix;
    switch (s.kind) {
        case Kind::Direct: prefix = ""; break;
        case Kind::Self: prefix = "s"; break;
        case Kind::Reflex: prefix = "r"; break;
        case Kind::SemiReflex: prefix = "semi-r"; break;
    }
    return prefix + "#" + std::to_string(s.n);
}

bool obligation_applies(const Stipulation& s, Color mover) {
    if (s.kind == Kind::Reflex) return true;
    if (s.kind == Kind::SemiReflex) return mover == opposite(s.forcing_side);
    return false;
}

std::vector<Move> mating_moves(const Position& p) {
    std::vector<Move> out;
    for (const Move& m : p.legal_moves())
        if (p.apply_unchecked(m).is_checkmate()) out.push_back(m);
    return out;
}

std::vector<Move> playable_moves(const Position& p, const Stipulation& s) {
    std::vector<Move> legal = p.legal_moves();
    if (!obligation_applies(s, p.side_to_move())) return legal;
    std::vector<Move> mates;
    for (const Move& m : legal)
        if (p.apply_unchecked(m).is_checkmate()) mates.push_back(m);
    return mates.empty() ? legal : mates;
}

}  // namespace stip
