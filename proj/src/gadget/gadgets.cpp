#include "gadget/gadgets.hpp"

#include <algorithm>
#include <sstream>

namespace gadgets {

using namespace chess;

namespace {

Square sq(const std::string& name) {
    Square s;
    s.file = name[0] - 'a' + 1;
    s.rank = std::stoi(name.substr(1));
    return s;
}

std::vector<Square> sqs(const std::string& list) {
    std::vector<Square> out;
    std::istringstream in(list);
    std::string tok;
    while (in >> tok) out.push_back(sq(tok));
    return out;
}

struct FigureEntry {
    Color color;
    std::string square;
    std::string line_from1, line_to1, line_from2, line_to2;  // second move optional
    bool derived;
    std::string attacker, king;
};

struct Figure {
    BoardSize board;
    stip::Kind kind;
    std::vector<std::pair<Piece, std::string>> groups;  // piece -> square list
    std::vector<FigureEntry> entries;
    std::string exceptions;
    std::vector<std::pair<Piece, std::string>> harness;
};

const Piece wK{Color::White, PieceKind::King}, bK{Color::Black, PieceKind::King};
const Piece wQ{Color::White, PieceKind::Queen};
const Piece wR{Color::White, PieceKind::Rook}, bR{Color::Black, PieceKind::Rook};
const Piece wB{Color::White, PieceKind::Bishop}, bB{Color::Black, PieceKind::Bishop};
const Piece wP{Color::White, PieceKind::Pawn}, bP{Color::Black, PieceKind::Pawn};

// Checkmate gadget for White, 5x10. No gadget piece can move; a White queen
// entering on a3 mates with Qd6. The harness king sits boxed in the far
// corner: a9 is blocked, b10 stands on its promotion rank, b9 is guarded by
// the gadget pawn c10, so the harness contributes no moves and no attacks.
const Figure kCheckmateFigure{
    {5, 10},
    stip::Kind::Direct,
    {
        {bK, "d9"},
        {wP, "a1 b2 c3 d4 e5 e6 e7 a4 b5 c6 c7"},
        {bP, "a2 b3 c4 d5 a5 b6 c8 c9 c10 d10 e8 e9 e10"},
    },
    {{Color::White, "a3", "a3", "d6", "", "", false, "d6", "d9"}},
    "",
    {{wK, "a10"}, {wP, "a9 b10"}},
};

// Reflexmate gadget for White, 8x12. Queen enters on a3; after Qe7 the f8
// pawn's capture is Black's one mating move, the g7 bishop striking through
// the vacated f8. Harness: Black king boxed at h1 (rank-1 pawns are inert).
const Figure kReflexmateFigure{
    {8, 12},
    stip::Kind::Reflex,
    {
        {wK, "e9"},
        {wP, "a1 b2 c3 d4 a4 b5 c6 d8 f5 h5"},
        {bP, "a2 b3 c4 d5 a5 b6 c7 d9 e10 e11 e12 f6 f7 f8 f9 g8 g9 g10 g11 g12 h6 h7 h8"},
        {bB, "f11 g7"},
    },
    {{Color::White, "a3", "a3", "e7", "f8", "e7", false, "g7", "e9"}},
    "",
    {{bK, "h1"}, {bP, "g1 g2 h2"}},
};

// Combined selfmate gadget, 15x16. Only the rooks on m4 and m13 can move and
// every move of either mates by discovery (n3-m4-l5, n14-m13-l12). The white
// entry is scripted; the black entry is its mirror image.
const Figure kSelfmateFigure{
    {15, 16},
    stip::Kind::Self,
    {
        {wK, "l5"},
        {bK, "l12"},
        {wP, "a3 b2 c1 d2 a6 b5 c4 a10 b11 c12 a13 b14 c15 d14 m1 o1 "
             "l9 l10 l11 n9 n10 n11 n12 m12 m14 m15 o13 o14 o15"},
        {bP, "a4 b3 c2 d3 a7 b6 c5 a11 b12 c13 a14 b15 c16 d15 "
             "l6 l7 l8 n5 n6 n7 n8 m2 m3 m5 o2 o3 o4 m16 o16"},
        {bB, "m7 n3"},
        {bR, "m4 n4"},
        {wB, "m10 n14"},
        {wR, "m13 n13"},
    },
    {
        {Color::White, "a5", "a5", "c3", "m4", "d4", false, "n3", "l5"},
        {Color::Black, "a12", "a12", "c14", "m13", "d13", true, "n14", "l12"},
    },
    "m4 m13",
    {},
};

// Combined semi-reflexmate gadget, 15x18. Only the White rook on m15 can
// move (each move mates and loses); the White entry relies on Black's reflex
// obligation, the Black entry on a forced interposition that mates.
const Figure kSemiReflexmateFigure{
    {15, 18},
    stip::Kind::SemiReflex,
    {
        {wK, "l7"},
        {bK, "l14"},
        {wP, "a12 b13 c14 a15 b16 c17 d16 m3 o3 l11 l12 l13 n11 n12 n13 n14 "
             "m14 m16 m17 o15 o16 o17 g1 h2 i3 j4 k6 j1 k2"},
        {bP, "a13 b14 c15 a16 b17 c18 d17 l8 l9 l10 n7 n8 n9 n10 m4 m5 m7 "
             "o4 o5 o6 m6 n6 m18 o18 f1 g2 h3 i4 j5 i1 j2 k3 k7"},
        {bB, "m9 n5"},
        {wB, "m12 n16"},
        {wR, "m15 n15"},
    },
    {
        {Color::White, "h1", "h1", "l5", "m6", "l5", false, "n5", "l7"},
        {Color::Black, "a14", "a14", "c16", "m15", "d15", false, "n16", "l14"},
    },
    "m15",
    {},
};

const Figure& figure_for(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::CheckmateWhite:
        case GadgetKind::CheckmateBlack: return kCheckmateFigure;
        case GadgetKind::ReflexmateWhite:
        case GadgetKind::ReflexmateBlack: return kReflexmateFigure;
        case GadgetKind::Selfmate: return kSelfmateFigure;
        case GadgetKind::SemiReflexmate: return kSemiReflexmateFigure;
    }
    throw ValidationError("unknown gadget kind");
}

bool is_black_variant(GadgetKind kind) {
    return kind == GadgetKind::CheckmateBlack || kind == GadgetKind::ReflexmateBlack;
}

}  // namespace

std::string kind_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::CheckmateWhite: return "checkmate_white";
        case GadgetKind::CheckmateBlack: return "checkmate_black";
        case GadgetKind::ReflexmateWhite: return "reflexmate_white";
        case GadgetKind::ReflexmateBlack: return "reflexmate_black";
        case GadgetKind::Selfmate: return "selfmate";
        case GadgetKind::SemiReflexmate: return "semi_reflexmate";
    }
    return "?";
}

GadgetKind kind_from_name(const std::string& name) {
    std::string n = name;
    std::replace(n.begin(), n.end(), '-', '_');
    for (GadgetKind k : all_kinds())
        if (kind_name(k) == n) return k;
    throw ParseError("unknown gadget kind '" + name + "'", 0);
}

std::vector<GadgetKind> all_kinds() {
    return {GadgetKind::CheckmateWhite,  GadgetKind::CheckmateBlack,
            GadgetKind::ReflexmateWhite, GadgetKind::ReflexmateBlack,
            GadgetKind::Selfmate,        GadgetKind::SemiReflexmate};
}

GadgetSpec build_gadget(GadgetKind kind, Square anchor, BoardSize board) {
    const Figure& fig = figure_for(kind);
    bool mirror = is_black_variant(kind);
    int df = anchor.file - 1;
    int dr = anchor.rank - 1;

    auto place = [&](Square s) {
        if (mirror) s = flip_square(s, fig.board);
        Square t{s.file + df, s.rank + dr};
        if (t.file < 1 || t.file > board.files || t.rank < 1 || t.rank > board.ranks)
            throw ValidationError("gadget footprint overflows the board at " + square_name(t));
        return t;
    };
    auto recolor = [&](Piece p) { return mirror ? Piece{opposite(p.color), p.kind} : p; };

    GadgetSpec spec;
    spec.kind = kind;
    spec.anchor = anchor;
    spec.board = board;
    spec.stipulation_kind = fig.kind;
    spec.forcing_side = mirror ? Color::Black : Color::White;

    for (const auto& [piece, list] : fig.groups)
        for (Square s : sqs(list)) {
            Square t = place(s);
            spec.pieces.push_back({t, recolor(piece)});
            spec.footprint.push_back(t);
        }
    for (const auto& [piece, list] : fig.harness)
        for (Square s : sqs(list)) spec.harness.push_back({place(s), recolor(piece)});
    for (Square s : sqs(fig.exceptions)) spec.exception_squares.push_back(place(s));

    for (const FigureEntry& fe : fig.entries) {
        EntryPoint e;
        e.color = mirror ? opposite(fe.color) : fe.color;
        e.square = place(sq(fe.square));
        e.line.push_back({place(sq(fe.line_from1)), place(sq(fe.line_to1))});
        if (!fe.line_from2.empty())
            e.line.push_back({place(sq(fe.line_from2)), place(sq(fe.line_to2))});
        e.derived = fe.derived;
        e.mate_attacker = place(sq(fe.attacker));
        e.mated_king = place(sq(fe.king));
        spec.entries.push_back(std::move(e));
    }
    spec.scripted_line = spec.entries.front().line;
    return spec;
}

GadgetSpec build_gadget(GadgetKind kind) {
    return build_gadget(kind, Square{1, 1}, figure_for(kind).board);
}

Position merge_into(const Position& p, const GadgetSpec& g) {
    BoardSketch sk = p.to_sketch();
    for (const auto& [square, piece] : g.pieces) sk.put(square, piece);
    return Position::finalize(sk);
}

Position harnessed_position(const GadgetSpec& g, Color side_to_move) {
    BoardSketch sk;
    sk.size = g.board;
    sk.side_to_move = side_to_move;
    for (const auto& [square, piece] : g.pieces) sk.put(square, piece);
    for (const auto& [square, piece] : g.harness) sk.put(square, piece);
    return Position::finalize(sk);
}

Position entered_position(const GadgetSpec& g, const EntryPoint& entry) {
    BoardSketch sk;
    sk.size = g.board;
    sk.side_to_move = entry.color;
    for (const auto& [square, piece] : g.pieces) sk.put(square, piece);
    for (const auto& [square, piece] : g.harness) sk.put(square, piece);
    sk.put(entry.square, Piece{entry.color, PieceKind::Queen});
    return Position::finalize(sk);
}

namespace {

stip::Stipulation gadget_stip(const GadgetSpec& g) {
    return stip::Stipulation{g.stipulation_kind, 1, g.forcing_side};
}

Move resolve(const Position& p, const ScriptedMove& sm) {
    for (const Move& m : p.legal_moves())
        if (m.from == sm.from && m.to == sm.to && (!m.promotion || *m.promotion == PieceKind::Queen))
            return m;
    throw IllegalMoveError("scripted move " + square_name(sm.from) + "-" + square_name(sm.to) +
                           " is not legal");
}

bool in_footprint(const GadgetSpec& g, Square s) {
    return std::find(g.footprint.begin(), g.footprint.end(), s) != g.footprint.end();
}

bool is_exception(const GadgetSpec& g, Square s) {
    return std::find(g.exception_squares.begin(), g.exception_squares.end(), s) !=
           g.exception_squares.end();
}

Check check_immobility(const GadgetSpec& g) {
    Check c{"immobility", true, {}};
    for (Color stm : {Color::White, Color::Black}) {
        Position pos = harnessed_position(g, stm);
        for (const Move& m : pos.legal_moves()) {
            if (in_footprint(g, m.from) && !is_exception(g, m.from)) {
                c.pass = false;
                c.witnesses.push_back(color_name(stm) + ": " + format_move_bare(pos, m));
            }
        }
    }
    if (c.pass)
        c.witnesses.push_back("0 mobile gadget pieces outside the exception set");
    return c;
}

Check check_exception_moves_mate(const GadgetSpec& g) {
    Check c{"exception-moves-mate", true, {}};
    if (g.exception_squares.empty()) {
        c.witnesses.push_back("no exception pieces");
        return c;
    }
    for (Square s : g.exception_squares) {
        Position probe = harnessed_position(g, Color::White);
        auto piece = probe.piece_at(s);
        if (!piece) {
            c.pass = false;
            c.witnesses.push_back("no piece on exception square " + square_name(s));
            continue;
        }
        Position pos = harnessed_position(g, piece->color);
        int count = 0;
        for (const Move& m : pos.legal_moves()) {
            if (m.from != s) continue;
            count++;
            if (!pos.apply_unchecked(m).is_checkmate()) {
                c.pass = false;
                c.witnesses.push_back("non-mating " + format_move_bare(pos, m));
            }
        }
        if (count == 0) {
            c.pass = false;
            c.witnesses.push_back("exception piece on " + square_name(s) + " cannot move");
        } else {
            c.witnesses.push_back(square_name(s) + ": " + std::to_string(count) +
                                  " moves, all mate");
        }
    }
    return c;
}

Check check_entry_line(const GadgetSpec& g, const EntryPoint& e) {
    Check c{"entry-line-" + color_name(e.color) + "-" + square_name(e.square), true, {}};
    try {
        Position pos = entered_position(g, e);
        Move first = resolve(pos, e.line[0]);
        std::string text = format_move(pos, first);
        Position after = pos.apply_unchecked(first);
        c.witnesses.push_back(text);

        std::vector<Move> reply_set = playable_moves(after, gadget_stip(g));
        std::vector<Move> expected;
        if (e.line.size() > 1) expected.push_back(resolve(after, e.line[1]));
        bool same = reply_set.size() == expected.size();
        for (const Move& m : expected)
            same = same && std::find(reply_set.begin(), reply_set.end(), m) != reply_set.end();
        if (!same) {
            c.pass = false;
            c.witnesses.push_back("reply set has " + std::to_string(reply_set.size()) +
                                  " moves, expected " + std::to_string(expected.size()));
            for (const Move& m : reply_set) c.witnesses.push_back("  " + format_move_bare(after, m));
        } else if (!expected.empty()) {
            c.witnesses.push_back("forced " + format_move(after, expected[0]));
        }
    } catch (const Error& err) {
        c.pass = false;
        c.witnesses.push_back(err.what());
    }
    return c;
}

Check check_mate_confirmation(const GadgetSpec& g, const EntryPoint& e) {
    Check c{"mate-confirmation-" + color_name(e.color) + "-" + square_name(e.square), true, {}};
    try {
        Position pos = entered_position(g, e);
        for (const ScriptedMove& sm : e.line) pos = pos.apply_unchecked(resolve(pos, sm));
        if (!pos.is_checkmate()) {
            c.pass = false;
            c.witnesses.push_back("final position is not checkmate");
            return c;
        }
        if (!pos.square_attacks(e.mate_attacker, e.mated_king)) {
            c.pass = false;
            c.witnesses.push_back("attacker " + square_name(e.mate_attacker) +
                                  " does not strike " + square_name(e.mated_king));
            return c;
        }
        c.witnesses.push_back("mate by " + square_name(e.mate_attacker) + " against king on " +
                              square_name(e.mated_king));
    } catch (const Error& err) {
        c.pass = false;
        c.witnesses.push_back(err.what());
    }
    return c;
}

// Before any entry the White rook moves are merely legal, not reflex-forced:
// the obligation of this gadget binds Black alone, yet each rook move mates
// and therefore loses at once.
Check check_no_white_obligation(const GadgetSpec& g) {
    Check c{"white-obligation-absence", true, {}};
    Position pos = harnessed_position(g, g.forcing_side);
    auto legal = pos.legal_moves();
    auto playable = playable_moves(pos, gadget_stip(g));
    if (playable != legal) {
        c.pass = false;
        c.witnesses.push_back("playable set was filtered despite semi-reflex obligation");
        return c;
    }
    for (const Move& m : legal) {
        if (!is_exception(g, m.from) || !pos.apply_unchecked(m).is_checkmate()) {
            c.pass = false;
            c.witnesses.push_back("unexpected move " + format_move_bare(pos, m));
        } else {
            c.witnesses.push_back("losing move " + format_move(pos, m));
        }
    }
    return c;
}

}  // namespace

VerificationReport verify_gadget(const GadgetSpec& g) {
    VerificationReport report;
    report.kind = g.kind;
    report.checks.push_back(check_immobility(g));
    report.checks.push_back(check_exception_moves_mate(g));
    for (const EntryPoint& e : g.entries) {
        report.checks.push_back(check_entry_line(g, e));
        report.checks.push_back(check_mate_confirmation(g, e));
    }
    if (g.kind == GadgetKind::SemiReflexmate)
        report.checks.push_back(check_no_white_obligation(g));
    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const Check& c) { return c.pass; });
    return report;
}

VerificationReport verify_gadget(GadgetKind kind) { return verify_gadget(build_gadget(kind)); }

nlohmann::json gadget_to_json(const GadgetSpec& g) {
    nlohmann::json j;
    j["kind"] = kind_name(g.kind);
    j["anchor"] = square_name(g.anchor);
    j["board"] = std::to_string(g.board.files) + "x" + std::to_string(g.board.ranks);
    j["pieces"] = nlohmann::json::array();
    for (const auto& [square, piece] : g.pieces) {
        std::string kind;
        switch (piece.kind) {
            case PieceKind::King: kind = "king"; break;
            case PieceKind::Queen: kind = "queen"; break;
            case PieceKind::Rook: kind = "rook"; break;
            case PieceKind::Bishop: kind = "bishop"; break;
            case PieceKind::Knight: kind = "knight"; break;
            case PieceKind::Pawn: kind = "pawn"; break;
        }
        j["pieces"].push_back(
            {{"square", square_name(square)}, {"color", color_name(piece.color)}, {"kind", kind}});
    }
    j["entries"] = nlohmann::json::array();
    for (const EntryPoint& e : g.entries)
        j["entries"].push_back({{"color", color_name(e.color)}, {"square", square_name(e.square)}});

    // Primary scripted line rendered with markers by playing it out.
    j["line"] = nlohmann::json::array();
    Position pos = entered_position(g, g.entries.front());
    for (const ScriptedMove& sm : g.entries.front().line) {
        Move m = resolve(pos, sm);
        j["line"].push_back(format_move(pos, m));
        pos = pos.apply_unchecked(m);
    }
    return j;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["kind"] = kind_name(r.kind);
    j["all_pass"] = r.all_pass;
    j["checks"] = nlohmann::json::array();
    for (const Check& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}});
    return j;
}

std::string report_to_text(const VerificationReport& r) {
    std::string out = "gadget " + kind_name(r.kind) + ": " + (r.all_pass ? "PASS" : "FAIL") + "\n";
    for (const Check& c : r.checks) {
        out += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.name + "\n";
        for (const auto& w : c.witnesses) out += "      " + w + "\n";
    }
    return out;
}

}  // namespace gadgets
