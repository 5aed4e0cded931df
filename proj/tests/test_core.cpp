#include <doctest.h>

#include "core/movetext.hpp"
#include "core/xfen.hpp"
#include "fixtures.hpp"

using namespace chess;

TEST_CASE("xfen round-trips the Pauly position with exact placement") {
    Position p = parse_xfen(fixtures::kPauly);
    CHECK(p.size() == BoardSize{8, 8});
    CHECK(p.side_to_move() == Color::White);
    CHECK(p.piece_count() == 14);
    CHECK(p.piece_at(Square{1, 8}) == Piece{Color::White, PieceKind::King});
    CHECK(p.piece_at(Square{2, 8}) == Piece{Color::White, PieceKind::Bishop});
    CHECK(p.piece_at(Square{6, 8}) == Piece{Color::White, PieceKind::Knight});
    CHECK(p.piece_at(Square{8, 6}) == Piece{Color::Black, PieceKind::King});
    CHECK(p.piece_at(Square{5, 7}) == Piece{Color::Black, PieceKind::Pawn});
    CHECK(p.piece_at(Square{8, 1}) == Piece{Color::Black, PieceKind::Bishop});
    CHECK(p.piece_at(Square{7, 2}) == Piece{Color::White, PieceKind::Bishop});
    CHECK(p.piece_at(Square{5, 5}) == Piece{Color::White, PieceKind::Pawn});
    CHECK(serialize_xfen(p) == fixtures::kPauly);
}

TEST_CASE("plain 6-field FEN implies 8x8 and serializes with the prefix") {
    Position p = parse_xfen("KB3N2/P1P1p1P1/5P1k/4P2p/7P/8/6B1/7b w - - 0 1");
    CHECK(serialize_xfen(p) == fixtures::kPauly);
}

TEST_CASE("xfen rejects malformed and invariant-violating input") {
    // Two black kings (and no white king).
    CHECK_THROWS_AS(parse_xfen("8x8 B1B2N2/P1P1p1Pk/5P1p/4P2P/7P/7k/6Bb/8 w - - 0 1"),
                    ValidationError);
    CHECK_THROWS_AS(parse_xfen("garbage"), ParseError);
    CHECK_THROWS_AS(parse_xfen("8x8 8/8/8/8/8/8/8/8 w - - 0"), ParseError);
    // Castling field must be '-'.
    CHECK_THROWS_AS(
        parse_xfen("8x8 rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1"),
        ValidationError);
    // Side not to move in check.
    CHECK_THROWS_AS(parse_xfen("8x8 4k3/8/8/8/8/8/4R3/4K3 w - - 0 1"), ValidationError);
    // Rank too wide / too narrow.
    CHECK_THROWS_AS(parse_xfen("8x8 9/8/8/8/8/8/8/8 w - - 0 1"), ParseError);
    CHECK_THROWS_AS(parse_xfen("8x8 7/8/8/8/8/8/8/8 w - - 0 1"), ParseError);
    // Bad en-passant square: no pawn behind it.
    CHECK_THROWS_AS(parse_xfen("8x8 4k3/8/8/8/8/8/8/4K3 b - e3 0 1"), ValidationError);
    // Board size limits.
    CHECK_THROWS_AS(parse_xfen("3x8 3k/3/3/3/3/3/3/2K w - - 0 1"), ValidationError);
}

TEST_CASE("parse error reports the offending offset") {
    try {
        parse_xfen("8x8 KB3N2/P1P1x1P1/5P1k/4P2p/7P/8/6B1/7b w - - 0 1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 14);  // the 'x' inside the placement
    }
}

TEST_CASE("empty board plus two kings round-trips") {
    std::string text = "8x8 7k/8/8/8/8/8/8/K7 w - - 0 1";
    CHECK(serialize_xfen(parse_xfen(text)) == text);
}

TEST_CASE("en-passant field round-trips when consistent") {
    Position p = fixtures::play(fixtures::pos(fixtures::kInitial), {"e4"});
    CHECK(p.ep_target() == Square{5, 3});
    std::string text = serialize_xfen(p);
    CHECK(text.find(" e3 ") != std::string::npos);
    CHECK(parse_xfen(text) == p);
}

TEST_CASE("wide boards use letter files up to z") {
    Position p = parse_xfen("26x4 k25/26/26/K25 w - - 0 1");
    CHECK(p.size().files == 26);
    CHECK(square_name(Square{26, 4}) == "z4");
    CHECK(serialize_xfen(p) == "26x4 k25/26/26/K25 w - - 0 1");
}

TEST_CASE("movetext formats and parses both canonical and shorthand forms") {
    Position p = fixtures::pos(fixtures::kPauly);
    Move key = parse_move(p, "c8=N");
    CHECK(format_move(p, key) == "Pc7-c8=N");
    CHECK(parse_move(p, "Pc7-c8=N") == key);

    Position q = p.apply(key);
    Move mate = parse_move(q, "Bxg2#");
    CHECK(format_move(q, mate) == "Bh1xg2#");
    CHECK(mate.is_capture);

    CHECK_THROWS_AS(parse_move(p, "Qd1-d4"), ParseError);
    CHECK_THROWS_AS(parse_move(p, "zz"), ParseError);
}

TEST_CASE("movetext rejects ambiguous shorthand") {
    // Both knights can reach d5: "Nd5" alone is ambiguous.
    Position p = parse_xfen("8x8 4k3/8/8/8/8/2N1N3/8/4K3 w - - 0 1");
    CHECK_THROWS_AS(parse_move(p, "Nd5"), ParseError);
    CHECK(parse_move(p, "Nc3-d5").from == Square{3, 3});
}
