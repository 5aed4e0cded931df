#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace chess {

enum class Color : std::uint8_t { White = 0, Black = 1 };

constexpr Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }

enum class PieceKind : std::uint8_t { King = 1, Queen, Rook, Bishop, Knight, Pawn };

struct Piece {
    Color color;
    PieceKind kind;

    friend bool operator==(const Piece&, const Piece&) = default;
};

// 1-based coordinates; file 1 = 'a'. Boards go up to 26 files x 64 ranks.
struct Square {
    int file = 0;
    int rank = 0;

    friend bool operator==(const Square&, const Square&) = default;
    friend auto operator<=>(const Square&, const Square&) = default;
};

struct BoardSize {
    int files = 8;
    int ranks = 8;

    friend bool operator==(const BoardSize&, const BoardSize&) = default;
};

struct Move {
    Square from;
    Square to;
    std::optional<PieceKind> promotion;  // Queen/Rook/Bishop/Knight only
    bool is_capture = false;
    bool is_en_passant = false;

    friend bool operator==(const Move&, const Move&) = default;
};

// Canonical move order: ascending (from.file, from.rank, to.file, to.rank, promo Q<R<B<N).
int promotion_order(PieceKind k);
bool canonical_less(const Move& a, const Move& b);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; offset points at the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Structurally well-formed input that violates a position invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class IllegalMoveError : public Error {
public:
    using Error::Error;
};

char piece_letter(PieceKind k);
std::optional<PieceKind> piece_from_letter(char c);  // uppercase letters
std::string square_name(Square s);
std::string color_name(Color c);

}  // namespace chess
