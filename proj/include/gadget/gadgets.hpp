#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "core/position.hpp"
#include "core/xfen.hpp"
#include "stip/stipulation.hpp"

namespace gadgets {

// The black checkmate/reflexmate variants are the white figures vertically
// mirrored with colors swapped. Selfmate and semi-reflexmate are combined
// white+black gadgets and have no mirrored variant.
enum class GadgetKind {
    CheckmateWhite,
    CheckmateBlack,
    ReflexmateWhite,
    ReflexmateBlack,
    Selfmate,
    SemiReflexmate,
};

std::string kind_name(GadgetKind k);
GadgetKind kind_from_name(const std::string& name);  // throws ParseError
std::vector<GadgetKind> all_kinds();

struct PlacedPiece {
    chess::Square square;
    chess::Piece piece;
};

struct ScriptedMove {
    chess::Square from;
    chess::Square to;
};

struct EntryPoint {
    chess::Color color;        // color of the entering queen
    chess::Square square;      // must be empty in the placement
    std::vector<ScriptedMove> line;  // queen move, then the scripted reply
    bool derived = false;      // filled in by symmetry rather than scripted
    chess::Square mate_attacker;  // piece whose attack delivers the final mate
    chess::Square mated_king;
};

struct GadgetSpec {
    GadgetKind kind;
    chess::Square anchor;  // figures use a1
    chess::BoardSize board;
    std::vector<PlacedPiece> pieces;
    std::vector<chess::Square> footprint;  // occupied gadget squares
    std::vector<EntryPoint> entries;
    std::vector<ScriptedMove> scripted_line;  // primary (first entry's) line
    std::vector<chess::Square> exception_squares;  // pieces allowed to move
    std::vector<PlacedPiece> harness;  // boxed king completing the position
    stip::Kind stipulation_kind;
    chess::Color forcing_side = chess::Color::White;
};

// Exact translated placement; the anchor shifts every square by
// (anchor - a1). Throws ValidationError when the footprint overflows.
GadgetSpec build_gadget(GadgetKind kind, chess::Square anchor, chess::BoardSize board);
GadgetSpec build_gadget(GadgetKind kind);  // figure board, anchor a1

// Merge the gadget's pieces into an existing position. Errors on square
// collisions or a second king of either color.
chess::Position merge_into(const chess::Position& p, const GadgetSpec& g);

// Gadget plus its harness (when the figure lacks a king), ready to analyze.
chess::Position harnessed_position(const GadgetSpec& g, chess::Color side_to_move);
// Harnessed position with the entering queen placed on an entry square.
chess::Position entered_position(const GadgetSpec& g, const EntryPoint& entry);

struct Check {
    std::string name;
    bool pass = false;
    std::vector<std::string> witnesses;
};

struct VerificationReport {
    GadgetKind kind;
    std::vector<Check> checks;
    bool all_pass = false;
};

// The kind-specific battery:
//   (a) immobility of gadget pieces outside the exception set, either side to move
//   (b) every legal move of every exception piece checkmates
//   (c) entry lines are legal and force exactly the scripted reply
//   (d) the scripted terminal move mates, with the named attacker on the path
// plus, for the semi-reflexmate gadget, the absence of a White obligation.
VerificationReport verify_gadget(const GadgetSpec& g);
VerificationReport verify_gadget(GadgetKind kind);

nlohmann::json gadget_to_json(const GadgetSpec& g);
nlohmann::json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace gadgets
