#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "stip/stipulation.hpp"

namespace stip {

struct SearchOptions {
    long long node_cap = 10'000'000;
    bool deterministic = true;  // canonical ordering of keys, tree, lines
    int workers = 1;
    bool full_tree = false;  // keep every proving continuation, not just one
    bool use_memo = true;
    bool collect_refutations = true;
};

enum class SolveStatus { Solved, NotSolved, Unknown };  // Unknown = node cap exceeded

struct TreeNode {
    chess::Move move;
    std::string text;  // movetext including +/# marker
    std::vector<TreeNode> children;
};

enum class RefutationReason { ForcingSideDeliversMate, Stalemate, HorizonExceeded };
std::string reason_name(RefutationReason r);

struct Refutation {
    RefutationReason reason = RefutationReason::HorizonExceeded;
    // Opponent strategy line, starting with the forced side's reply to the try.
    std::vector<std::string> line;
};

struct SearchStats {
    long long nodes = 0;
    long long elapsed_ms = 0;
};

struct SolutionTree {
    std::string root_position;  // canonical xFEN of the solved position
    Stipulation stipulation;
    SolveStatus status = SolveStatus::NotSolved;
    std::vector<chess::Move> keys;
    std::vector<std::string> key_texts;
    bool cooked = false;  // more than one key
    std::vector<TreeNode> variations;
    std::map<std::string, Refutation> refutations;  // tried movetext -> refutation
    SearchStats stats;

    bool solved() const { return status == SolveStatus::Solved; }
};

// Decide the stipulation from p (forcing side must be on move) and prove it:
// all keys, the variation tree, and refutations of the failing first moves.
SolutionTree solve(const chess::Position& p, const Stipulation& stip,
                   const SearchOptions& opts = {});

struct RefuteResult {
    bool is_key = false;
    Refutation refutation;  // meaningful when !is_key
};

RefuteResult refute(const chess::Position& p, const Stipulation& stip,
                    const chess::Move& try_move, const SearchOptions& opts = {});

nlohmann::json solution_to_json(const SolutionTree& t);
std::string solution_to_text(const SolutionTree& t, bool include_refutations);

}  // namespace stip
