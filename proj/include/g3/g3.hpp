#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/types.hpp"

namespace g3 {

struct Literal {
    std::string var;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

// Disjunction of conjunctions; empty clause list is false, an empty clause
// is true. Clause width is capped at 12 literals while strict_12dnf holds.
struct DnfFormula {
    std::vector<std::vector<Literal>> clauses;
};

using Assignment = std::map<std::string, bool>;

bool eval_dnf(const DnfFormula& f, const Assignment& a);  // throws on unbound variable

// Two-player formula game: player I owns X, player II owns Y. A move flips
// exactly one own variable and is legal only if the mover's LOSE formula is
// false afterwards; passing does not exist, so a stuck player loses.
struct G3Instance {
    std::vector<std::string> vars_I;
    std::vector<std::string> vars_II;
    DnfFormula i_lose;
    DnfFormula ii_lose;
    bool strict_12dnf = true;

    void validate() const;  // disjoint name sets, bound literals, clause width
};

struct G3State {
    int turn = 1;  // 1 = player I to move
    Assignment assignment;

    friend bool operator==(const G3State&, const G3State&) = default;
};

std::vector<G3State> g3_moves(const G3Instance& inst, const G3State& s);

enum class G3Verdict { Player1ForcesWin, Player1CannotForceWin };

struct G3Result {
    G3Verdict verdict = G3Verdict::Player1CannotForceWin;
    long long states = 0;

    bool player1_forces_win() const { return verdict == G3Verdict::Player1ForcesWin; }
};

// Full state graph (2 * 2^(|X|+|Y|) states) and the player-I attractor to
// states where player II is stuck; infinite play is a draw, not a win.
G3Result solve_g3(const G3Instance& inst, const G3State& s, int var_limit = 20);

// Audit the computed win set against its defining equations.
bool audit_strategy(const G3Instance& inst, int var_limit = 20);

struct G3Problem {
    G3Instance instance;
    G3State state;
};

// {variables_I, variables_II, i_lose, ii_lose, turn, assignment} with
// formulas as arrays of clauses, each clause an array of {var, neg}.
G3Problem problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const G3Problem& p);

}  // namespace g3
