#include "g3/g3.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace g3 {

using chess::ValidationError;

bool eval_dnf(const DnfFormula& f, const Assignment& a) {
    for (const auto& clause : f.clauses) {
        bool all = true;
        for (const auto& lit : clause) {
            auto it = a.find(lit.var);
            if (it == a.end()) throw ValidationError("unbound variable '" + lit.var + "'");
            if (it->second == lit.negated) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

void G3Instance::validate() const {
    std::set<std::string> xs(vars_I.begin(), vars_I.end());
    std::set<std::string> ys(vars_II.begin(), vars_II.end());
    if (xs.size() != vars_I.size() || ys.size() != vars_II.size())
        throw ValidationError("duplicate variable names");
    for (const auto& v : xs)
        if (ys.count(v)) throw ValidationError("variable '" + v + "' owned by both players");
    auto check_formula = [&](const DnfFormula& f, const char* name) {
        for (const auto& clause : f.clauses) {
            if (strict_12dnf && clause.size() > 12)
                throw ValidationError(std::string(name) + " clause exceeds 12 literals");
            for (const auto& lit : clause)
                if (!xs.count(lit.var) && !ys.count(lit.var))
                    throw ValidationError(std::string(name) + " uses unknown variable '" +
                                          lit.var + "'");
        }
    };
    check_formula(i_lose, "I-LOSE");
    check_formula(ii_lose, "II-LOSE");
}

namespace {

// Bit-indexed internals: variables 0..n-1, player I owns [0, |X|).
struct Compiled {
    std::vector<std::string> names;
    int n_I = 0;
    std::vector<std::vector<std::pair<int, bool>>> lose[2];  // per player: clauses of (var, negated)

    static Compiled from(const G3Instance& inst) {
        Compiled c;
        c.names = inst.vars_I;
        c.names.insert(c.names.end(), inst.vars_II.begin(), inst.vars_II.end());
        c.n_I = static_cast<int>(inst.vars_I.size());
        auto compile = [&](const DnfFormula& f) {
            std::vector<std::vector<std::pair<int, bool>>> out;
            for (const auto& clause : f.clauses) {
                std::vector<std::pair<int, bool>> cc;
                for (const auto& lit : clause) {
                    auto it = std::find(c.names.begin(), c.names.end(), lit.var);
                    cc.emplace_back(static_cast<int>(it - c.names.begin()), lit.negated);
                }
                out.push_back(std::move(cc));
            }
            return out;
        };
        c.lose[0] = compile(inst.i_lose);
        c.lose[1] = compile(inst.ii_lose);
        return c;
    }

    int n() const { return static_cast<int>(names.size()); }

    bool lose_true(int player, std::uint32_t mask) const {
        for (const auto& clause : lose[player]) {
            bool all = true;
            for (auto [var, neg] : clause)
                if (((mask >> var) & 1u) == static_cast<std::uint32_t>(neg)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    }

    std::uint32_t mask_of(const Assignment& a) const {
        std::uint32_t mask = 0;
        for (int i = 0; i < n(); i++) {
            auto it = a.find(names[static_cast<std::size_t>(i)]);
            if (it == a.end())
                throw ValidationError("assignment misses variable '" +
                                      names[static_cast<std::size_t>(i)] + "'");
            if (it->second) mask |= 1u << i;
        }
        return mask;
    }

    // mover's variables as bit indices
    std::pair<int, int> own_range(int player) const {
        return player == 0 ? std::pair{0, n_I} : std::pair{n_I, n()};
    }
};

}  // namespace

std::vector<G3State> g3_moves(const G3Instance& inst, const G3State& s) {
    inst.validate();
    Compiled c = Compiled::from(inst);
    std::uint32_t mask = c.mask_of(s.assignment);
    int mover = s.turn - 1;
    auto [lo, hi] = c.own_range(mover);
    std::vector<G3State> out;
    for (int v = lo; v < hi; v++) {
        std::uint32_t flipped = mask ^ (1u << v);
        if (c.lose_true(mover, flipped)) continue;
        G3State next = s;
        next.turn = s.turn == 1 ? 2 : 1;
        const std::string& name = c.names[static_cast<std::size_t>(v)];
        next.assignment[name] = !s.assignment.at(name);
        out.push_back(std::move(next));
    }
    return out;
}

namespace {

struct Graph {
    Compiled c;
    int n = 0;
    // state id = turn (0 = player I) * 2^n + mask
    std::vector<char> win;

    int id(int turn, std::uint32_t mask) const {
        return turn * (1 << n) + static_cast<int>(mask);
    }

    void solve() {
        int total = 2 << n;
        win.assign(static_cast<std::size_t>(total), 0);
        std::vector<int> succ_left(static_cast<std::size_t>(total), 0);
        std::deque<int> queue;

        for (int turn = 0; turn < 2; turn++) {
            auto [lo, hi] = c.own_range(turn);
            for (std::uint32_t mask = 0; mask < (1u << n); mask++) {
                int moves = 0;
                for (int v = lo; v < hi; v++)
                    if (!c.lose_true(turn, mask ^ (1u << v))) moves++;
                int s = id(turn, mask);
                succ_left[static_cast<std::size_t>(s)] = moves;
                if (turn == 1 && moves == 0) {  // player II stuck: player I wins
                    win[static_cast<std::size_t>(s)] = 1;
                    queue.push_back(s);
                }
            }
        }

        // Predecessors of (turn', mask): the other player flipped one own
        // variable, and the move is legal iff that player's LOSE formula is
        // false under mask, the assignment after the move.
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            int turn = s >> n;
            auto mask = static_cast<std::uint32_t>(s & ((1 << n) - 1));
            int prev_turn = 1 - turn;
            if (c.lose_true(prev_turn, mask)) continue;  // nobody could move here
            auto [lo, hi] = c.own_range(prev_turn);
            for (int v = lo; v < hi; v++) {
                int pred = id(prev_turn, mask ^ (1u << v));
                if (win[static_cast<std::size_t>(pred)]) continue;
                if (prev_turn == 0) {
                    win[static_cast<std::size_t>(pred)] = 1;
                    queue.push_back(pred);
                } else if (--succ_left[static_cast<std::size_t>(pred)] == 0) {
                    win[static_cast<std::size_t>(pred)] = 1;
                    queue.push_back(pred);
                }
            }
        }
    }
};

Graph build_graph(const G3Instance& inst, int var_limit) {
    inst.validate();
    Graph g;
    g.c = Compiled::from(inst);
    g.n = g.c.n();
    if (g.n > var_limit)
        throw ValidationError("instance has " + std::to_string(g.n) +
                              " variables, limit is " + std::to_string(var_limit));
    g.solve();
    return g;
}

}  // namespace

G3Result solve_g3(const G3Instance& inst, const G3State& s, int var_limit) {
    Graph g = build_graph(inst, var_limit);
    std::uint32_t mask = g.c.mask_of(s.assignment);
    G3Result result;
    result.states = 2ll << g.n;
    result.verdict = g.win[static_cast<std::size_t>(g.id(s.turn - 1, mask))]
                         ? G3Verdict::Player1ForcesWin
                         : G3Verdict::Player1CannotForceWin;
    return result;
}

bool audit_strategy(const G3Instance& inst, int var_limit) {
    Graph g = build_graph(inst, var_limit);
    int n = g.n;
    for (int turn = 0; turn < 2; turn++) {
        auto [lo, hi] = g.c.own_range(turn);
        for (std::uint32_t mask = 0; mask < (1u << n); mask++) {
            bool w = g.win[static_cast<std::size_t>(g.id(turn, mask))];
            std::vector<std::uint32_t> succs;
            for (int v = lo; v < hi; v++) {
                std::uint32_t f = mask ^ (1u << v);
                if (!g.c.lose_true(turn, f)) succs.push_back(f);
            }
            bool expect;
            if (turn == 0) {
                expect = false;
                for (auto f : succs)
                    if (g.win[static_cast<std::size_t>(g.id(1, f))]) expect = true;
            } else {
                expect = true;  // stuck player II loses; otherwise all moves must stay winning
                for (auto f : succs)
                    if (!g.win[static_cast<std::size_t>(g.id(0, f))]) expect = false;
            }
            if (w != expect) return false;
        }
    }
    return true;
}

G3Problem problem_from_json(const nlohmann::json& j) {
    G3Problem p;
    auto read_formula = [](const nlohmann::json& jf) {
        DnfFormula f;
        for (const auto& jc : jf) {
            std::vector<Literal> clause;
            for (const auto& jl : jc)
                clause.push_back(Literal{jl.at("var").get<std::string>(),
                                         jl.value("neg", false)});
            f.clauses.push_back(std::move(clause));
        }
        return f;
    };
    p.instance.vars_I = j.at("variables_I").get<std::vector<std::string>>();
    p.instance.vars_II = j.at("variables_II").get<std::vector<std::string>>();
    p.instance.i_lose = read_formula(j.at("i_lose"));
    p.instance.ii_lose = read_formula(j.at("ii_lose"));
    if (j.contains("strict_12dnf")) p.instance.strict_12dnf = j.at("strict_12dnf").get<bool>();
    p.state.turn = j.at("turn").get<int>();
    if (p.state.turn != 1 && p.state.turn != 2)
        throw ValidationError("turn must be 1 or 2");
    for (const auto& [key, value] : j.at("assignment").items())
        p.state.assignment[key] = value.get<bool>();
    p.instance.validate();
    Compiled::from(p.instance).mask_of(p.state.assignment);  // assignment totality
    return p;
}

nlohmann::json problem_to_json(const G3Problem& p) {
    auto write_formula = [](const DnfFormula& f) {
        nlohmann::json jf = nlohmann::json::array();
        for (const auto& clause : f.clauses) {
            nlohmann::json jc = nlohmann::json::array();
            for (const auto& lit : clause) jc.push_back({{"var", lit.var}, {"neg", lit.negated}});
            jf.push_back(jc);
        }
        return jf;
    };
    nlohmann::json j;
    j["variables_I"] = p.instance.vars_I;
    j["variables_II"] = p.instance.vars_II;
    j["i_lose"] = write_formula(p.instance.i_lose);
    j["ii_lose"] = write_formula(p.instance.ii_lose);
    j["turn"] = p.state.turn;
    j["assignment"] = nlohmann::json::object();
    for (const auto& [name, value] : p.state.assignment) j["assignment"][name] = value;
    return j;
}

}  // namespace g3
