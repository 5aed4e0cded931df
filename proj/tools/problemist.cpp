#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "core/xfen.hpp"
#include "g3/g3.hpp"
#include "gadget/gadgets.hpp"
#include "stip/solver.hpp"
#include "stip/unbounded.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitNotSolved = 1;
constexpr int kExitInputError = 2;

struct InputSource {
    std::string fen;
    std::string path;

    std::string read() const {
        if (!fen.empty() && !path.empty())
            throw chess::ValidationError("--fen and --input are mutually exclusive");
        if (!fen.empty()) return fen;
        if (path.empty()) throw chess::ValidationError("one of --fen or --input is required");
        std::ifstream in(path);
        if (!in) throw chess::ValidationError("cannot open '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

stip::Kind parse_kind_token(const std::string& text) {
    std::string t = text;
    while (!t.empty() && (t.back() == '#' || std::isdigit(static_cast<unsigned char>(t.back()))))
        t.pop_back();
    if (t == "" || t == "direct") return stip::Kind::Direct;
    if (t == "s" || t == "self") return stip::Kind::Self;
    if (t == "r" || t == "reflex") return stip::Kind::Reflex;
    if (t == "semi-r" || t == "semi-reflex") return stip::Kind::SemiReflex;
    throw chess::ParseError("unknown stipulation kind '" + text + "'", 0);
}

int run_solve(const InputSource& input, const std::string& stip_text, bool json, bool full_tree,
              bool all_keys, long long max_nodes, int workers) {
    chess::Position p = chess::parse_xfen(input.read());
    stip::Stipulation st = stip::parse_stipulation(stip_text);
    st.forcing_side = p.side_to_move();
    stip::SearchOptions opts;
    opts.node_cap = max_nodes;
    opts.workers = workers;
    opts.full_tree = full_tree;
    opts.collect_refutations = true;
    stip::SolutionTree tree = stip::solve(p, st, opts);
    if (json)
        std::cout << stip::solution_to_json(tree).dump(2) << "\n";
    else
        std::cout << stip::solution_to_text(tree, all_keys);
    return tree.solved() ? kExitSolved : kExitNotSolved;
}

int run_solve_unbounded(const InputSource& input, const std::string& stip_text,
                        const std::string& forcing, bool json, long long max_nodes) {
    chess::Position p = chess::parse_xfen(input.read());
    stip::Kind kind = parse_kind_token(stip_text);
    chess::Color side = p.side_to_move();
    if (forcing == "w")
        side = chess::Color::White;
    else if (forcing == "b")
        side = chess::Color::Black;
    else if (!forcing.empty())
        throw chess::ParseError("--forcing must be 'w' or 'b'", 0);
    stip::SearchOptions opts;
    opts.node_cap = max_nodes;
    stip::UnboundedResult r = stip::solve_unbounded(p, kind, side, opts);
    if (json) {
        nlohmann::json j;
        j["kind"] = stip::kind_name(kind);
        j["forcing_side"] = chess::color_name(side);
        j["verdict"] = r.forcing_side_wins() ? "forcing_side_wins" : "not_won_within_cap";
        j["truncated"] = r.truncated;
        j["states"] = r.states;
        j["elapsed_ms"] = r.elapsed_ms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (r.forcing_side_wins() ? "forcing side wins" : "not won within cap")
                  << (r.truncated ? " (truncated)" : "") << ", states " << r.states << "\n";
    }
    return r.forcing_side_wins() ? kExitSolved : kExitNotSolved;
}

gadgets::GadgetSpec build_from_flags(const std::string& kind_name, const std::string& anchor,
                                     const std::string& board) {
    gadgets::GadgetKind kind = gadgets::kind_from_name(kind_name);
    gadgets::GadgetSpec base = gadgets::build_gadget(kind);
    chess::Square a{1, 1};
    chess::BoardSize size = base.board;
    if (!anchor.empty()) {
        if (anchor.size() < 2 || anchor[0] < 'a' || anchor[0] > 'z')
            throw chess::ParseError("bad anchor '" + anchor + "'", 0);
        a.file = anchor[0] - 'a' + 1;
        a.rank = std::stoi(anchor.substr(1));
    }
    if (!board.empty()) {
        auto x = board.find('x');
        if (x == std::string::npos) throw chess::ParseError("bad board '" + board + "'", 0);
        size.files = std::stoi(board.substr(0, x));
        size.ranks = std::stoi(board.substr(x + 1));
    }
    return gadgets::build_gadget(kind, a, size);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized-board chess stipulation solver, gadget kit, and G3 solver"};
    app.require_subcommand(1);

    InputSource input;
    std::string stip_text, forcing, anchor, board, kind_name, g3_path;
    bool json = false, full_tree = false, all_keys = false, audit = false;
    long long max_nodes = 10'000'000;
    int workers = 1, g3_limit = 20;

    auto* solve = app.add_subcommand("solve", "solve a bounded stipulation");
    solve->add_option("--fen", input.fen, "inline xFEN");
    solve->add_option("--input", input.path, "file containing xFEN");
    solve->add_option("--stip", stip_text, "#n | s#n | r#n | semi-r#n")->required();
    solve->add_flag("--json", json);
    solve->add_flag("--full-tree", full_tree);
    solve->add_flag("--all-keys", all_keys, "also print refutations of every try");
    solve->add_option("--max-nodes", max_nodes);
    solve->add_option("--workers", workers);

    auto* unbounded = app.add_subcommand("solve-unbounded", "unbounded forced-win question");
    unbounded->add_option("--fen", input.fen, "inline xFEN");
    unbounded->add_option("--input", input.path, "file containing xFEN");
    unbounded->add_option("--stip", stip_text, "kind: # | s# | r# | semi-r# (horizon ignored)")
        ->required();
    unbounded->add_option("--forcing", forcing, "w | b (default: side to move)");
    unbounded->add_flag("--json", json);
    unbounded->add_option("--max-nodes", max_nodes);

    auto* gadget = app.add_subcommand("gadget", "gadget construction and verification");
    auto* gbuild = gadget->add_subcommand("build", "emit the translated placement");
    auto* gverify = gadget->add_subcommand("verify", "run the verification battery");
    auto* gexport = gadget->add_subcommand("export", "emit gadget JSON plus harnessed xFEN");
    for (auto* sub : {gbuild, gverify, gexport}) {
        sub->add_option("kind", kind_name, "gadget kind")->required();
        sub->add_flag("--json", json);
    }
    gbuild->add_option("--anchor", anchor, "translation anchor, e.g. c3");
    gbuild->add_option("--board", board, "board size, e.g. 10x14");

    auto* g3cmd = app.add_subcommand("g3", "formula game G3");
    auto* g3solve = g3cmd->add_subcommand("solve", "decide a G3 instance");
    g3solve->add_option("--input", g3_path, "instance JSON file")->required();
    g3solve->add_flag("--json", json);
    g3solve->add_flag("--audit", audit, "also audit the computed win set");
    g3solve->add_option("--limit", g3_limit, "variable count limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;  // usage errors are exit 2
    }

    try {
        if (solve->parsed())
            return run_solve(input, stip_text, json, full_tree, all_keys, max_nodes, workers);
        if (unbounded->parsed())
            return run_solve_unbounded(input, stip_text, forcing, json, max_nodes);
        if (gadget->parsed()) {
            gadgets::GadgetSpec spec = build_from_flags(kind_name, anchor, board);
            if (gbuild->parsed()) {
                std::cout << gadgets::gadget_to_json(spec).dump(2) << "\n";
                return kExitSolved;
            }
            if (gverify->parsed()) {
                gadgets::VerificationReport report = gadgets::verify_gadget(spec);
                if (json)
                    std::cout << gadgets::report_to_json(report).dump(2) << "\n";
                else
                    std::cout << gadgets::report_to_text(report);
                return report.all_pass ? kExitSolved : kExitNotSolved;
            }
            nlohmann::json j = gadgets::gadget_to_json(spec);
            j["xfen"] = chess::serialize_xfen(
                gadgets::harnessed_position(spec, chess::Color::White));
            std::cout << j.dump(2) << "\n";
            return kExitSolved;
        }
        if (g3cmd->parsed()) {
            std::ifstream in(g3_path);
            if (!in) throw chess::ValidationError("cannot open '" + g3_path + "'");
            nlohmann::json j = nlohmann::json::parse(in);
            g3::G3Problem problem = g3::problem_from_json(j);
            g3::G3Result r = g3::solve_g3(problem.instance, problem.state, g3_limit);
            bool audited = !audit || g3::audit_strategy(problem.instance, g3_limit);
            if (json) {
                nlohmann::json out;
                out["verdict"] = r.player1_forces_win() ? "player1_forces_win"
                                                        : "player1_cannot_force_win";
                out["states"] = r.states;
                if (audit) out["strategy_audit"] = audited ? "pass" : "fail";
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << (r.player1_forces_win() ? "player I forces a win"
                                                     : "player I cannot force a win")
                          << "\n";
                if (audit)
                    std::cout << "strategy audit: " << (audited ? "pass" : "fail") << "\n";
            }
            if (!audited) return kExitNotSolved;
            return r.player1_forces_win() ? kExitSolved : kExitNotSolved;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const chess::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
