#include "stip/solver.hpp"

#include "core/xfen.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace stip {

using namespace chess;

namespace {

struct CapExceeded {};

// Bounded AND/OR search over the stipulation semantics.
//
// Forcing side W, forced side B, horizon k counted in B replies:
//   direct:  a W move wins if it mates B outright, or B (not stalemated) has
//            only replies from which W wins with horizon k-1 (needs k >= 2).
//   misere (self/reflex/semi-reflex): a W move is disqualified if it mates or
//            stalemates B; it wins if every B reply either mates W (goal) or
//            leads to a W win with horizon k-1 (needs k >= 2).
// Reflex obligations are inside playable_moves, so a W move set reduced to
// forced mates simply has no qualifying branch.
class Searcher {
public:
    Searcher(Stipulation stip, SearchOptions opts) : stip_(stip), opts_(opts) {}

    bool forcing_wins(const Position& p, int k) {
        if (k < 1) return false;
        count_node();
        std::string key;
        if (opts_.use_memo) {
            key = memo_key(p, k);
            if (auto hit = memo_find(key)) return *hit;
        }
        bool win = false;
        for (const Move& w : playable_moves(p, stip_)) {
            if (branch_ok(p.apply_unchecked(w), k)) {
                win = true;
                break;
            }
        }
        if (opts_.use_memo) memo_store(key, win);
        return win;
    }

    bool branch_ok(const Position& q, int k) {
        count_node();
        std::string key;
        if (opts_.use_memo) {
            key = memo_key(q, k);
            if (auto hit = memo_find(key)) return *hit;
        }
        bool ok = branch_ok_uncached(q, k);
        if (opts_.use_memo) memo_store(key, ok);
        return ok;
    }

    long long nodes() const { return nodes_.load(); }

    const Stipulation& stip() const { return stip_; }

    // Forced-side replies ordered checks first, then canonically: refutation
    // lines lead with the most forcing defence, as solving commentary does.
    std::vector<Move> replies_checks_first(const Position& q) const {
        std::vector<Move> moves = playable_moves(q, stip_);
        std::stable_sort(moves.begin(), moves.end(), [&](const Move& a, const Move& b) {
            return q.apply_unchecked(a).is_check() > q.apply_unchecked(b).is_check();
        });
        return moves;
    }

    bool reply_fails(const Position& q, const Move& b, int k) {
        Position r = q.apply_unchecked(b);
        if (stip_.kind != Kind::Direct && r.is_checkmate()) return false;  // goal reached
        return !(k >= 2 && forcing_wins(r, k - 1));
    }

private:
    bool branch_ok_uncached(const Position& q, int k) {
        bool mate_of_forced = q.is_checkmate();
        if (stip_.kind == Kind::Direct) {
            if (mate_of_forced) return true;
            if (q.is_stalemate()) return false;
        } else {
            if (mate_of_forced || q.is_stalemate()) return false;
        }
        for (const Move& b : playable_moves(q, stip_)) {
            Position r = q.apply_unchecked(b);
            if (stip_.kind != Kind::Direct && r.is_checkmate()) continue;  // B mated W
            if (k >= 2 && forcing_wins(r, k - 1)) continue;
            return false;
        }
        return true;
    }

    void count_node() {
        if (++nodes_ > opts_.node_cap) throw CapExceeded{};
    }

    std::string memo_key(const Position& p, int k) const {
        std::string key = p.state_key();
        key += ':';
        key += std::to_string(k);
        return key;
    }

    std::optional<bool> memo_find(const std::string& key) {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it == memo_.end()) return std::nullopt;
        return it->second;
    }

    void memo_store(const std::string& key, bool value) {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_[key] = value;
    }

    Stipulation stip_;
    SearchOptions opts_;
    std::atomic<long long> nodes_{0};
    std::unordered_map<std::string, bool> memo_;
    std::mutex memo_mutex_;
};

TreeNode build_variation(Searcher& s, const Position& p, const Move& w, int k, bool full_tree);

// q = position after a winning forcing move, horizon k. Children are every
// forced-side playable reply; below each reply one proving continuation
// (all of them with full_tree).
std::vector<TreeNode> build_replies(Searcher& s, const Position& q, int k, bool full_tree) {
    std::vector<TreeNode> out;
    if (s.stip().kind == Kind::Direct && q.is_checkmate()) return out;
    for (const Move& b : playable_moves(q, s.stip())) {
        TreeNode node{b, format_move(q, b), {}};
        Position r = q.apply_unchecked(b);
        bool leaf = s.stip().kind != Kind::Direct && r.is_checkmate();
        if (!leaf) {
            for (const Move& w : playable_moves(r, s.stip())) {
                if (!s.branch_ok(r.apply_unchecked(w), k - 1)) continue;
                node.children.push_back(build_variation(s, r, w, k - 1, full_tree));
                if (!full_tree) break;
            }
        }
        out.push_back(std::move(node));
    }
    return out;
}

TreeNode build_variation(Searcher& s, const Position& p, const Move& w, int k, bool full_tree) {
    TreeNode node{w, format_move(p, w), {}};
    node.children = build_replies(s, p.apply_unchecked(w), k, full_tree);
    return node;
}

Refutation refute_line(Searcher& s, const Position& p, const Move& try_move, int k) {
    Refutation ref;
    Position q = p.apply_unchecked(try_move);
    bool direct = s.stip().kind == Kind::Direct;
    if (!direct && q.is_checkmate()) {
        ref.reason = RefutationReason::ForcingSideDeliversMate;
        return ref;
    }
    if (q.is_stalemate()) {
        ref.reason = RefutationReason::Stalemate;
        return ref;
    }

    Position cur = q;
    int kk = k;
    while (true) {
        // Forced side to move; pick the first failing reply, checks leading.
        Move picked{};
        bool found = false;
        for (const Move& b : s.replies_checks_first(cur)) {
            if (s.reply_fails(cur, b, kk)) {
                picked = b;
                found = true;
                break;
            }
        }
        if (!found) break;  // defensive: branch was not actually refuted
        ref.line.push_back(format_move(cur, picked));
        Position r = cur.apply_unchecked(picked);
        kk--;
        if (kk == 0) {
            ref.reason = RefutationReason::HorizonExceeded;
            return ref;
        }
        auto tries = playable_moves(r, s.stip());
        if (tries.empty()) {
            ref.reason =
                r.is_stalemate() ? RefutationReason::Stalemate : RefutationReason::HorizonExceeded;
            return ref;
        }
        ref.line.push_back(format_move(r, tries.front()));
        Position q2 = r.apply_unchecked(tries.front());
        if (!direct && q2.is_checkmate()) {
            ref.reason = RefutationReason::ForcingSideDeliversMate;
            return ref;
        }
        if (q2.is_stalemate()) {
            ref.reason = RefutationReason::Stalemate;
            return ref;
        }
        cur = q2;
    }
    ref.reason = RefutationReason::HorizonExceeded;
    return ref;
}

std::vector<char> root_verdicts(Searcher& s, const Position& p, const std::vector<Move>& roots,
                                int k, int workers) {
    std::vector<char> verdict(roots.size(), 0);
    if (workers <= 1 || roots.size() <= 1) {
        for (std::size_t i = 0; i < roots.size(); i++)
            verdict[i] = s.branch_ok(p.apply_unchecked(roots[i]), k) ? 1 : 0;
        return verdict;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; t++) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < roots.size(); i = next++)
                    verdict[i] = s.branch_ok(p.apply_unchecked(roots[i]), k) ? 1 : 0;
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return verdict;
}

}  // namespace

std::string reason_name(RefutationReason r) {
    switch (r) {
        case RefutationReason::ForcingSideDeliversMate: return "forcing-side-delivers-mate";
        case RefutationReason::Stalemate: return "stalemate";
        case RefutationReason::HorizonExceeded: return "horizon-exceeded";
    }
    return "?";
}

SolutionTree solve(const Position& p, const Stipulation& stip, const SearchOptions& opts) {
    if (p.side_to_move() != stip.forcing_side)
        throw ValidationError("stipulation side mismatch: " + color_name(stip.forcing_side) +
                              " must be on move");
    auto t0 = std::chrono::steady_clock::now();
    SolutionTree out;
    out.root_position = serialize_xfen(p);
    out.stipulation = stip;

    Searcher searcher(stip, opts);
    std::vector<Move> roots = playable_moves(p, stip);
    try {
        std::vector<char> verdict = root_verdicts(searcher, p, roots, stip.n, opts.workers);
        for (std::size_t i = 0; i < roots.size(); i++) {
            if (verdict[i]) {
                out.keys.push_back(roots[i]);
                out.key_texts.push_back(format_move(p, roots[i]));
                out.variations.push_back(
                    build_variation(searcher, p, roots[i], stip.n, opts.full_tree));
            } else if (opts.collect_refutations) {
                out.refutations[format_move(p, roots[i])] =
                    refute_line(searcher, p, roots[i], stip.n);
            }
        }
        out.status = out.keys.empty() ? SolveStatus::NotSolved : SolveStatus::Solved;
        out.cooked = out.keys.size() > 1;
    } catch (const CapExceeded&) {
        out = SolutionTree{};
        out.root_position = serialize_xfen(p);
        out.stipulation = stip;
        out.status = SolveStatus::Unknown;
    }
    out.stats.nodes = searcher.nodes();
    out.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
    return out;
}

RefuteResult refute(const Position& p, const Stipulation& stip, const Move& try_move,
                    const SearchOptions& opts) {
    if (p.side_to_move() != stip.forcing_side)
        throw ValidationError("stipulation side mismatch: " + color_name(stip.forcing_side) +
                              " must be on move");
    auto playable = playable_moves(p, stip);
    if (std::find(playable.begin(), playable.end(), try_move) == playable.end())
        throw IllegalMoveError("tried move is not playable here");
    Searcher searcher(stip, opts);
    RefuteResult result;
    try {
        if (searcher.branch_ok(p.apply_unchecked(try_move), stip.n)) {
            result.is_key = true;
            return result;
        }
        result.refutation = refute_line(searcher, p, try_move, stip.n);
    } catch (const CapExceeded&) {
        throw Error("node cap exceeded while refuting");
    }
    return result;
}

namespace {

void collect_lines(const TreeNode& node, int ply, bool forcing_starts,
                   std::vector<std::string>& prefix, std::vector<std::string>& out) {
    std::string token;
    bool forcing_move = ply % 2 == 0;
    int move_no = ply / 2 + 1;
    if (forcing_move)
        token = std::to_string(move_no) + (forcing_starts ? "." : "...") + node.text;
    else
        token = node.text;
    prefix.push_back(token);
    if (node.children.empty()) {
        std::string line;
        for (std::size_t i = 0; i < prefix.size(); i++) {
            if (i) line += " ";
            line += prefix[i];
        }
        out.push_back(line);
    } else {
        for (const auto& child : node.children)
            collect_lines(child, ply + 1, forcing_starts, prefix, out);
    }
    prefix.pop_back();
}

nlohmann::json tree_to_json(const TreeNode& node) {
    nlohmann::json j;
    j["move"] = node.text;
    std::string mark;
    if (!node.text.empty() && (node.text.back() == '#' || node.text.back() == '+'))
        mark = node.text.back();
    j["mark"] = mark;
    j["children"] = nlohmann::json::array();
    for (const auto& c : node.children) j["children"].push_back(tree_to_json(c));
    return j;
}

}  // namespace

nlohmann::json solution_to_json(const SolutionTree& t) {
    nlohmann::json j;
    j["position"] = t.root_position;
    j["stipulation"] = format_stipulation(t.stipulation);
    j["status"] = t.status == SolveStatus::Solved      ? "solved"
                  : t.status == SolveStatus::NotSolved ? "not-solved"
                                                       : "unknown";
    j["keys"] = t.key_texts;
    j["cooked"] = t.cooked;
    nlohmann::json root;
    root["move"] = "";
    root["mark"] = "";
    root["children"] = nlohmann::json::array();
    for (const auto& v : t.variations) root["children"].push_back(tree_to_json(v));
    j["tree"] = root;
    j["refutations"] = nlohmann::json::object();
    j["refutation_reasons"] = nlohmann::json::object();
    for (const auto& [text, ref] : t.refutations) {
        j["refutations"][text] = ref.line;
        j["refutation_reasons"][text] = reason_name(ref.reason);
    }
    j["stats"] = {{"nodes", t.stats.nodes}, {"elapsed_ms", t.stats.elapsed_ms}};
    return j;
}

std::string solution_to_text(const SolutionTree& t, bool include_refutations) {
    std::string out = "stipulation " + format_stipulation(t.stipulation) + ": ";
    out += t.status == SolveStatus::Solved      ? "solved"
           : t.status == SolveStatus::NotSolved ? "not solved"
                                                : "unknown (node cap exceeded)";
    out += "\n";
    if (!t.key_texts.empty()) {
        out += "keys:";
        for (const auto& k : t.key_texts) out += " " + k;
        if (t.cooked) out += "  (cooked)";
        out += "\n";
    }
    bool forcing_starts = t.stipulation.forcing_side == Color::White;
    for (const auto& v : t.variations) {
        std::vector<std::string> prefix, lines;
        collect_lines(v, 0, forcing_starts, prefix, lines);
        for (const auto& line : lines) out += line + "\n";
    }
    if (include_refutations && !t.refutations.empty()) {
        for (const auto& [text, ref] : t.refutations) {
            out += "try " + text + "? ";
            for (std::size_t i = 0; i < ref.line.size(); i++)
                out += (i ? " " : "") + ref.line[i];
            if (!ref.line.empty()) out += " ";
            out += "[" + reason_name(ref.reason) + "]\n";
        }
    }
    out += "nodes " + std::to_string(t.stats.nodes) + ", elapsed " +
           std::to_string(t.stats.elapsed_ms) + " ms\n";
    return out;
}

}  // namespace stip
