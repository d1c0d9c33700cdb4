#include "scop/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace scop {

std::string TotalOrderWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (i) os << " ";
        switch (t.kind) {
            case Token::Kind::sector: os << "s" << t.block << "^" << t.index; break;
            case Token::Kind::output: os << "j" << t.block; break;
            case Token::Kind::algebra: os << "a" << t.block; break;
        }
    }
    return os.str();
}

WordDiagnostics validate_word(const TotalOrderWord& w) {
    WordDiagnostics d;
    auto fail = [&](const std::string& m, std::vector<int> pos) {
        d.ok = false;
        d.message = m;
        d.offending_positions = std::move(pos);
        return d;
    };

    // sector blocks: each block's sectors 0..c in order, exactly once each
    std::map<int, std::vector<int>> sector_pos;  // block -> positions
    std::vector<int> out_pos, alg_pos;
    for (int i = 0; i < static_cast<int>(w.tokens.size()); ++i) {
        const Token& t = w.tokens[i];
        if (t.kind == Token::Kind::sector)
            sector_pos[t.block].push_back(i);
        else if (t.kind == Token::Kind::output)
            out_pos.push_back(i);
        else
            alg_pos.push_back(i);
    }
    for (const auto& [s, pos] : sector_pos) {
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (w.tokens[pos[i]].index != static_cast<int>(i))
                return fail("sectors of block " + std::to_string(s) + " out of order",
                            {pos[static_cast<int>(i)]});
    }
    for (std::size_t i = 1; i < out_pos.size(); ++i)
        if (w.tokens[out_pos[i]].block <= w.tokens[out_pos[i - 1]].block)
            return fail("output labels not increasing",
                        {out_pos[i - 1], out_pos[i]});
    std::set<int> alg_seen;
    for (int p : alg_pos) {
        if (!alg_seen.insert(w.tokens[p].block).second)
            return fail("algebra label repeated", {p});
    }

    // non-interleaving: no s1..s2..s1..s2 sector pattern for distinct blocks
    std::vector<int> blocks;
    for (const auto& [s, pos] : sector_pos) blocks.push_back(s);
    for (int b1 : blocks) {
        for (int b2 : blocks) {
            if (b1 == b2) continue;
            int state = 0;  // how much of the pattern b1 b2 b1 b2 was seen
            std::vector<int> witness;
            for (int i = 0; i < static_cast<int>(w.tokens.size()); ++i) {
                const Token& t = w.tokens[i];
                if (t.kind != Token::Kind::sector) continue;
                if ((state % 2 == 0 && t.block == b1) || (state % 2 == 1 && t.block == b2)) {
                    ++state;
                    witness.push_back(i);
                    if (state == 4)
                        return fail("blocks " + std::to_string(b1) + " and " +
                                        std::to_string(b2) + " interleave",
                                    witness);
                }
            }
        }
    }
    return d;
}

std::string MarkedPlanarTree::str() const {
    std::ostringstream os;
    auto rec = [&os](const TreeNode& v, auto&& self) -> void {
        switch (v.kind) {
            case TreeNode::Kind::unmarked: os << "*"; break;
            case TreeNode::Kind::cochain: os << "s" << v.label; break;
            case TreeNode::Kind::output: os << "j" << v.label; break;
            case TreeNode::Kind::algebra: os << "a" << v.label; break;
        }
        if (!v.children.empty()) {
            os << "(";
            for (std::size_t i = 0; i < v.children.size(); ++i) {
                if (i) os << " ";
                self(v.children[i], self);
            }
            os << ")";
        }
    };
    rec(root, rec);
    return os.str();
}

namespace {

void collect_labels(const TreeNode& v, std::vector<int>& s_labels, std::vector<int>& out_labels,
                    std::vector<int>& alg_labels) {
    switch (v.kind) {
        case TreeNode::Kind::cochain: s_labels.push_back(v.label); break;
        case TreeNode::Kind::output:
            if (!v.children.empty())
                throw std::invalid_argument("tree: output mark on a non-terminal vertex");
            out_labels.push_back(v.label);
            break;
        case TreeNode::Kind::algebra:
            if (!v.children.empty())
                throw std::invalid_argument("tree: algebra mark on a non-terminal vertex");
            alg_labels.push_back(v.label);
            break;
        case TreeNode::Kind::unmarked: break;
    }
    for (const auto& c : v.children) collect_labels(c, s_labels, out_labels, alg_labels);
}

}  // namespace

void MarkedPlanarTree::validate() const {
    std::vector<int> s_labels, out_labels, alg_labels;
    collect_labels(root, s_labels, out_labels, alg_labels);
    auto dup = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    };
    if (dup(s_labels)) throw std::invalid_argument("tree: repeated cochain label");
    if (dup(alg_labels)) throw std::invalid_argument("tree: repeated algebra label");
    // collect_labels visits in clockwise walk order, so out_labels must be
    // strictly increasing as found
    for (std::size_t i = 1; i < out_labels.size(); ++i)
        if (out_labels[i] <= out_labels[i - 1])
            throw std::invalid_argument("tree: output marks out of clockwise order");
}

namespace {

// one deterministic reduction, innermost first, children left to right
bool reduce_rec(TreeNode& v) {
    for (auto& c : v.children)
        if (reduce_rec(c)) return true;
    if (v.kind != TreeNode::Kind::unmarked) return false;
    if (v.children.size() == 1) {
        TreeNode child = std::move(v.children[0]);
        v = std::move(child);
        return true;
    }
    for (std::size_t i = 0; i < v.children.size(); ++i) {
        if (v.children[i].kind == TreeNode::Kind::unmarked) {
            TreeNode child = std::move(v.children[i]);
            v.children.erase(v.children.begin() + i);
            v.children.insert(v.children.begin() + i,
                              std::make_move_iterator(child.children.begin()),
                              std::make_move_iterator(child.children.end()));
            return true;
        }
    }
    return false;
}

bool minimal_rec(const TreeNode& v) {
    if (v.kind == TreeNode::Kind::unmarked) {
        if (v.children.size() == 1) return false;
        for (const auto& c : v.children)
            if (c.kind == TreeNode::Kind::unmarked) return false;
    }
    for (const auto& c : v.children)
        if (!minimal_rec(c)) return false;
    return true;
}

void walk_rec(const TreeNode& v, std::vector<Token>& out) {
    switch (v.kind) {
        case TreeNode::Kind::output:
            out.push_back({Token::Kind::output, v.label, 0});
            return;
        case TreeNode::Kind::algebra:
            out.push_back({Token::Kind::algebra, v.label, 0});
            return;
        case TreeNode::Kind::cochain: {
            out.push_back({Token::Kind::sector, v.label, 0});
            int i = 1;
            for (const auto& c : v.children) {
                walk_rec(c, out);
                out.push_back({Token::Kind::sector, v.label, i++});
            }
            return;
        }
        case TreeNode::Kind::unmarked:
            for (const auto& c : v.children) walk_rec(c, out);
            return;
    }
}

}  // namespace

std::optional<MarkedPlanarTree> reduce_step(const MarkedPlanarTree& t) {
    MarkedPlanarTree copy = t;
    if (reduce_rec(copy.root)) return copy;
    return std::nullopt;
}

MarkedPlanarTree to_minimal(const MarkedPlanarTree& t) {
    MarkedPlanarTree cur = t;
    while (reduce_rec(cur.root)) {
    }
    return cur;
}

bool is_minimal(const MarkedPlanarTree& t) { return minimal_rec(t.root); }

TotalOrderWord nu_ord(const MarkedPlanarTree& t) {
    MarkedPlanarTree m = is_minimal(t) ? t : to_minimal(t);
    TotalOrderWord w;
    walk_rec(m.root, w.tokens);
    return w;
}

namespace {

struct Elem {
    bool is_sector;
    Token sector;    // valid when is_sector
    TreeNode built;  // valid otherwise
};

TreeNode gap_node(std::vector<TreeNode> items) {
    if (items.empty()) return TreeNode{TreeNode::Kind::unmarked, -1, {}};
    if (items.size() == 1) return std::move(items[0]);
    return TreeNode{TreeNode::Kind::unmarked, -1, std::move(items)};
}

}  // namespace

MarkedPlanarTree nu_tree(const TotalOrderWord& w) {
    WordDiagnostics d = validate_word(w);
    if (!d.ok) {
        std::ostringstream os;
        os << "nu_tree: invalid word (" << d.message << ") at positions";
        for (int p : d.offending_positions) os << " " << p;
        throw std::invalid_argument(os.str());
    }

    std::vector<Elem> elems;
    for (const Token& t : w.tokens) {
        if (t.kind == Token::Kind::sector) {
            elems.push_back({true, t, {}});
        } else {
            TreeNode leaf{t.kind == Token::Kind::output ? TreeNode::Kind::output
                                                        : TreeNode::Kind::algebra,
                          t.block,
                          {}};
            elems.push_back({false, {}, std::move(leaf)});
        }
    }

    for (;;) {
        // positions of each block's sectors
        std::map<int, std::vector<int>> span;
        for (int i = 0; i < static_cast<int>(elems.size()); ++i)
            if (elems[i].is_sector) span[elems[i].sector.block].push_back(i);
        if (span.empty()) break;

        // an innermost block: no foreign sector inside its span; pick the
        // leftmost such for determinism
        int chosen = -1, chosen_first = -1;
        for (const auto& [s, pos] : span) {
            bool inner = true;
            for (int i = pos.front() + 1; i < pos.back() && inner; ++i)
                if (elems[i].is_sector && elems[i].sector.block != s) inner = false;
            if (inner && (chosen < 0 || pos.front() < chosen_first)) {
                chosen = s;
                chosen_first = pos.front();
            }
        }
        if (chosen < 0) throw std::logic_error("nu_tree: no innermost block (word invalid)");

        const std::vector<int>& pos = span[chosen];
        TreeNode node{TreeNode::Kind::cochain, chosen, {}};
        for (std::size_t g = 0; g + 1 < pos.size(); ++g) {
            std::vector<TreeNode> items;
            for (int i = pos[g] + 1; i < pos[g + 1]; ++i) items.push_back(std::move(elems[i].built));
            node.children.push_back(gap_node(std::move(items)));
        }
        Elem repl{false, {}, std::move(node)};
        elems.erase(elems.begin() + pos.front(), elems.begin() + pos.back() + 1);
        elems.insert(elems.begin() + pos.front(), std::move(repl));
    }

    std::vector<TreeNode> items;
    items.reserve(elems.size());
    for (auto& e : elems) items.push_back(std::move(e.built));
    MarkedPlanarTree out{gap_node(std::move(items))};
    return out;
}

namespace {

// interleavings of: sector runs (one per block, fixed internal order),
// the output run (fixed order), and singleton algebra tokens
void interleave(const std::vector<std::vector<Token>>& runs, std::vector<std::size_t>& taken,
                std::vector<Token>& acc, std::vector<TotalOrderWord>& out) {
    bool done = true;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (taken[r] < runs[r].size()) {
            done = false;
            acc.push_back(runs[r][taken[r]]);
            ++taken[r];
            interleave(runs, taken, acc, out);
            --taken[r];
            acc.pop_back();
        }
    }
    if (done) out.push_back({acc});
}

}  // namespace

std::vector<TotalOrderWord> enumerate_words(const std::vector<int>& arities, int n_out,
                                            int n_alg) {
    std::vector<std::vector<Token>> runs;
    for (std::size_t s = 0; s < arities.size(); ++s) {
        std::vector<Token> run;
        for (int i = 0; i <= arities[s]; ++i)
            run.push_back({Token::Kind::sector, static_cast<int>(s), i});
        runs.push_back(std::move(run));
    }
    {
        std::vector<Token> run;
        for (int j = 0; j < n_out; ++j) run.push_back({Token::Kind::output, j, 0});
        if (!run.empty()) runs.push_back(std::move(run));
    }
    for (int a = 0; a < n_alg; ++a)
        runs.push_back({{Token::Kind::algebra, a, 0}});

    std::vector<TotalOrderWord> all;
    std::vector<std::size_t> taken(runs.size(), 0);
    std::vector<Token> acc;
    interleave(runs, taken, acc, all);

    std::vector<TotalOrderWord> valid;
    for (auto& w : all)
        if (validate_word(w).ok) valid.push_back(std::move(w));
    return valid;
}

std::vector<TotalOrderWord> enumerate_words_up_to(int max_tokens, bool with_algebra) {
    std::vector<TotalOrderWord> out;
    // profiles: arity tuple (a_1..a_k), output count, algebra count with
    // sum (a_s + 1) + n_out + n_alg <= max_tokens
    std::vector<std::vector<int>> arity_tuples{{}};
    {
        std::vector<int> cur;
        auto rec = [&](int budget, auto&& self) -> void {
            for (int a = 0; a + 1 <= budget; ++a) {
                cur.push_back(a);
                arity_tuples.push_back(cur);
                self(budget - (a + 1), self);
                cur.pop_back();
            }
        };
        rec(max_tokens, rec);
    }
    for (const auto& ar : arity_tuples) {
        int base = static_cast<int>(ar.size());
        for (int a : ar) base += a;
        if (base > max_tokens) continue;
        for (int n_out = 0; base + n_out <= max_tokens; ++n_out) {
            const int max_alg = with_algebra ? max_tokens - base - n_out : 0;
            for (int n_alg = 0; n_alg <= max_alg; ++n_alg) {
                if (with_algebra && n_out > 0 && n_alg > 0) continue;  // colors do not mix
                auto ws = enumerate_words(ar, n_out, n_alg);
                out.insert(out.end(), std::make_move_iterator(ws.begin()),
                           std::make_move_iterator(ws.end()));
            }
        }
    }
    return out;
}

}  // namespace scop
