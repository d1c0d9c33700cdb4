#include "scop/seq.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace scop {

std::string SeqElem::str() const {
    std::ostringstream os;
    os << (sc ? "sc{" : "{");
    for (std::size_t i = 0; i < arrangement.size(); ++i) {
        if (i) os << " ";
        const SeqToken& t = arrangement[i];
        if (t.is_alg())
            os << "a" << t.block;
        else
            os << t.block << "." << t.index;
        if (!sc) os << "->" << q[i];
    }
    os << "}";
    if (!sc) os << "J" << J;
    return os.str();
}

SeqElem SeqElem::unit_c(int n) {
    SeqElem u;
    u.blocks = {n};
    u.J = n;
    for (int i = 0; i < n; ++i) {
        u.arrangement.push_back({0, i});
        u.q.push_back(i);
    }
    return u;
}

SeqElem SeqElem::unit_a() {
    SeqElem u;
    u.sc = true;
    u.J = 0;
    u.n_alg = 1;
    u.arrangement.push_back({0, -1});
    return u;
}

SeqDiagnostics validate(const SeqElem& u) {
    SeqDiagnostics d;
    auto bad = [&](const std::string& m) {
        d.ok = false;
        d.violations.push_back(m);
    };

    for (int b : u.blocks)
        if (b < 1) bad("block ordinal must be non-empty");
    if (u.sc) {
        if (!u.q.empty()) bad("algebra-colored element carries a q map");
        if (u.n_alg < 0) bad("negative algebra token count");
    } else {
        if (u.n_alg != 0) bad("cochain-colored element carries algebra tokens");
        if (u.J < 1) bad("output ordinal must be non-empty");
        if (u.q.size() != u.arrangement.size()) bad("q has wrong length");
    }

    // arrangement must be a permutation of the token set
    std::multiset<std::pair<int, int>> want, got;
    for (std::size_t b = 0; b < u.blocks.size(); ++b)
        for (int i = 0; i < u.blocks[b]; ++i) want.insert({static_cast<int>(b), i});
    for (int a = 0; a < u.n_alg; ++a) want.insert({a, -1});
    for (const SeqToken& t : u.arrangement) got.insert({t.block, t.index});
    if (want != got) {
        bad("arrangement is not a permutation of the token set");
        return d;
    }

    // within every block the arrangement is increasing
    std::map<int, int> last_index;
    for (const SeqToken& t : u.arrangement) {
        if (t.is_alg()) continue;
        auto it = last_index.find(t.block);
        if (it != last_index.end() && t.index <= it->second)
            bad("block " + std::to_string(t.block) + " not increasing in the arrangement");
        last_index[t.block] = t.index;
    }

    // non-interleaving between distinct blocks
    const int k = static_cast<int>(u.blocks.size());
    for (int b1 = 0; b1 < k; ++b1) {
        for (int b2 = 0; b2 < k; ++b2) {
            if (b1 == b2) continue;
            int state = 0;
            for (const SeqToken& t : u.arrangement) {
                if (t.is_alg()) continue;
                if ((state % 2 == 0 && t.block == b1) || (state % 2 == 1 && t.block == b2)) {
                    if (++state == 4) {
                        bad("blocks " + std::to_string(b1) + " and " + std::to_string(b2) +
                            " interleave");
                        break;
                    }
                }
            }
        }
    }

    if (!u.sc) {
        int prev = 0;
        for (std::size_t i = 0; i < u.q.size(); ++i) {
            if (u.q[i] < 0 || u.q[i] >= u.J) bad("q value out of range");
            if (u.q[i] < prev) bad("q not nondecreasing");
            prev = u.q[i];
        }
    }
    return d;
}

std::vector<std::vector<int>> elementary_classes(const SeqElem& u) {
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < u.token_count(); ++i) {
        const SeqToken& t = u.arrangement[i];
        bool extend = !classes.empty() && !t.is_alg() &&
                      !u.arrangement[classes.back().back()].is_alg() &&
                      u.arrangement[classes.back().back()].block == t.block;
        if (extend)
            classes.back().push_back(i);
        else
            classes.push_back({i});
    }
    return classes;
}

int class_count(const SeqElem& u) { return static_cast<int>(elementary_classes(u).size()); }

namespace {

struct CompositionItem {
    int img_pos;     // position of the image token in the outer arrangement
    int inner_pos;   // position within the inner arrangement
    int slot;        // outer slot (block index, or ~algebra label)
    bool from_a;     // true when the slot is an algebra slot
};

int position_of(const SeqElem& u, const SeqToken& t) {
    for (int i = 0; i < u.token_count(); ++i)
        if (u.arrangement[i] == t) return i;
    throw std::logic_error("position_of: token missing");
}

void assert_composite(const SeqElem& z, const std::vector<CompositionItem>& items,
                      const char* who) {
    // both defining properties of the composite order, checked rather than
    // trusted: the assembled map is nondecreasing, and the order agrees with
    // each inner order
    for (std::size_t i = 1; i < items.size(); ++i)
        if (items[i].img_pos < items[i - 1].img_pos)
            throw std::logic_error(std::string(who) + ": assembled map not nondecreasing");
    std::map<std::pair<bool, int>, int> last;
    for (const auto& it : items) {
        auto key = std::make_pair(it.from_a, it.slot);
        auto f = last.find(key);
        if (f != last.end() && it.inner_pos <= f->second)
            throw std::logic_error(std::string(who) + ": inner order not respected");
        last[key] = it.inner_pos;
    }
    SeqDiagnostics d = validate(z);
    if (!d.ok) throw std::logic_error(std::string(who) + ": composite invalid: " + d.violations[0]);
}

}  // namespace

SeqElem compose(const SeqElem& u, const std::vector<SeqElem>& inner) {
    if (u.sc) throw std::invalid_argument("compose: outer element must be cochain-colored");
    if (inner.size() != u.blocks.size())
        throw std::invalid_argument("compose: wrong number of inner elements");
    for (std::size_t t = 0; t < inner.size(); ++t) {
        if (inner[t].sc)
            throw std::invalid_argument("compose: inner element of cochain slot is algebra-colored");
        if (inner[t].J != u.blocks[t])
            throw std::invalid_argument("compose: color mismatch at slot " + std::to_string(t));
    }

    std::vector<CompositionItem> items;
    for (std::size_t t = 0; t < inner.size(); ++t)
        for (int p = 0; p < inner[t].token_count(); ++p)
            items.push_back({position_of(u, {static_cast<int>(t), inner[t].q[p]}), p,
                             static_cast<int>(t), false});
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return std::tie(a.img_pos, a.inner_pos) < std::tie(b.img_pos, b.inner_pos);
    });

    std::vector<int> block_offset(inner.size() + 1, 0);
    for (std::size_t t = 0; t < inner.size(); ++t)
        block_offset[t + 1] = block_offset[t] + static_cast<int>(inner[t].blocks.size());

    SeqElem z;
    z.J = u.J;
    for (const auto& in : inner)
        z.blocks.insert(z.blocks.end(), in.blocks.begin(), in.blocks.end());
    for (const auto& it : items) {
        SeqToken tok = inner[it.slot].arrangement[it.inner_pos];
        tok.block += block_offset[it.slot];
        z.arrangement.push_back(tok);
        z.q.push_back(u.q[it.img_pos]);
    }
    assert_composite(z, items, "compose");
    return z;
}

SeqElem compose_sc(const SeqElem& v, const std::vector<SeqElem>& c_inner,
                   const std::vector<SeqElem>& a_inner) {
    if (!v.sc) throw std::invalid_argument("compose_sc: outer element must be algebra-colored");
    if (c_inner.size() != v.blocks.size() || static_cast<int>(a_inner.size()) != v.n_alg)
        throw std::invalid_argument("compose_sc: wrong number of inner elements");
    for (std::size_t t = 0; t < c_inner.size(); ++t) {
        if (c_inner[t].sc)
            throw std::invalid_argument("compose_sc: cochain slot filled with algebra color");
        if (c_inner[t].J != v.blocks[t])
            throw std::invalid_argument("compose_sc: color mismatch at cochain slot " +
                                        std::to_string(t));
    }
    for (const auto& w : a_inner)
        if (!w.sc) throw std::invalid_argument("compose_sc: algebra slot filled with cochain color");

    std::vector<CompositionItem> items;
    for (std::size_t t = 0; t < c_inner.size(); ++t)
        for (int p = 0; p < c_inner[t].token_count(); ++p)
            items.push_back({position_of(v, {static_cast<int>(t), c_inner[t].q[p]}), p,
                             static_cast<int>(t), false});
    for (std::size_t l = 0; l < a_inner.size(); ++l) {
        const int img = position_of(v, {static_cast<int>(l), -1});
        for (int p = 0; p < a_inner[l].token_count(); ++p)
            items.push_back({img, p, static_cast<int>(l), true});
    }
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return std::tie(a.img_pos, a.inner_pos) < std::tie(b.img_pos, b.inner_pos);
    });

    // blocks: cochain slots first, then the cochain blocks of algebra slots
    std::vector<int> c_block_offset(c_inner.size() + 1, 0);
    for (std::size_t t = 0; t < c_inner.size(); ++t)
        c_block_offset[t + 1] = c_block_offset[t] + static_cast<int>(c_inner[t].blocks.size());
    std::vector<int> a_block_offset(a_inner.size() + 1, c_block_offset[c_inner.size()]);
    std::vector<int> a_alg_offset(a_inner.size() + 1, 0);
    for (std::size_t l = 0; l < a_inner.size(); ++l) {
        a_block_offset[l + 1] = a_block_offset[l] + static_cast<int>(a_inner[l].blocks.size());
        a_alg_offset[l + 1] = a_alg_offset[l] + a_inner[l].n_alg;
    }

    SeqElem z;
    z.sc = true;
    z.J = 0;
    for (const auto& in : c_inner)
        z.blocks.insert(z.blocks.end(), in.blocks.begin(), in.blocks.end());
    for (const auto& in : a_inner)
        z.blocks.insert(z.blocks.end(), in.blocks.begin(), in.blocks.end());
    for (const auto& in : a_inner) z.n_alg += in.n_alg;

    for (const auto& it : items) {
        SeqToken tok = it.from_a ? a_inner[it.slot].arrangement[it.inner_pos]
                                 : c_inner[it.slot].arrangement[it.inner_pos];
        if (tok.is_alg())
            tok.block += a_alg_offset[it.slot];
        else
            tok.block += it.from_a ? a_block_offset[it.slot] : c_block_offset[it.slot];
        z.arrangement.push_back(tok);
    }
    assert_composite(z, items, "compose_sc");
    return z;
}

SeqElem act_on_J(const SeqElem& u, const MonotoneMap& theta) {
    if (u.sc) throw std::invalid_argument("act_on_J: element has no output ordinal");
    if (theta.source != u.J) throw std::invalid_argument("act_on_J: size mismatch");
    SeqElem v = u;
    v.J = theta.target;
    for (auto& x : v.q) x = theta(x);
    return v;
}

SeqElem act_on_block(const SeqElem& u, int s, const MonotoneMap& theta) {
    if (s < 0 || s >= static_cast<int>(u.blocks.size()))
        throw std::invalid_argument("act_on_block: no such block");
    if (theta.target != u.blocks[s]) throw std::invalid_argument("act_on_block: size mismatch");
    SeqElem v;
    v.blocks = u.blocks;
    v.blocks[s] = theta.source;
    v.J = u.J;
    v.sc = u.sc;
    v.n_alg = u.n_alg;
    // preimages of each element of block s under theta
    std::vector<std::vector<int>> pre(u.blocks[s]);
    for (int j = 0; j < theta.source; ++j) pre[theta(j)].push_back(j);
    for (int p = 0; p < u.token_count(); ++p) {
        const SeqToken& t = u.arrangement[p];
        if (!t.is_alg() && t.block == s) {
            for (int j : pre[t.index]) {
                v.arrangement.push_back({s, j});
                if (!u.sc) v.q.push_back(u.q[p]);
            }
        } else {
            v.arrangement.push_back(t);
            if (!u.sc) v.q.push_back(u.q[p]);
        }
    }
    return v;
}

bool in_seq_tau(const SeqElem& u, const TwoTree& tau) {
    if (u.sc != tau.sc) return false;
    const int na = u.sc ? static_cast<int>(tau.sa().size()) : 0;
    if (u.sc && na != u.n_alg) return false;
    if (static_cast<int>(u.blocks.size()) != tau.map.source - na) return false;

    // token -> source address of tau
    auto addr = [&](const SeqToken& t) { return t.is_alg() ? t.block : na + t.block; };

    const int n = tau.map.source;
    std::vector<int> first(n, -1), last(n, -1);
    for (int p = 0; p < u.token_count(); ++p) {
        int a = addr(u.arrangement[p]);
        if (first[a] < 0) first[a] = p;
        last[a] = p;
    }
    for (int a = 0; a < n; ++a) {
        if (first[a] < 0) return false;  // every source element carries tokens
        for (int p = first[a] + 1; p < last[a]; ++p) {
            int b = addr(u.arrangement[p]);
            if (b != a && !(tau.map(b) < tau.map(a))) return false;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (tau.map(a) == tau.map(b) && !(last[a] < first[b])) return false;
    return true;
}

namespace {

void interleave_tokens(const std::vector<std::vector<SeqToken>>& runs,
                       std::vector<std::size_t>& taken, std::vector<SeqToken>& acc,
                       std::vector<std::vector<SeqToken>>& out) {
    bool done = true;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (taken[r] < runs[r].size()) {
            done = false;
            acc.push_back(runs[r][taken[r]]);
            ++taken[r];
            interleave_tokens(runs, taken, acc, out);
            --taken[r];
            acc.pop_back();
        }
    }
    if (done) out.push_back(acc);
}

}  // namespace

std::vector<SeqElem> enumerate_elems(const std::vector<int>& blocks, int J, bool sc, int n_alg,
                                     int token_bound) {
    int total = n_alg;
    for (int b : blocks) total += b;
    if (total > token_bound)
        throw std::invalid_argument("enumerate_elems: token count exceeds bound");

    std::vector<std::vector<SeqToken>> runs;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<SeqToken> run;
        for (int i = 0; i < blocks[b]; ++i) run.push_back({static_cast<int>(b), i});
        runs.push_back(std::move(run));
    }
    for (int a = 0; a < n_alg; ++a) runs.push_back({{a, -1}});

    std::vector<std::vector<SeqToken>> arrs;
    std::vector<std::size_t> taken(runs.size(), 0);
    std::vector<SeqToken> acc;
    interleave_tokens(runs, taken, acc, arrs);

    std::vector<SeqElem> out;
    for (const auto& arr : arrs) {
        SeqElem proto;
        proto.blocks = blocks;
        proto.sc = sc;
        proto.n_alg = sc ? n_alg : 0;
        proto.J = sc ? 0 : J;
        proto.arrangement = arr;
        if (sc) {
            if (validate(proto).ok) out.push_back(proto);
            continue;
        }
        for (const auto& qmap : all_monotone_maps(total, J)) {
            proto.q = qmap.values;
            if (validate(proto).ok) out.push_back(proto);
        }
    }
    return out;
}

TotalOrderWord seq_to_word(const SeqElem& u) {
    TotalOrderWord w;
    int emitted = 0;
    const int n_out = u.sc ? 0 : u.J - 1;
    for (int p = 0; p < u.token_count(); ++p) {
        if (!u.sc)
            while (emitted < u.q[p] && emitted < n_out) {
                w.tokens.push_back({Token::Kind::output, emitted, 0});
                ++emitted;
            }
        const SeqToken& t = u.arrangement[p];
        if (t.is_alg())
            w.tokens.push_back({Token::Kind::algebra, t.block, 0});
        else
            w.tokens.push_back({Token::Kind::sector, t.block, t.index});
    }
    while (emitted < n_out) {
        w.tokens.push_back({Token::Kind::output, emitted, 0});
        ++emitted;
    }
    return w;
}

SeqElem word_to_seq(const TotalOrderWord& w) {
    WordDiagnostics d = validate_word(w);
    if (!d.ok) throw std::invalid_argument("word_to_seq: invalid word: " + d.message);

    SeqElem u;
    std::map<int, int> block_sizes;
    bool has_out = false, has_alg = false;
    for (const Token& t : w.tokens) {
        if (t.kind == Token::Kind::sector) block_sizes[t.block] = std::max(block_sizes[t.block], t.index + 1);
        has_out |= t.kind == Token::Kind::output;
        has_alg |= t.kind == Token::Kind::algebra;
    }
    if (has_out && has_alg)
        throw std::invalid_argument("word_to_seq: output and algebra tokens cannot mix");
    // block labels must be 0..k-1 for the sequence profile
    int k = 0;
    for (const auto& [b, sz] : block_sizes) {
        if (b != k++) throw std::invalid_argument("word_to_seq: block labels must be 0..k-1");
        u.blocks.push_back(sz);
    }
    u.sc = has_alg;
    int outs_before = 0;
    for (const Token& t : w.tokens) {
        switch (t.kind) {
            case Token::Kind::output: ++outs_before; break;
            case Token::Kind::sector:
                u.arrangement.push_back({t.block, t.index});
                if (!u.sc) u.q.push_back(outs_before);
                break;
            case Token::Kind::algebra:
                u.arrangement.push_back({t.block, -1});
                ++u.n_alg;
                break;
        }
    }
    u.J = u.sc ? 0 : outs_before + 1;
    SeqDiagnostics sd = validate(u);
    if (!sd.ok) throw std::invalid_argument("word_to_seq: result invalid: " + sd.violations[0]);
    return u;
}

namespace {

void relabel_tree(TreeNode& v, int c_offset, int a_offset) {
    if (v.kind == TreeNode::Kind::cochain) v.label += c_offset;
    if (v.kind == TreeNode::Kind::algebra) v.label += a_offset;
    for (auto& c : v.children) relabel_tree(c, c_offset, a_offset);
}

void substitute_outputs(TreeNode& v, const std::vector<TreeNode>& args) {
    if (v.kind == TreeNode::Kind::output) {
        v = args.at(v.label);
        return;
    }
    for (auto& c : v.children) substitute_outputs(c, args);
}

int count_cochain_labels(const TreeNode& v) {
    int n = v.kind == TreeNode::Kind::cochain ? 1 : 0;
    for (const auto& c : v.children) n += count_cochain_labels(c);
    return n;
}

int count_algebra_labels(const TreeNode& v) {
    int n = v.kind == TreeNode::Kind::algebra ? 1 : 0;
    for (const auto& c : v.children) n += count_algebra_labels(c);
    return n;
}

TreeNode graft_rec(const TreeNode& v, const std::vector<MarkedPlanarTree>& inner,
                   const std::vector<MarkedPlanarTree>& a_inner,
                   const std::vector<int>& c_off, const std::vector<int>& a_c_off,
                   const std::vector<int>& a_a_off) {
    switch (v.kind) {
        case TreeNode::Kind::output:
            return v;
        case TreeNode::Kind::algebra: {
            TreeNode sub = a_inner.at(v.label).root;
            relabel_tree(sub, a_c_off.at(v.label), a_a_off.at(v.label));
            return sub;
        }
        case TreeNode::Kind::cochain: {
            std::vector<TreeNode> args;
            args.reserve(v.children.size());
            for (const auto& c : v.children)
                args.push_back(graft_rec(c, inner, a_inner, c_off, a_c_off, a_a_off));
            TreeNode sub = inner.at(v.label).root;
            relabel_tree(sub, c_off.at(v.label), 0);
            substitute_outputs(sub, args);
            return sub;
        }
        case TreeNode::Kind::unmarked: {
            TreeNode out = v;
            out.children.clear();
            for (const auto& c : v.children)
                out.children.push_back(graft_rec(c, inner, a_inner, c_off, a_c_off, a_a_off));
            return out;
        }
    }
    throw std::logic_error("graft_rec: unreachable");
}

}  // namespace

MarkedPlanarTree graft_compose(const MarkedPlanarTree& outer,
                               const std::vector<MarkedPlanarTree>& inner,
                               const std::vector<MarkedPlanarTree>& a_inner) {
    std::vector<int> c_off(inner.size() + 1, 0);
    for (std::size_t t = 0; t < inner.size(); ++t)
        c_off[t + 1] = c_off[t] + count_cochain_labels(inner[t].root);
    std::vector<int> a_c_off(a_inner.size() + 1, c_off[inner.size()]);
    std::vector<int> a_a_off(a_inner.size() + 1, 0);
    for (std::size_t l = 0; l < a_inner.size(); ++l) {
        a_c_off[l + 1] = a_c_off[l] + count_cochain_labels(a_inner[l].root);
        a_a_off[l + 1] = a_a_off[l] + count_algebra_labels(a_inner[l].root);
    }
    MarkedPlanarTree out{graft_rec(outer.root, inner, a_inner, c_off, a_c_off, a_a_off)};
    return out;
}

}  // namespace scop
