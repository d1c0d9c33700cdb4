#include "scop/window.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace scop {

int window_degree(const SeqElem& u) {
    int deg = u.sc ? 0 : u.J - 1;
    for (int b : u.blocks) deg -= b - 1;
    return deg;
}

bool simplicially_nondegenerate(const SeqElem& u) {
    for (const auto& cls : elementary_classes(u)) {
        if (u.sc) {
            if (cls.size() > 1 && !u.arrangement[cls[0]].is_alg()) return false;
        } else {
            for (std::size_t i = 1; i < cls.size(); ++i)
                if (u.q[cls[i]] == u.q[cls[i - 1]]) return false;
        }
    }
    return true;
}

std::vector<std::pair<SeqElem, int>> differential_terms(const SeqElem& u) {
    std::vector<std::pair<SeqElem, int>> out;
    if (!u.sc) {
        for (int i = 0; i <= u.J; ++i) {
            SeqElem v = act_on_J(u, MonotoneMap::coface(u.J + 1, i));
            out.emplace_back(std::move(v), i % 2 == 0 ? 1 : -1);
        }
    }
    int prefix = u.sc ? 0 : (u.J - 1) % 2;
    for (std::size_t s = 0; s < u.blocks.size(); ++s) {
        const int bs = u.blocks[s];
        if (bs >= 2) {
            for (int j = 0; j < bs; ++j) {
                SeqElem v = act_on_block(u, static_cast<int>(s), MonotoneMap::coface(bs, j));
                if (!simplicially_nondegenerate(v)) continue;
                int sign = ((prefix + j) % 2 == 0) ? 1 : -1;
                out.emplace_back(std::move(v), sign);
            }
        }
        prefix = (prefix + bs - 1) % 2;
    }
    return out;
}

namespace {

bool contiguous_ascending(const SeqElem& u) {
    int current = -1;
    for (const SeqToken& t : u.arrangement) {
        if (t.is_alg()) return false;
        if (t.block != current) {
            if (t.block != current + 1) return false;
            current = t.block;
        }
    }
    return true;
}

bool in_family(const WindowSpec& spec, const SeqElem& u) {
    switch (spec.family) {
        case WindowSpec::Family::se: return true;
        case WindowSpec::Family::seq: return in_seq_tau(u, *spec.tau);
        case WindowSpec::Family::xi: return contiguous_ascending(u);
    }
    return false;
}

void block_tuples(int k, const WindowCutoffs& c, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int b : cur) used += b;
    for (int b = 1; b <= c.max_block_each && used + b <= c.max_block_total; ++b) {
        cur.push_back(b);
        block_tuples(k, c, cur, out);
        cur.pop_back();
    }
}

std::vector<SeqElem> family_elements(const WindowSpec& spec, const std::vector<int>& blocks,
                                     int J) {
    std::vector<SeqElem> out;
    if (spec.family == WindowSpec::Family::xi) {
        SeqElem proto;
        proto.blocks = blocks;
        proto.J = J;
        int total = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int i = 0; i < blocks[b]; ++i) proto.arrangement.push_back({static_cast<int>(b), i});
        for (int b : blocks) total += b;
        for (const auto& qmap : all_monotone_maps(total, J)) {
            proto.q = qmap.values;
            if (validate(proto).ok) out.push_back(proto);
        }
        return out;
    }
    int total = spec.n_alg;
    for (int b : blocks) total += b;
    return enumerate_elems(blocks, J, spec.sc, spec.n_alg, total);
}

}  // namespace

int StructuralWindow::dim(int degree) const {
    auto it = basis.find(degree);
    return it == basis.end() ? 0 : static_cast<int>(it->second.size());
}

int StructuralWindow::degree_min() const { return basis.empty() ? 0 : basis.begin()->first; }
int StructuralWindow::degree_max() const { return basis.empty() ? 0 : basis.rbegin()->first; }

std::optional<int> StructuralWindow::index_of(int degree, const SeqElem& u) const {
    auto it = basis.find(degree);
    if (it == basis.end()) return std::nullopt;
    auto pos = std::lower_bound(it->second.begin(), it->second.end(), u);
    if (pos == it->second.end() || !(*pos == u)) return std::nullopt;
    return static_cast<int>(pos - it->second.begin());
}

void StructuralWindow::assert_d_squared() const {
    for (const auto& [k, entries] : d) {
        auto next = d.find(k + 1);
        if (next == d.end()) continue;
        // group d_k entries by source column
        std::map<int, std::vector<std::pair<int, int>>> by_col;
        for (const auto& [r, c, s] : entries) by_col[c].push_back({r, s});
        std::map<int, std::vector<std::pair<int, int>>> next_by_col;
        for (const auto& [r, c, s] : next->second) next_by_col[c].push_back({r, s});
        for (const auto& [c, terms] : by_col) {
            std::map<int, long> acc;
            for (const auto& [mid, s1] : terms) {
                auto it2 = next_by_col.find(mid);
                if (it2 == next_by_col.end()) continue;
                for (const auto& [r, s2] : it2->second) acc[r] += static_cast<long>(s1) * s2;
            }
            for (const auto& [r, v] : acc)
                if (v != 0) throw std::logic_error("window: d.d != 0");
        }
    }
}

StructuralWindow realize_window(const WindowSpec& spec_in) {
    WindowSpec spec = spec_in;
    if (spec.family == WindowSpec::Family::seq) {
        if (!spec.tau) throw std::invalid_argument("realize_window: seq family needs a 2-tree");
        spec.sc = spec.tau->sc;
        spec.n_alg = spec.sc ? static_cast<int>(spec.tau->sa().size()) : 0;
        spec.n_blocks = spec.tau->map.source - spec.n_alg;
    }
    if (spec.family == WindowSpec::Family::xi && spec.sc)
        throw std::invalid_argument("realize_window: xi family is cochain-colored");

    StructuralWindow w;
    w.spec = spec;

    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    block_tuples(spec.n_blocks, spec.cutoffs, cur, tuples);

    for (const auto& blocks : tuples) {
        if (spec.sc) {
            for (auto& u : family_elements(spec, blocks, 0))
                if (simplicially_nondegenerate(u) && in_family(spec, u))
                    w.basis[window_degree(u)].push_back(std::move(u));
        } else {
            for (int J = 1; J <= spec.cutoffs.max_J; ++J)
                for (auto& u : family_elements(spec, blocks, J))
                    if (simplicially_nondegenerate(u) && in_family(spec, u))
                        w.basis[window_degree(u)].push_back(std::move(u));
        }
    }
    for (auto& [deg, elems] : w.basis) std::sort(elems.begin(), elems.end());

    for (const auto& [deg, elems] : w.basis) {
        auto& entries = w.d[deg];
        for (int col = 0; col < static_cast<int>(elems.size()); ++col) {
            for (auto& [v, sign] : differential_terms(elems[col])) {
                if (!v.sc && v.J > spec.cutoffs.max_J) continue;  // quotient truncation
                auto row = w.index_of(deg + 1, v);
                if (!row) {
                    if (v.sc || v.J <= spec_in.cutoffs.max_J)
                        throw std::logic_error(
                            "realize_window: differential leaves the window: " + v.str());
                    continue;
                }
                entries.emplace_back(*row, col, sign);
            }
        }
    }
    w.assert_d_squared();
    return w;
}

int window_source_size(const StructuralWindow& w) { return w.spec.n_blocks + w.spec.n_alg; }

namespace {

StructuralWindow filter_window(const StructuralWindow& w, int keep_max, int keep_min) {
    const int S = window_source_size(w);
    StructuralWindow out;
    out.spec = w.spec;
    std::map<int, std::vector<int>> newindex;  // per degree, old index -> new or -1
    for (const auto& [deg, elems] : w.basis) {
        auto& idx = newindex[deg];
        idx.assign(elems.size(), -1);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const int lvl = class_count(elems[i]) - S;
            if (lvl <= keep_max && lvl >= keep_min) {
                idx[i] = static_cast<int>(out.basis[deg].size());
                out.basis[deg].push_back(elems[i]);
            }
        }
    }
    for (const auto& [deg, entries] : w.d) {
        auto src = newindex.find(deg);
        auto tgt = newindex.find(deg + 1);
        if (src == newindex.end()) continue;
        for (const auto& [r, c, s] : entries) {
            if (src->second[c] < 0) continue;
            const int nr = (tgt == newindex.end()) ? -1 : tgt->second[r];
            if (nr < 0) {
                // the differential must restrict to the filtration slice:
                // a term raising the class count would falsify compatibility
                const int lvl = class_count(w.basis.at(deg + 1)[r]) - S;
                if (lvl > keep_max)
                    throw std::logic_error("filtration: differential does not restrict");
                continue;  // dropped into F_{N-1}: fine for a graded piece
            }
            out.d[deg].emplace_back(nr, src->second[c], s);
        }
    }
    return out;
}

}  // namespace

StructuralWindow filtration_window(const StructuralWindow& w, int N) {
    return filter_window(w, N, std::numeric_limits<int>::min());
}

StructuralWindow graded_piece(const StructuralWindow& w, int N) { return filter_window(w, N, N); }

template <class F>
GBasis<F> g_basis(const StructuralWindow& w, int N) {
    const int S = window_source_size(w);
    StructuralWindow fn = filtration_window(w, N);
    GBasis<F> out;
    auto bit = fn.basis.find(-N);
    if (bit == fn.basis.end()) return out;
    out.ambient = bit->second;

    // rows: degree -N+1 elements of F_N sitting in the top graded layer
    std::vector<int> toprow;
    auto tit = fn.basis.find(-N + 1);
    if (tit != fn.basis.end()) {
        toprow.assign(tit->second.size(), -1);
        int nr = 0;
        for (std::size_t i = 0; i < tit->second.size(); ++i)
            if (class_count(tit->second[i]) - S == N) toprow[i] = nr++;
        SparseMatrix<F> m(nr, static_cast<int>(out.ambient.size()));
        auto dit = fn.d.find(-N);
        if (dit != fn.d.end())
            for (const auto& [r, c, s] : dit->second)
                if (toprow[r] >= 0) m.add(toprow[r], c, F(s));
        out.vectors = m.kernel_basis();
    } else {
        SparseMatrix<F> m(0, static_cast<int>(out.ambient.size()));
        out.vectors = m.kernel_basis();
    }
    return out;
}

template GBasis<Rational> g_basis<Rational>(const StructuralWindow&, int);
template GBasis<Zp> g_basis<Zp>(const StructuralWindow&, int);

SimplexChains simplex_chains(int n) {
    if (n < 0) throw std::invalid_argument("simplex_chains: n must be >= 0");
    SimplexChains sc;
    sc.n = n;
    // subsets by size k+1 live in degree -k
    std::vector<std::vector<std::vector<int>>> by_size(n + 2);
    std::vector<int> cur;
    auto rec = [&](int start, auto&& self) -> void {
        if (!cur.empty()) by_size[cur.size()].push_back(cur);
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(v + 1, self);
            cur.pop_back();
        }
    };
    rec(0, rec);
    for (int size = 1; size <= n + 1; ++size) sc.basis[-(size - 1)] = by_size[size];

    auto index_in = [&](int deg, const std::vector<int>& v) {
        const auto& b = sc.basis.at(deg);
        auto it = std::lower_bound(b.begin(), b.end(), v);
        return static_cast<int>(it - b.begin());
    };
    for (int deg = -n; deg < 0; ++deg) {
        auto& entries = sc.d[deg];
        const auto& b = sc.basis.at(deg);
        for (int col = 0; col < static_cast<int>(b.size()); ++col) {
            const auto& subset = b[col];
            for (std::size_t j = 0; j < subset.size(); ++j) {
                std::vector<int> face = subset;
                face.erase(face.begin() + j);
                entries.emplace_back(index_in(deg + 1, face), col, j % 2 == 0 ? 1 : -1);
            }
        }
    }
    return sc;
}

}  // namespace scop
