#include "scop/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "scop/field.hpp"
#include "scop/sparse.hpp"

namespace scop {

void Poset::assert_poset() const {
    const int n = size();
    for (int i = 0; i < n; ++i)
        if (!leq[i][i]) throw std::logic_error("poset: not reflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq[i][j] && leq[j][i]) throw std::logic_error("poset: not antisymmetric");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (leq[i][j] && leq[j][k] && !leq[i][k])
                    throw std::logic_error("poset: not transitive");
}

namespace {

Poset relate(std::vector<LabeledTwoTree> objects) {
    Poset p;
    p.objects = std::move(objects);
    const int n = p.size();
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p.leq[i][j] = (i == j) || poset_morphism_exists(p.objects[i], p.objects[j]);
    p.assert_poset();
    return p;
}

}  // namespace

Poset build_J(int S_size, bool sc, const std::vector<int>& sa_labels, int bound) {
    return relate(enumerate_pruned(S_size, sc, sa_labels, false, bound));
}

DSurjection sigma_on_object(const DSurjection& sigma_labels, const LabeledTwoTree& obj) {
    std::vector<int> addr_of_label(obj.labels.size());
    for (std::size_t a = 0; a < obj.labels.size(); ++a) addr_of_label[obj.labels[a]] = static_cast<int>(a);
    DSurjection out;
    out.values.reserve(sigma_labels.values.size());
    for (int l : sigma_labels.values) out.values.push_back(addr_of_label.at(l));
    return out;
}

Poset build_J_sigma(int S_size, bool sc, const std::vector<int>& sa_labels,
                    const DSurjection& sigma, int N, int bound) {
    if (sigma.length() != N + S_size)
        throw std::invalid_argument("build_J_sigma: sigma has the wrong length");
    std::vector<LabeledTwoTree> keep;
    for (auto& obj : enumerate_pruned(S_size, sc, sa_labels, false, bound))
        if (in_D_tau(sigma_on_object(sigma, obj), obj.tree)) keep.push_back(std::move(obj));
    return relate(std::move(keep));
}

std::map<int, int> order_complex_reduced_homology(const Poset& p) {
    const int n = p.size();
    // chains of the strict order, grouped by dimension (= length - 1)
    std::vector<std::vector<std::vector<int>>> chains;  // [dim][index] = vertex list
    std::vector<std::vector<int>> frontier;
    for (int v = 0; v < n; ++v) frontier.push_back({v});
    while (!frontier.empty()) {
        chains.push_back(frontier);
        std::vector<std::vector<int>> next;
        for (const auto& ch : frontier)
            for (int w = 0; w < n; ++w)
                if (w != ch.back() && p.leq[ch.back()][w]) {
                    auto ext = ch;
                    ext.push_back(w);
                    next.push_back(std::move(ext));
                }
        frontier = std::move(next);
    }

    std::map<int, int> h;
    if (chains.empty()) {
        h[-1] = 1;  // reduced homology of the empty complex
        return h;
    }
    for (auto& level : chains) std::sort(level.begin(), level.end());

    auto index_in = [&](int dim, const std::vector<int>& ch) {
        const auto& lv = chains[dim];
        auto it = std::lower_bound(lv.begin(), lv.end(), ch);
        return static_cast<int>(it - lv.begin());
    };

    const int top = static_cast<int>(chains.size()) - 1;
    // boundary_k : C_k -> C_{k-1}; augmentation at k = 0
    std::vector<int> ranks(top + 2, 0);
    {
        SparseMatrix<Rational> aug(1, static_cast<int>(chains[0].size()));
        for (int c = 0; c < aug.cols(); ++c) aug.add(0, c, Rational(1));
        ranks[0] = aug.rank();
    }
    for (int k = 1; k <= top; ++k) {
        SparseMatrix<Rational> bd(static_cast<int>(chains[k - 1].size()),
                                  static_cast<int>(chains[k].size()));
        for (int c = 0; c < static_cast<int>(chains[k].size()); ++c) {
            const auto& ch = chains[k][c];
            for (int j = 0; j <= k; ++j) {
                std::vector<int> face = ch;
                face.erase(face.begin() + j);
                bd.add(index_in(k - 1, face), c, Rational(j % 2 == 0 ? 1 : -1));
            }
        }
        ranks[k] = bd.rank();
    }
    // reduced: dim H_k = dim C_k - rank d_k - rank d_{k+1}, with d_0 = augmentation
    for (int k = 0; k <= top; ++k) {
        const int dimk = static_cast<int>(chains[k].size());
        const int rout = ranks[k];
        const int rin = k + 1 <= top ? ranks[k + 1] : 0;
        h[k] = dimk - rout - rin;
    }
    return h;
}

int set_colim_size(const Poset& p, const SetFunctor& f) {
    if (static_cast<int>(f.sizes.size()) != p.size())
        throw std::invalid_argument("set_colim_size: functor size mismatch");
    std::vector<int> offset(p.size() + 1, 0);
    for (int i = 0; i < p.size(); ++i) offset[i + 1] = offset[i] + f.sizes[i];
    std::vector<int> parent(offset.back());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& [ij, img] : f.maps) {
        const auto [i, j] = ij;
        if (!p.leq[i][j]) throw std::invalid_argument("set_colim_size: map on unrelated pair");
        if (static_cast<int>(img.size()) != f.sizes[j])
            throw std::invalid_argument("set_colim_size: map has wrong source size");
        for (int x = 0; x < f.sizes[j]; ++x) unite(offset[j] + x, offset[i] + img[x]);
    }
    int classes = 0;
    for (int x = 0; x < offset.back(); ++x)
        if (find(x) == x) ++classes;
    return classes;
}

}  // namespace scop
