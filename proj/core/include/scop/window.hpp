#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "scop/seq.hpp"
#include "scop/sparse.hpp"
#include "scop/two_tree.hpp"

namespace scop {

/// Truncation bounds of a realized window.  Basis elements satisfy
/// sum |I_s| <= max_block_total, |I_s| <= max_block_each and |J| <= max_J;
/// differential terms leaving the J bound are dropped (the span of large-J
/// elements is a subcomplex, so this is a quotient complex), terms shrinking
/// blocks always stay inside (a subcomplex), hence d.d = 0 exactly.
struct WindowCutoffs {
    int max_block_total = 1 << 20;
    int max_block_each = 1 << 20;
    int max_J = 1 << 20;

    WindowCutoffs grown() const {
        WindowCutoffs c = *this;
        if (c.max_block_total < (1 << 20)) ++c.max_block_total;
        if (c.max_block_each < (1 << 20)) ++c.max_block_each;
        if (c.max_J < (1 << 20)) ++c.max_J;
        return c;
    }
};

struct WindowSpec {
    enum class Family {
        se,      // all elements over a fixed source
        seq,     // elements compatible with a 2-tree (Seq(tau))
        xi       // block-contiguous arrangements (the appendix-style bicomplex)
    };
    Family family = Family::se;
    bool sc = false;
    int n_blocks = 0;  // cochain blocks (ignored for seq: derived from tau)
    int n_alg = 0;     // algebra tokens (sc only; for seq derived from tau)
    std::optional<TwoTree> tau;
    WindowCutoffs cutoffs;
};

/// Totalized chain complex of a polysimplicial/cosimplicial family, within a
/// window.  Basis labels are the simplicially non-degenerate elements (every
/// elementary class strictly increasing under q; for the algebra color,
/// every class a singleton); all q maps participate.  Degree of a label is
/// (|J|-1) - sum(|I_s|-1).  The differential is the alternating coface sum
/// on J plus Koszul-signed face sums on each block; d.d = 0 is asserted at
/// construction.
struct StructuralWindow {
    WindowSpec spec;
    std::map<int, std::vector<SeqElem>> basis;  // per degree, canonically sorted
    // per source degree k: entries (row in degree k+1, col in degree k, sign)
    std::map<int, std::vector<std::tuple<int, int, int>>> d;

    int dim(int degree) const;
    int degree_min() const;
    int degree_max() const;
    std::optional<int> index_of(int degree, const SeqElem& u) const;

    template <class F>
    SparseMatrix<F> matrix(int degree) const {
        const int nsrc = dim(degree), ntgt = dim(degree + 1);
        SparseMatrix<F> m(ntgt, nsrc);
        auto it = d.find(degree);
        if (it != d.end())
            for (const auto& [r, c, s] : it->second) m.add(r, c, F(s));
        return m;
    }

    void assert_d_squared() const;
};

/// Degree of a single element under the window convention.
int window_degree(const SeqElem& u);

/// Simplicial non-degeneracy of the basis convention.
bool simplicially_nondegenerate(const SeqElem& u);

/// All terms of the untruncated differential of u: cofaces into J with sign
/// (-1)^i, then for each block s a face sum with Koszul prefix
/// (-1)^{(|J|-1) + sum_{s'<s}(|I_s'|-1)}; degenerate face images are dropped.
std::vector<std::pair<SeqElem, int>> differential_terms(const SeqElem& u);

StructuralWindow realize_window(const WindowSpec& spec);

/// Per-degree homology dimensions of the window.
template <class F>
std::map<int, int> homology_dims(const StructuralWindow& w) {
    std::map<int, int> ranks;
    for (int k = w.degree_min() - 1; k <= w.degree_max(); ++k)
        ranks[k] = w.matrix<F>(k).rank();
    std::map<int, int> h;
    for (int k = w.degree_min(); k <= w.degree_max(); ++k)
        h[k] = w.dim(k) - ranks[k] - ranks[k - 1];
    return h;
}

/// Source-set size |S| of the window's elements (blocks + algebra tokens).
int window_source_size(const StructuralWindow& w);

/// The filtration slice F_N (labels with |v| <= N + |S|) and the graded
/// piece F_N / F_{N-1} (labels with |v| = N + |S|, differential restricted
/// to class-count-preserving terms).  Throws if the differential fails to
/// restrict, which would falsify the compatibility lemma.
StructuralWindow filtration_window(const StructuralWindow& w, int N);
StructuralWindow graded_piece(const StructuralWindow& w, int N);

/// Spanning set of G^N = { v in F_N, degree -N | dv in F_{N-1} }, as exact
/// kernel vectors over the degree -N basis of F_N.
template <class F>
struct GBasis {
    std::vector<SeqElem> ambient;               // degree -N basis of F_N
    std::vector<std::vector<F>> vectors;        // kernel basis, coordinates over ambient
};
template <class F>
GBasis<F> g_basis(const StructuralWindow& w, int N);

/// Normalized chains of the n-simplex in non-positive degrees: degree -k
/// basis = strictly increasing (k+1)-subsets of {0..n}, boundary the
/// alternating face sum.  Small self-contained fixture used by tests.
struct SimplexChains {
    int n;
    std::map<int, std::vector<std::vector<int>>> basis;  // degree -> vertex subsets
    std::map<int, std::vector<std::tuple<int, int, int>>> d;  // as in StructuralWindow
    template <class F>
    SparseMatrix<F> matrix(int degree) const {
        auto bit = basis.find(degree), tit = basis.find(degree + 1);
        const int nsrc = bit == basis.end() ? 0 : static_cast<int>(bit->second.size());
        const int ntgt = tit == basis.end() ? 0 : static_cast<int>(tit->second.size());
        SparseMatrix<F> m(ntgt, nsrc);
        auto it = d.find(degree);
        if (it != d.end())
            for (const auto& [r, c, s] : it->second) m.add(r, c, F(s));
        return m;
    }
};
SimplexChains simplex_chains(int n);

}  // namespace scop
