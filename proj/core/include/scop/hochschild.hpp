#pragma once

// Conventions used by every formula in this module:
//   - Hochschild coboundary d = sum_{i=0}^{n+1} (-1)^i d^i with
//     d^0 P = a1.P(a2,..), d^i P = P(..,a_i a_{i+1},..), d^{n+1} P = P(..).a_{n+1}.
//   - cup: (P u Q)(a1..a_{p+q}) = P(a1..a_p) Q(a_{p+1}..), no sign.
//   - brace: P{Q1..Qk} = sum over insertion slots with sign
//     (-1)^{sum_j (arity(Qj)-1) * (#arguments before Qj)}.
//   - bracket: [P,Q] = P{Q} - (-1)^{(p-1)(q-1)} Q{P}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scop/field.hpp"
#include "scop/seq.hpp"
#include "scop/sparse.hpp"
#include "scop/tree.hpp"
#include "scop/window.hpp"

namespace scop {

template <class F>
struct Algebra {
    int dim = 0;
    std::vector<std::string> names;
    // table[i][j][k] = coefficient of e_k in e_i * e_j; e_0 is the unit
    std::vector<std::vector<std::vector<F>>> table;

    std::vector<F> unit() const {
        std::vector<F> v(dim, field_traits<F>::zero());
        v[0] = field_traits<F>::one();
        return v;
    }
    std::vector<F> basis_vec(int i) const {
        std::vector<F> v(dim, field_traits<F>::zero());
        v[i] = field_traits<F>::one();
        return v;
    }
    std::vector<F> mul(const std::vector<F>& a, const std::vector<F>& b) const {
        std::vector<F> out(dim, field_traits<F>::zero());
        for (int i = 0; i < dim; ++i) {
            if (field_traits<F>::is_zero(a[i])) continue;
            for (int j = 0; j < dim; ++j) {
                if (field_traits<F>::is_zero(b[j])) continue;
                const F c = a[i] * b[j];
                for (int k = 0; k < dim; ++k) out[k] += c * table[i][j][k];
            }
        }
        return out;
    }

    void validate() const;
    std::vector<std::vector<F>> center() const;
};

/// Element of hom(A^{tensor n}, A): dense coefficients over the full basis.
template <class F>
struct MultiMap {
    int arity = 0;
    int dim = 0;
    std::vector<F> coef;  // index = tuple (base-dim, first argument most significant) * dim + k

    static MultiMap zero(int arity, int dim) {
        MultiMap m;
        m.arity = arity;
        m.dim = dim;
        std::size_t n = dim;
        for (int i = 0; i < arity; ++i) n *= dim;
        m.coef.assign(n, field_traits<F>::zero());
        return m;
    }
    std::size_t tuples() const {
        std::size_t n = 1;
        for (int i = 0; i < arity; ++i) n *= dim;
        return n;
    }
    F& at(std::size_t tuple, int k) { return coef[tuple * dim + k]; }
    const F& at(std::size_t tuple, int k) const { return coef[tuple * dim + k]; }

    std::vector<F> eval(const std::vector<std::vector<F>>& args) const;
    bool operator==(const MultiMap&) const = default;
};

/// Normalized cochain: multilinear map (A / span(e0))^{tensor n} -> A,
/// coefficients over complement tuples (entries 1..dim-1).
template <class F>
struct Cochain {
    int arity = 0;
    int dim = 0;
    std::vector<F> coef;  // tuple over (dim-1) letters * dim + k

    static Cochain zero(int arity, int dim) {
        Cochain c;
        c.arity = arity;
        c.dim = dim;
        std::size_t n = dim;
        for (int i = 0; i < arity; ++i) n *= dim - 1;
        c.coef.assign(n, field_traits<F>::zero());
        return c;
    }
    std::size_t tuples() const {
        std::size_t n = 1;
        for (int i = 0; i < arity; ++i) n *= dim - 1;
        return n;
    }
    F& at(std::size_t tuple, int k) { return coef[tuple * dim + k]; }
    const F& at(std::size_t tuple, int k) const { return coef[tuple * dim + k]; }

    /// Extension by zero on unit directions.
    MultiMap<F> extend() const;
    /// Restriction to complement tuples.
    static Cochain restrict_from(const MultiMap<F>& m);
    bool operator==(const Cochain&) const = default;
};

template <class F>
MultiMap<F> mm_differential(const Algebra<F>& A, const MultiMap<F>& P);
template <class F>
Cochain<F> differential(const Algebra<F>& A, const Cochain<F>& P);

template <class F>
MultiMap<F> cup_mm(const Algebra<F>& A, const MultiMap<F>& P, const MultiMap<F>& Q);
template <class F>
MultiMap<F> brace_mm(const Algebra<F>& A, const MultiMap<F>& P,
                     const std::vector<MultiMap<F>>& Qs);
template <class F>
MultiMap<F> bracket_mm(const Algebra<F>& A, const MultiMap<F>& P, const MultiMap<F>& Q);

template <class F>
Cochain<F> cup(const Algebra<F>& A, const Cochain<F>& P, const Cochain<F>& Q) {
    return Cochain<F>::restrict_from(cup_mm(A, P.extend(), Q.extend()));
}
template <class F>
Cochain<F> brace(const Algebra<F>& A, const Cochain<F>& P, const std::vector<Cochain<F>>& Qs) {
    std::vector<MultiMap<F>> qs;
    for (const auto& q : Qs) qs.push_back(q.extend());
    return Cochain<F>::restrict_from(brace_mm(A, P.extend(), qs));
}
template <class F>
Cochain<F> bracket(const Algebra<F>& A, const Cochain<F>& P, const Cochain<F>& Q) {
    return Cochain<F>::restrict_from(bracket_mm(A, P.extend(), Q.extend()));
}

/// i(P, a) = a . P(1,..,1); on the normalized complex only arity 0
/// contributes.
template <class F>
std::vector<F> contraction(const Algebra<F>& A, const Cochain<F>& P, const std::vector<F>& a);

/// Recursive evaluation of a marked planar tree on concrete inputs: vertices
/// marked s apply cochains[s], unmarked vertices multiply their children
/// (the empty product is the unit), output leaves consume out_args by label
/// order, algebra leaves consume alg_args by label.
template <class F>
std::vector<F> eval_tree(const Algebra<F>& A, const MarkedPlanarTree& t,
                         const std::map<int, MultiMap<F>>& cochains,
                         const std::map<int, std::vector<F>>& alg_args,
                         const std::vector<std::vector<F>>& out_args);

/// The tree as a multilinear operation (coefficients from evaluating on all
/// basis tuples); output arity = number of output marks.
template <class F>
MultiMap<F> tree_operation(const Algebra<F>& A, const MarkedPlanarTree& t,
                           const std::map<int, MultiMap<F>>& cochains);

/// Action of a window basis element on cochains whose arities match its
/// blocks (block size = arity + 1); the result has arity |J| - 1.
template <class F>
MultiMap<F> dg_action(const Algebra<F>& A, const SeqElem& u,
                      const std::vector<MultiMap<F>>& cochains);

/// d(u(P)) = (du)(P), with the right-hand side summing the differential
/// terms of u whose profile still matches the P's (the others act by zero).
template <class F>
bool dg_action_chain_map_holds(const Algebra<F>& A, const SeqElem& u,
                               const std::vector<MultiMap<F>>& cochains);

struct HHResult {
    std::vector<int> dims;  // HH^0 .. HH^nmax
};

/// Normalized-complex computation; representatives[n] spans HH^n.
template <class F>
struct HHData {
    std::vector<int> dims;
    std::vector<std::vector<Cochain<F>>> representatives;
};
template <class F>
HHData<F> hh(const Algebra<F>& A, int n_max);

/// Independent oracle: the same dimensions from the full (non-normalized)
/// complex of MultiMaps.
template <class F>
HHResult hh_full_oracle(const Algebra<F>& A, int n_max);

struct Hsc2Report {
    bool algebra_valid = false;
    bool cup_commutative = false;   // defects of representatives are coboundaries
    bool jacobi = false;            // graded Jacobi defects are coboundaries
    bool leibniz = false;           // bracket-over-cup defects are coboundaries
    bool module_rule = false;       // central products split multiplicatively
    bool contraction_rule = false;  // only arity 0 contributes, a P ordering
    bool commutative_algebra = false;
    std::vector<std::string> failures;
    bool ok() const {
        return algebra_valid && cup_commutative && jacobi && leibniz && module_rule &&
               contraction_rule;
    }
};
template <class F>
Hsc2Report verify_hsc2(const Algebra<F>& A);

/// Built-in structure-constant fixtures: "dual_numbers", "group_z2",
/// "upper2", "m2".
template <class F>
Algebra<F> builtin_algebra(const std::string& name);

}  // namespace scop
