#include "scop/hochschild.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scop {

namespace {

std::size_t encode(const std::vector<int>& tuple, int base) {
    std::size_t idx = 0;
    for (int t : tuple) idx = idx * base + static_cast<std::size_t>(t);
    return idx;
}

bool next_tuple(std::vector<int>& t, int base) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

/// row-reduced span with incremental insertion, for representative picking
template <class F>
class IncrementalSpan {
  public:
    explicit IncrementalSpan(int width) : width_(width) {}
    bool add(std::vector<F> v) {
        for (const auto& [lead, row] : rows_) {
            if (field_traits<F>::is_zero(v[lead])) continue;
            const F f = v[lead];
            for (int i = 0; i < width_; ++i) v[i] -= f * row[i];
        }
        int lead = -1;
        for (int i = 0; i < width_; ++i)
            if (!field_traits<F>::is_zero(v[i])) {
                lead = i;
                break;
            }
        if (lead < 0) return false;
        const F inv = field_traits<F>::one() / v[lead];
        for (int i = 0; i < width_; ++i) v[i] = v[i] * inv;
        rows_.emplace_back(lead, std::move(v));
        return true;
    }

  private:
    int width_;
    std::vector<std::pair<int, std::vector<F>>> rows_;
};

}  // namespace

template <class F>
void Algebra<F>::validate() const {
    if (dim < 1) throw std::invalid_argument("algebra: dimension must be positive");
    if (static_cast<int>(table.size()) != dim)
        throw std::invalid_argument("algebra: table has wrong shape");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != dim)
            throw std::invalid_argument("algebra: table has wrong shape");
        for (const auto& cell : row)
            if (static_cast<int>(cell.size()) != dim)
                throw std::invalid_argument("algebra: table has wrong shape");
    }
    for (int i = 0; i < dim; ++i) {
        if (mul(unit(), basis_vec(i)) != basis_vec(i) || mul(basis_vec(i), unit()) != basis_vec(i))
            throw std::invalid_argument("algebra: e0 is not a two-sided unit");
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (mul(mul(basis_vec(i), basis_vec(j)), basis_vec(k)) !=
                    mul(basis_vec(i), mul(basis_vec(j), basis_vec(k))))
                    throw std::invalid_argument("algebra: associativity fails at (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
}

template <class F>
std::vector<std::vector<F>> Algebra<F>::center() const {
    // z with z e_i = e_i z for all i: kernel of the stacked commutators
    SparseMatrix<F> m(dim * dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            for (int j = 0; j < dim; ++j)
                m.add(i * dim + k, j, table[j][i][k] - table[i][j][k]);
    return m.kernel_basis();
}

template <class F>
std::vector<F> MultiMap<F>::eval(const std::vector<std::vector<F>>& args) const {
    if (static_cast<int>(args.size()) != arity)
        throw std::invalid_argument("MultiMap::eval: arity mismatch");
    std::vector<F> out(dim, field_traits<F>::zero());
    std::vector<int> t(arity, 0);
    do {
        F c = field_traits<F>::one();
        bool zero = false;
        for (int i = 0; i < arity && !zero; ++i) {
            if (field_traits<F>::is_zero(args[i][t[i]]))
                zero = true;
            else
                c *= args[i][t[i]];
        }
        if (!zero) {
            const std::size_t idx = encode(t, dim);
            for (int k = 0; k < dim; ++k) out[k] += c * at(idx, k);
        }
    } while (arity > 0 && next_tuple(t, dim));
    return out;
}

template <class F>
MultiMap<F> Cochain<F>::extend() const {
    MultiMap<F> m = MultiMap<F>::zero(arity, dim);
    if (arity > 0 && dim == 1) return m;  // no complement directions
    std::vector<int> t(arity, 0);  // over complement letters 0..dim-2
    do {
        std::vector<int> full(arity);
        for (int i = 0; i < arity; ++i) full[i] = t[i] + 1;
        const std::size_t src = encode(t, dim - 1), dst = encode(full, dim);
        for (int k = 0; k < dim; ++k) m.at(dst, k) = at(src, k);
    } while (arity > 0 && next_tuple(t, dim - 1));
    return m;
}

template <class F>
Cochain<F> Cochain<F>::restrict_from(const MultiMap<F>& m) {
    Cochain c = Cochain::zero(m.arity, m.dim);
    if (m.arity > 0 && m.dim == 1) return c;
    std::vector<int> t(m.arity, 0);
    do {
        std::vector<int> full(m.arity);
        for (int i = 0; i < m.arity; ++i) full[i] = t[i] + 1;
        const std::size_t src = encode(full, m.dim), dst = encode(t, m.dim - 1);
        for (int k = 0; k < m.dim; ++k) c.at(dst, k) = m.at(src, k);
    } while (m.arity > 0 && next_tuple(t, m.dim - 1));
    return c;
}

template <class F>
MultiMap<F> mm_differential(const Algebra<F>& A, const MultiMap<F>& P) {
    const int n = P.arity, d = A.dim;
    MultiMap<F> out = MultiMap<F>::zero(n + 1, d);
    std::vector<int> t(n + 1, 0);
    do {
        std::vector<F> val(d, field_traits<F>::zero());
        // d^0: a1 . P(a2..)
        {
            std::vector<int> rest(t.begin() + 1, t.end());
            const std::size_t idx = encode(rest, d);
            std::vector<F> pv(d);
            for (int k = 0; k < d; ++k) pv[k] = P.at(idx, k);
            auto m = A.mul(A.basis_vec(t[0]), pv);
            for (int k = 0; k < d; ++k) val[k] += m[k];
        }
        // d^i: merge arguments i, i+1 (1-based)
        for (int i = 1; i <= n; ++i) {
            const int sign = i % 2 == 0 ? 1 : -1;
            for (int mid = 0; mid < d; ++mid) {
                const F c = A.table[t[i - 1]][t[i]][mid];
                if (field_traits<F>::is_zero(c)) continue;
                std::vector<int> merged;
                merged.reserve(n);
                for (int j = 0; j < i - 1; ++j) merged.push_back(t[j]);
                merged.push_back(mid);
                for (int j = i + 1; j <= n; ++j) merged.push_back(t[j]);
                const std::size_t idx = encode(merged, d);
                for (int k = 0; k < d; ++k)
                    val[k] += F(sign) * c * P.at(idx, k);
            }
        }
        // d^{n+1}: P(..) . a_{n+1}
        {
            const int sign = (n + 1) % 2 == 0 ? 1 : -1;
            std::vector<int> rest(t.begin(), t.end() - 1);
            const std::size_t idx = encode(rest, d);
            std::vector<F> pv(d);
            for (int k = 0; k < d; ++k) pv[k] = P.at(idx, k);
            auto m = A.mul(pv, A.basis_vec(t[n]));
            for (int k = 0; k < d; ++k) val[k] += F(sign) * m[k];
        }
        const std::size_t idx = encode(t, d);
        for (int k = 0; k < d; ++k) out.at(idx, k) = val[k];
    } while (next_tuple(t, d));
    return out;
}

template <class F>
Cochain<F> differential(const Algebra<F>& A, const Cochain<F>& P) {
    return Cochain<F>::restrict_from(mm_differential(A, P.extend()));
}

template <class F>
MultiMap<F> cup_mm(const Algebra<F>& A, const MultiMap<F>& P, const MultiMap<F>& Q) {
    const int d = A.dim;
    MultiMap<F> out = MultiMap<F>::zero(P.arity + Q.arity, d);
    std::vector<int> t(P.arity + Q.arity, 0);
    do {
        std::vector<int> tp(t.begin(), t.begin() + P.arity), tq(t.begin() + P.arity, t.end());
        std::vector<F> pv(d), qv(d);
        const std::size_t pi = encode(tp, d), qi = encode(tq, d);
        for (int k = 0; k < d; ++k) {
            pv[k] = P.at(pi, k);
            qv[k] = Q.at(qi, k);
        }
        auto m = A.mul(pv, qv);
        const std::size_t idx = encode(t, d);
        for (int k = 0; k < d; ++k) out.at(idx, k) = m[k];
    } while (!t.empty() && next_tuple(t, d));
    return out;
}

namespace {

// evaluate P with vector-valued arguments given as basis-coefficient tables
template <class F>
std::vector<F> eval_mixed(const MultiMap<F>& P, const std::vector<std::vector<F>>& args) {
    return P.eval(args);
}

}  // namespace

template <class F>
MultiMap<F> brace_mm(const Algebra<F>& A, const MultiMap<F>& P,
                     const std::vector<MultiMap<F>>& Qs) {
    const int d = A.dim, p = P.arity, k = static_cast<int>(Qs.size());
    int m = p - k;
    for (const auto& q : Qs) m += q.arity;
    // no insertion slots (or a negative-degree target): the zero operation
    if (p < k || m < 0) return MultiMap<F>::zero(std::max(m, 0), d);
    if (m > 8) throw std::invalid_argument("brace: arity beyond the configured maximum");
    MultiMap<F> out = MultiMap<F>::zero(m, d);

    // slots 1 <= s_1 < ... < s_k <= p of P receiving the Q's
    std::vector<int> slots(k);
    std::iota(slots.begin(), slots.end(), 1);
    auto advance_slots = [&]() {
        for (int i = k - 1; i >= 0; --i) {
            if (++slots[i] <= p - (k - 1 - i)) {
                for (int j = i + 1; j < k; ++j) slots[j] = slots[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    if (k == 0) return P;
    do {
        // number of outer arguments before each Q slot
        int sign_exp = 0;
        std::vector<int> before(k);
        for (int j = 0; j < k; ++j) {
            int consumed = 0;
            for (int l = 0; l < j; ++l) consumed += Qs[l].arity;
            before[j] = slots[j] - 1 - j + consumed;
            sign_exp += (Qs[j].arity - 1) * before[j];
        }
        const int sign = sign_exp % 2 == 0 ? 1 : -1;

        std::vector<int> t(m, 0);
        bool more = true;
        while (more) {
            // build P's arguments: plain outer args and evaluated Q values
            std::vector<std::vector<F>> pargs(p);
            int pos = 0;  // cursor in the outer tuple
            int qj = 0;
            for (int s = 1; s <= p; ++s) {
                if (qj < k && slots[qj] == s) {
                    std::vector<std::vector<F>> qargs;
                    for (int a = 0; a < Qs[qj].arity; ++a) {
                        std::vector<F> v(d, field_traits<F>::zero());
                        v[t[pos++]] = field_traits<F>::one();
                        qargs.push_back(std::move(v));
                    }
                    pargs[s - 1] = Qs[qj].eval(qargs);
                    ++qj;
                } else {
                    std::vector<F> v(d, field_traits<F>::zero());
                    v[t[pos++]] = field_traits<F>::one();
                    pargs[s - 1] = std::move(v);
                }
            }
            auto val = eval_mixed(P, pargs);
            const std::size_t idx = m == 0 ? 0 : encode(t, d);
            for (int c = 0; c < d; ++c) out.at(idx, c) += F(sign) * val[c];
            more = m > 0 && next_tuple(t, d);
        }
    } while (advance_slots());
    return out;
}

template <class F>
MultiMap<F> bracket_mm(const Algebra<F>& A, const MultiMap<F>& P, const MultiMap<F>& Q) {
    MultiMap<F> pq = brace_mm(A, P, {Q});
    MultiMap<F> qp = brace_mm(A, Q, {P});
    const int e = (P.arity - 1) * (Q.arity - 1);
    const F s = F(e % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < pq.coef.size(); ++i) pq.coef[i] -= s * qp.coef[i];
    return pq;
}

template <class F>
std::vector<F> contraction(const Algebra<F>& A, const Cochain<F>& P, const std::vector<F>& a) {
    if (P.arity == 0) {
        std::vector<F> pv(A.dim);
        for (int k = 0; k < A.dim; ++k) pv[k] = P.at(0, k);
        return A.mul(a, pv);
    }
    return std::vector<F>(A.dim, field_traits<F>::zero());
}

namespace {

template <class F>
std::vector<F> eval_tree_rec(const Algebra<F>& A, const TreeNode& v,
                             const std::map<int, MultiMap<F>>& cochains,
                             const std::map<int, std::vector<F>>& alg_args,
                             const std::vector<std::vector<F>>& out_args,
                             const std::map<int, int>& out_index) {
    switch (v.kind) {
        case TreeNode::Kind::output:
            return out_args.at(out_index.at(v.label));
        case TreeNode::Kind::algebra:
            return alg_args.at(v.label);
        case TreeNode::Kind::cochain: {
            std::vector<std::vector<F>> args;
            for (const auto& c : v.children)
                args.push_back(eval_tree_rec(A, c, cochains, alg_args, out_args, out_index));
            auto it = cochains.find(v.label);
            if (it == cochains.end())
                throw std::invalid_argument("eval_tree: missing cochain for label " +
                                            std::to_string(v.label));
            if (it->second.arity != static_cast<int>(args.size()))
                throw std::invalid_argument("eval_tree: arity mismatch at label " +
                                            std::to_string(v.label));
            return it->second.eval(args);
        }
        case TreeNode::Kind::unmarked: {
            std::vector<F> prod = A.unit();
            for (const auto& c : v.children)
                prod = A.mul(prod, eval_tree_rec(A, c, cochains, alg_args, out_args, out_index));
            return prod;
        }
    }
    throw std::logic_error("eval_tree: unreachable");
}

void collect_out_labels(const TreeNode& v, std::vector<int>& out) {
    if (v.kind == TreeNode::Kind::output) out.push_back(v.label);
    for (const auto& c : v.children) collect_out_labels(c, out);
}

}  // namespace

template <class F>
std::vector<F> eval_tree(const Algebra<F>& A, const MarkedPlanarTree& t,
                         const std::map<int, MultiMap<F>>& cochains,
                         const std::map<int, std::vector<F>>& alg_args,
                         const std::vector<std::vector<F>>& out_args) {
    std::vector<int> labels;
    collect_out_labels(t.root, labels);
    std::sort(labels.begin(), labels.end());
    if (labels.size() != out_args.size())
        throw std::invalid_argument("eval_tree: wrong number of output arguments");
    std::map<int, int> out_index;
    for (std::size_t i = 0; i < labels.size(); ++i) out_index[labels[i]] = static_cast<int>(i);
    return eval_tree_rec(A, t.root, cochains, alg_args, out_args, out_index);
}

template <class F>
MultiMap<F> tree_operation(const Algebra<F>& A, const MarkedPlanarTree& t,
                           const std::map<int, MultiMap<F>>& cochains) {
    std::vector<int> labels;
    collect_out_labels(t.root, labels);
    const int m = static_cast<int>(labels.size());
    MultiMap<F> out = MultiMap<F>::zero(m, A.dim);
    std::vector<int> tu(m, 0);
    do {
        std::vector<std::vector<F>> args;
        for (int i = 0; i < m; ++i) args.push_back(A.basis_vec(tu[i]));
        auto val = eval_tree(A, t, cochains, {}, args);
        const std::size_t idx = m == 0 ? 0 : encode(tu, A.dim);
        for (int k = 0; k < A.dim; ++k) out.at(idx, k) = val[k];
    } while (m > 0 && next_tuple(tu, A.dim));
    return out;
}

template <class F>
MultiMap<F> dg_action(const Algebra<F>& A, const SeqElem& u,
                      const std::vector<MultiMap<F>>& cochains) {
    if (u.sc) throw std::invalid_argument("dg_action: cochain-colored elements only");
    if (cochains.size() != u.blocks.size())
        throw std::invalid_argument("dg_action: wrong number of cochains");
    for (std::size_t s = 0; s < u.blocks.size(); ++s)
        if (cochains[s].arity + 1 != u.blocks[s])
            throw std::invalid_argument("dg_action: profile mismatch at block " +
                                        std::to_string(s));
    MarkedPlanarTree t = nu_tree(seq_to_word(u));
    std::map<int, MultiMap<F>> by_label;
    for (std::size_t s = 0; s < cochains.size(); ++s) by_label.emplace(static_cast<int>(s), cochains[s]);
    return tree_operation(A, t, by_label);
}

template <class F>
bool dg_action_chain_map_holds(const Algebra<F>& A, const SeqElem& u,
                               const std::vector<MultiMap<F>>& cochains) {
    MultiMap<F> lhs = mm_differential(A, dg_action(A, u, cochains));
    MultiMap<F> rhs = MultiMap<F>::zero(u.J, A.dim);
    for (const auto& [v, sign] : differential_terms(u)) {
        if (v.sc) continue;
        bool match = v.blocks.size() == cochains.size();
        for (std::size_t s = 0; match && s < v.blocks.size(); ++s)
            match = v.blocks[s] == cochains[s].arity + 1;
        if (!match) continue;
        MultiMap<F> term = dg_action(A, v, cochains);
        for (std::size_t i = 0; i < rhs.coef.size(); ++i) rhs.coef[i] += F(sign) * term.coef[i];
    }
    return lhs == rhs;
}

namespace {

template <class F>
SparseMatrix<F> normalized_d_matrix(const Algebra<F>& A, int n) {
    const int d = A.dim;
    std::size_t src = d, tgt = d;
    for (int i = 0; i < n; ++i) src *= d - 1;
    for (int i = 0; i < n + 1; ++i) tgt *= d - 1;
    SparseMatrix<F> m(static_cast<int>(tgt), static_cast<int>(src));
    Cochain<F> basis = Cochain<F>::zero(n, d);
    for (std::size_t col = 0; col < src; ++col) {
        basis.coef[col] = field_traits<F>::one();
        Cochain<F> db = differential(A, basis);
        for (std::size_t r = 0; r < db.coef.size(); ++r)
            if (!field_traits<F>::is_zero(db.coef[r])) m.add(static_cast<int>(r), static_cast<int>(col), db.coef[r]);
        basis.coef[col] = field_traits<F>::zero();
    }
    return m;
}

}  // namespace

template <class F>
HHData<F> hh(const Algebra<F>& A, int n_max) {
    A.validate();
    HHData<F> out;
    std::vector<SparseMatrix<F>> mats;
    for (int n = 0; n <= n_max; ++n) mats.push_back(normalized_d_matrix(A, n));
    for (int n = 0; n <= n_max; ++n) {
        const int dimn = mats[n].cols();
        const int rout = mats[n].rank();
        const int rin = n == 0 ? 0 : mats[n - 1].rank();
        out.dims.push_back(dimn - rout - rin);

        auto kernel = mats[n].kernel_basis();
        IncrementalSpan<F> span(dimn);
        if (n > 0) {
            // seed the span with the image of the previous differential
            Cochain<F> basis = Cochain<F>::zero(n - 1, A.dim);
            for (std::size_t col = 0; col < basis.coef.size(); ++col) {
                basis.coef[col] = field_traits<F>::one();
                span.add(differential(A, basis).coef);
                basis.coef[col] = field_traits<F>::zero();
            }
        }
        std::vector<Cochain<F>> reps;
        for (auto& v : kernel) {
            if (span.add(v)) {
                Cochain<F> c = Cochain<F>::zero(n, A.dim);
                c.coef = v;
                reps.push_back(std::move(c));
            }
        }
        out.representatives.push_back(std::move(reps));
    }
    return out;
}

template <class F>
HHResult hh_full_oracle(const Algebra<F>& A, int n_max) {
    A.validate();
    const int d = A.dim;
    HHResult out;
    std::vector<SparseMatrix<F>> mats;
    for (int n = 0; n <= n_max; ++n) {
        std::size_t src = d, tgt = d;
        for (int i = 0; i < n; ++i) src *= d;
        for (int i = 0; i < n + 1; ++i) tgt *= d;
        SparseMatrix<F> m(static_cast<int>(tgt), static_cast<int>(src));
        MultiMap<F> basis = MultiMap<F>::zero(n, d);
        for (std::size_t col = 0; col < src; ++col) {
            basis.coef[col] = field_traits<F>::one();
            MultiMap<F> db = mm_differential(A, basis);
            for (std::size_t r = 0; r < db.coef.size(); ++r)
                if (!field_traits<F>::is_zero(db.coef[r]))
                    m.add(static_cast<int>(r), static_cast<int>(col), db.coef[r]);
            basis.coef[col] = field_traits<F>::zero();
        }
        mats.push_back(std::move(m));
    }
    for (int n = 0; n <= n_max; ++n) {
        const int dimn = mats[n].cols();
        const int rout = mats[n].rank();
        const int rin = n == 0 ? 0 : mats[n - 1].rank();
        out.dims.push_back(dimn - rout - rin);
    }
    return out;
}

namespace {

template <class F>
bool is_coboundary(const Algebra<F>& A, const Cochain<F>& defect) {
    bool zero = std::all_of(defect.coef.begin(), defect.coef.end(),
                            [](const F& x) { return field_traits<F>::is_zero(x); });
    if (zero) return true;
    if (defect.arity == 0) return false;
    auto m = normalized_d_matrix(A, defect.arity - 1);
    return m.solve(defect.coef).has_value();
}

}  // namespace

template <class F>
Hsc2Report verify_hsc2(const Algebra<F>& A) {
    Hsc2Report rep;
    try {
        A.validate();
        rep.algebra_valid = true;
    } catch (const std::invalid_argument& e) {
        rep.failures.push_back(e.what());
        return rep;
    }

    bool commutative = true;
    for (int i = 0; i < A.dim && commutative; ++i)
        for (int j = 0; j < A.dim && commutative; ++j)
            commutative = A.mul(A.basis_vec(i), A.basis_vec(j)) ==
                          A.mul(A.basis_vec(j), A.basis_vec(i));
    rep.commutative_algebra = commutative;

    const int max_rep_degree = 2;
    HHData<F> data = hh(A, max_rep_degree + 2);

    auto reps_of = [&](int n) -> const std::vector<Cochain<F>>& { return data.representatives[n]; };

    // cup commutativity on cohomology
    rep.cup_commutative = true;
    for (int p = 0; p <= max_rep_degree; ++p) {
        for (int q = 0; q <= max_rep_degree; ++q) {
            if (p + q > max_rep_degree + 2) continue;
            for (const auto& u : reps_of(p)) {
                for (const auto& v : reps_of(q)) {
                    Cochain<F> uv = cup(A, u, v), vu = cup(A, v, u);
                    const F s = F((p * q) % 2 == 0 ? 1 : -1);
                    Cochain<F> defect = uv;
                    for (std::size_t i = 0; i < defect.coef.size(); ++i)
                        defect.coef[i] -= s * vu.coef[i];
                    if (!is_coboundary(A, defect)) {
                        rep.cup_commutative = false;
                        rep.failures.push_back("cup commutativity fails at degrees (" +
                                               std::to_string(p) + "," + std::to_string(q) + ")");
                    }
                }
            }
        }
    }

    // graded Jacobi for the bracket
    rep.jacobi = true;
    for (int p = 0; p <= max_rep_degree; ++p)
        for (int q = 0; q <= max_rep_degree; ++q)
            for (int r = 0; r <= max_rep_degree; ++r) {
                if (p + q + r > 4) continue;
                for (const auto& u : reps_of(p))
                    for (const auto& v : reps_of(q))
                        for (const auto& w : reps_of(r)) {
                            auto term = [&](const Cochain<F>& a, const Cochain<F>& b,
                                            const Cochain<F>& c, int e) {
                                Cochain<F> t = bracket(A, bracket(A, a, b), c);
                                if (e % 2 != 0)
                                    for (auto& x : t.coef) x = -x;
                                return t;
                            };
                            Cochain<F> j1 = term(u, v, w, (p - 1) * (r - 1));
                            Cochain<F> j2 = term(v, w, u, (q - 1) * (p - 1));
                            Cochain<F> j3 = term(w, u, v, (r - 1) * (q - 1));
                            Cochain<F> defect = j1;
                            for (std::size_t i = 0; i < defect.coef.size(); ++i)
                                defect.coef[i] += j2.coef[i] + j3.coef[i];
                            if (!is_coboundary(A, defect)) {
                                rep.jacobi = false;
                                rep.failures.push_back("Jacobi fails at degrees (" +
                                                       std::to_string(p) + "," + std::to_string(q) +
                                                       "," + std::to_string(r) + ")");
                            }
                        }
            }

    // Leibniz of the bracket over the cup product
    rep.leibniz = true;
    for (int p = 0; p <= max_rep_degree; ++p)
        for (int q = 0; q <= max_rep_degree; ++q)
            for (int r = 0; r <= max_rep_degree; ++r) {
                if (p + q + r > 4) continue;
                for (const auto& u : reps_of(p))
                    for (const auto& v : reps_of(q))
                        for (const auto& w : reps_of(r)) {
                            Cochain<F> lhs = bracket(A, u, cup(A, v, w));
                            Cochain<F> t1 = cup(A, bracket(A, u, v), w);
                            Cochain<F> t2 = cup(A, v, bracket(A, u, w));
                            const F s = F(((p - 1) * q) % 2 == 0 ? 1 : -1);
                            Cochain<F> defect = lhs;
                            for (std::size_t i = 0; i < defect.coef.size(); ++i)
                                defect.coef[i] -= t1.coef[i] + s * t2.coef[i];
                            if (!is_coboundary(A, defect)) {
                                rep.leibniz = false;
                                rep.failures.push_back("Leibniz fails at degrees (" +
                                                       std::to_string(p) + "," + std::to_string(q) +
                                                       "," + std::to_string(r) + ")");
                            }
                        }
            }

    // central products split multiplicatively, tuples up to length 3
    rep.module_rule = true;
    auto zbasis = A.center();
    std::vector<std::vector<F>> abasis;
    for (int i = 0; i < A.dim; ++i) abasis.push_back(A.basis_vec(i));
    auto check_tuple = [&](const std::vector<int>& zi, const std::vector<int>& ai) {
        std::vector<F> lhs = A.unit(), zprod = A.unit(), aprod = A.unit();
        for (std::size_t l = 0; l < zi.size(); ++l) {
            lhs = A.mul(lhs, A.mul(zbasis[zi[l]], abasis[ai[l]]));
            zprod = A.mul(zprod, zbasis[zi[l]]);
            aprod = A.mul(aprod, abasis[ai[l]]);
        }
        if (lhs != A.mul(zprod, aprod)) {
            rep.module_rule = false;
            rep.failures.push_back("central product rule fails");
        }
    };
    const int nz = static_cast<int>(zbasis.size());
    for (int len = 1; len <= 3; ++len) {
        std::vector<int> zi(len, 0), ai(len, 0);
        for (;;) {
            check_tuple(zi, ai);
            if (next_tuple(ai, A.dim)) continue;
            if (!next_tuple(zi, nz)) break;
        }
    }

    // contraction: a P for arity 0, zero above
    rep.contraction_rule = true;
    for (int k = 0; k < A.dim; ++k) {
        Cochain<F> p0 = Cochain<F>::zero(0, A.dim);
        p0.at(0, k) = field_traits<F>::one();
        for (int a = 0; a < A.dim; ++a) {
            if (contraction(A, p0, A.basis_vec(a)) != A.mul(A.basis_vec(a), A.basis_vec(k)))
                rep.contraction_rule = false;
            Cochain<F> p1 = Cochain<F>::zero(1, A.dim);
            if (A.dim > 1) p1.at(0, k) = field_traits<F>::one();
            auto z = contraction(A, p1, A.basis_vec(a));
            if (!std::all_of(z.begin(), z.end(),
                             [](const F& x) { return field_traits<F>::is_zero(x); }))
                rep.contraction_rule = false;
        }
    }
    if (!rep.contraction_rule) rep.failures.push_back("contraction rule violated");
    return rep;
}

template <class F>
Algebra<F> builtin_algebra(const std::string& name) {
    auto make = [](int dim, const std::vector<std::string>& names) {
        Algebra<F> A;
        A.dim = dim;
        A.names = names;
        A.table.assign(dim, std::vector<std::vector<F>>(
                                dim, std::vector<F>(dim, field_traits<F>::zero())));
        return A;
    };
    auto set = [](Algebra<F>& A, int i, int j, std::vector<std::pair<int, int>> terms) {
        for (auto [k, c] : terms) A.table[i][j][k] = F(c);
    };
    if (name == "dual_numbers") {
        Algebra<F> A = make(2, {"1", "x"});
        set(A, 0, 0, {{0, 1}});
        set(A, 0, 1, {{1, 1}});
        set(A, 1, 0, {{1, 1}});
        set(A, 1, 1, {});  // x^2 = 0
        A.validate();
        return A;
    }
    if (name == "group_z2") {
        Algebra<F> A = make(2, {"1", "g"});
        set(A, 0, 0, {{0, 1}});
        set(A, 0, 1, {{1, 1}});
        set(A, 1, 0, {{1, 1}});
        set(A, 1, 1, {{0, 1}});  // g^2 = 1
        A.validate();
        return A;
    }
    if (name == "upper2") {
        // unit, E11, E12 inside upper-triangular 2x2 (E22 = 1 - E11)
        Algebra<F> A = make(3, {"1", "e11", "e12"});
        set(A, 0, 0, {{0, 1}});
        set(A, 0, 1, {{1, 1}});
        set(A, 0, 2, {{2, 1}});
        set(A, 1, 0, {{1, 1}});
        set(A, 2, 0, {{2, 1}});
        set(A, 1, 1, {{1, 1}});
        set(A, 1, 2, {{2, 1}});
        set(A, 2, 1, {});
        set(A, 2, 2, {});
        A.validate();
        return A;
    }
    if (name == "m2") {
        // unit, E11, E12, E21 (E22 = 1 - E11)
        Algebra<F> A = make(4, {"1", "e11", "e12", "e21"});
        for (int i = 0; i < 4; ++i) {
            set(A, 0, i, {{i, 1}});
            set(A, i, 0, {{i, 1}});
        }
        set(A, 1, 1, {{1, 1}});
        set(A, 1, 2, {{2, 1}});
        set(A, 1, 3, {});
        set(A, 2, 1, {});
        set(A, 2, 2, {});
        set(A, 2, 3, {{1, 1}});          // E12 E21 = E11
        set(A, 3, 1, {{3, 1}});
        set(A, 3, 2, {{0, 1}, {1, -1}});  // E21 E12 = E22 = 1 - E11
        set(A, 3, 3, {});
        A.validate();
        return A;
    }
    throw std::invalid_argument("builtin_algebra: unknown algebra '" + name + "'");
}

#define SCOP_INSTANTIATE(F)                                                                     \
    template struct Algebra<F>;                                                                 \
    template struct MultiMap<F>;                                                                \
    template struct Cochain<F>;                                                                 \
    template MultiMap<F> mm_differential<F>(const Algebra<F>&, const MultiMap<F>&);             \
    template Cochain<F> differential<F>(const Algebra<F>&, const Cochain<F>&);                  \
    template MultiMap<F> cup_mm<F>(const Algebra<F>&, const MultiMap<F>&, const MultiMap<F>&); \
    template MultiMap<F> brace_mm<F>(const Algebra<F>&, const MultiMap<F>&,                    \
                                     const std::vector<MultiMap<F>>&);                         \
    template MultiMap<F> bracket_mm<F>(const Algebra<F>&, const MultiMap<F>&,                  \
                                       const MultiMap<F>&);                                    \
    template std::vector<F> contraction<F>(const Algebra<F>&, const Cochain<F>&,               \
                                           const std::vector<F>&);                             \
    template std::vector<F> eval_tree<F>(const Algebra<F>&, const MarkedPlanarTree&,           \
                                         const std::map<int, MultiMap<F>>&,                    \
                                         const std::map<int, std::vector<F>>&,                 \
                                         const std::vector<std::vector<F>>&);                  \
    template MultiMap<F> tree_operation<F>(const Algebra<F>&, const MarkedPlanarTree&,         \
                                           const std::map<int, MultiMap<F>>&);                 \
    template MultiMap<F> dg_action<F>(const Algebra<F>&, const SeqElem&,                       \
                                      const std::vector<MultiMap<F>>&);                        \
    template bool dg_action_chain_map_holds<F>(const Algebra<F>&, const SeqElem&,              \
                                               const std::vector<MultiMap<F>>&);               \
    template HHData<F> hh<F>(const Algebra<F>&, int);                                          \
    template HHResult hh_full_oracle<F>(const Algebra<F>&, int);                               \
    template Hsc2Report verify_hsc2<F>(const Algebra<F>&);                                     \
    template Algebra<F> builtin_algebra<F>(const std::string&);

SCOP_INSTANTIATE(Rational)
SCOP_INSTANTIATE(Zp)

#undef SCOP_INSTANTIATE

}  // namespace scop
