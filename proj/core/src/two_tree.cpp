#include "scop/two_tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace scop {

std::vector<MonotoneMap> all_monotone_maps(int n, int m) {
    std::vector<MonotoneMap> out;
    if (n == 0) {
        out.emplace_back(0, m, std::vector<int>{});
        return out;
    }
    if (m == 0) return out;
    std::vector<int> v(n, 0);
    for (;;) {
        out.emplace_back(n, m, v);
        int i = n - 1;
        while (i >= 0 && v[i] == m - 1) --i;
        if (i < 0) break;
        int nv = v[i] + 1;
        for (int j = i; j < n; ++j) v[j] = nv;
    }
    return out;
}

std::vector<MonotoneMap> all_monotone_surjections(int n, int m) {
    std::vector<MonotoneMap> out;
    for (auto& f : all_monotone_maps(n, m))
        if (f.is_surjective()) out.push_back(std::move(f));
    return out;
}

TwoTree::TwoTree(MonotoneMap m, bool sc_flag) : map(std::move(m)), sc(sc_flag) {
    map.validate();
    if (sc && map.target == 0)
        throw std::invalid_argument("TwoTree: SC target ordinal must be non-empty");
}

TwoTree TwoTree::point(bool sc_flag) { return TwoTree(MonotoneMap::identity(1), sc_flag); }

std::vector<int> TwoTree::sa() const {
    std::vector<int> out;
    if (!sc) return out;
    for (int i = 0; i < map.source; ++i)
        if (map(i) == 0) out.push_back(i);
    return out;
}

std::string TwoTree::str() const {
    std::ostringstream os;
    os << (sc ? "sc[" : "[") << map.source << "->" << map.target << ":";
    for (int i = 0; i < map.source; ++i) os << (i ? "," : "") << map(i);
    os << "]";
    return os.str();
}

bool is_pruned(const TwoTree& t) {
    std::vector<bool> hit(t.map.target, false);
    for (int v : t.map.values) hit[v] = true;
    for (int j = 0; j < t.map.target; ++j) {
        if (t.sc && j == 0) continue;  // the marked minimum need not be hit
        if (!hit[j]) return false;
    }
    return true;
}

TwoTree normalize_pruned(const TwoTree& t) {
    std::vector<bool> keep(t.map.target, false);
    for (int v : t.map.values) keep[v] = true;
    if (t.sc) keep[0] = true;
    std::vector<int> newaddr(t.map.target, -1);
    int k = 0;
    for (int j = 0; j < t.map.target; ++j)
        if (keep[j]) newaddr[j] = k++;
    std::vector<int> vals(t.map.values.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = newaddr[t.map.values[i]];
    return TwoTree(MonotoneMap(t.map.source, k, std::move(vals)), t.sc);
}

TwoTreeMap::TwoTreeMap(TwoTree d, TwoTree c, std::vector<int> ps, MonotoneMap pt)
    : dom(std::move(d)), cod(std::move(c)), p_s(std::move(ps)), p_t(std::move(pt)) {
    validate();
}

void TwoTreeMap::validate() const {
    if (dom.sc != cod.sc)
        throw std::invalid_argument("TwoTreeMap: SC flags of domain and codomain disagree");
    if (static_cast<int>(p_s.size()) != dom.map.source)
        throw std::invalid_argument("TwoTreeMap: p_s has wrong size");
    if (p_t.source != dom.map.target || p_t.target != cod.map.target)
        throw std::invalid_argument("TwoTreeMap: p_t has wrong profile");
    for (int s : p_s)
        if (s < 0 || s >= cod.map.source)
            throw std::invalid_argument("TwoTreeMap: p_s value out of range");
    // square commutes: tau_cod(p_s(s)) = p_t(tau_dom(s))
    for (int s = 0; s < dom.map.source; ++s)
        if (cod.map(p_s[s]) != p_t(dom.map(s)))
            throw std::invalid_argument("TwoTreeMap: square does not commute");
    // p_s increasing on every tau-fiber
    for (int t = 0; t < dom.map.target; ++t) {
        int prev = -1;
        for (int s = 0; s < dom.map.source; ++s) {
            if (dom.map(s) != t) continue;
            if (prev >= 0 && p_s[s] <= prev)
                throw std::invalid_argument("TwoTreeMap: p_s not increasing on a fiber");
            prev = p_s[s];
        }
    }
    if (dom.sc && p_t(0) != 0)
        throw std::invalid_argument("TwoTreeMap: p_t must preserve the marked minimum");
}

TwoTreeMap TwoTreeMap::then(const TwoTreeMap& g) const {
    if (!(cod == g.dom)) throw std::invalid_argument("TwoTreeMap::then: middle trees disagree");
    std::vector<int> ps(p_s.size());
    for (std::size_t i = 0; i < p_s.size(); ++i) ps[i] = g.p_s[p_s[i]];
    return TwoTreeMap(dom, g.cod, std::move(ps), p_t.then(g.p_t));
}

std::vector<int> fiber_source_addresses(const TwoTreeMap& P, int s1) {
    if (s1 < 0 || s1 >= P.cod.map.source)
        throw std::out_of_range("fiber: source address out of range");
    std::vector<int> out;
    for (int s = 0; s < P.dom.map.source; ++s)
        if (P.p_s[s] == s1) out.push_back(s);
    return out;
}

TwoTree fiber(const TwoTreeMap& P, int s1) {
    const int t1 = P.cod.map(s1);
    std::vector<int> src = fiber_source_addresses(P, s1);
    std::vector<int> tgt;
    for (int t = 0; t < P.dom.map.target; ++t)
        if (P.p_t(t) == t1) tgt.push_back(t);
    std::vector<int> vals(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = std::lower_bound(tgt.begin(), tgt.end(), P.dom.map(src[i]));
        vals[i] = static_cast<int>(it - tgt.begin());
    }
    const bool sc_fiber = P.cod.sc && t1 == 0;
    return TwoTree(MonotoneMap(static_cast<int>(src.size()), static_cast<int>(tgt.size()),
                               std::move(vals)),
                   sc_fiber);
}

namespace {

void permutations_of(std::vector<int> items, std::vector<std::vector<int>>& out) {
    std::sort(items.begin(), items.end());
    do {
        out.push_back(items);
    } while (std::next_permutation(items.begin(), items.end()));
}

}  // namespace

std::vector<LabeledTwoTree> enumerate_pruned(int S_size, bool sc,
                                             const std::vector<int>& sa_labels,
                                             bool fix_sa_order, int bound) {
    if (S_size > bound)
        throw std::invalid_argument("enumerate_pruned: |S| exceeds configured bound");
    std::vector<LabeledTwoTree> out;

    if (!sc) {
        if (S_size == 0) {
            out.push_back({{}, TwoTree(MonotoneMap(0, 0, {}), false)});
            return out;
        }
        std::vector<int> all(S_size);
        std::iota(all.begin(), all.end(), 0);
        std::vector<std::vector<int>> orders;
        permutations_of(all, orders);
        for (const auto& ord : orders)
            for (int k = 1; k <= S_size; ++k)
                for (auto& f : all_monotone_surjections(S_size, k))
                    out.push_back({ord, TwoTree(f, false)});
        return out;
    }

    // SC: S_a occupies the initial segment (the fiber over the marked
    // minimum); the rest of S maps onto the non-minimal part of T.
    std::vector<int> sc_labels;
    for (int i = 0; i < S_size; ++i)
        if (std::find(sa_labels.begin(), sa_labels.end(), i) == sa_labels.end())
            sc_labels.push_back(i);
    const int na = static_cast<int>(sa_labels.size());
    const int nc = static_cast<int>(sc_labels.size());

    std::vector<std::vector<int>> sa_orders;
    if (fix_sa_order)
        sa_orders.push_back(sa_labels);
    else
        permutations_of(sa_labels, sa_orders);
    std::vector<std::vector<int>> sc_orders;
    permutations_of(sc_labels, sc_orders);

    for (const auto& ao : sa_orders) {
        for (const auto& co : sc_orders) {
            std::vector<int> labels = ao;
            labels.insert(labels.end(), co.begin(), co.end());
            if (nc == 0) {
                std::vector<int> vals(na, 0);
                out.push_back({labels, TwoTree(MonotoneMap(na, 1, vals), true)});
                continue;
            }
            for (int k = 1; k <= nc; ++k) {
                for (auto& f : all_monotone_surjections(nc, k)) {
                    std::vector<int> vals(S_size);
                    for (int i = 0; i < na; ++i) vals[i] = 0;
                    for (int i = 0; i < nc; ++i) vals[na + i] = f(i) + 1;
                    out.push_back({labels, TwoTree(MonotoneMap(S_size, k + 1, vals), true)});
                }
            }
        }
    }
    return out;
}

std::optional<TwoTreeMap> find_poset_morphism(const LabeledTwoTree& t1,
                                              const LabeledTwoTree& t2) {
    if (t1.labels.size() != t2.labels.size()) return std::nullopt;
    if (t1.tree.sc != t2.tree.sc) return std::nullopt;
    if (!is_pruned(t1.tree) || !is_pruned(t2.tree))
        throw std::invalid_argument("find_poset_morphism: objects must be pruned");

    const int n = t1.tree.map.source;
    // p_s: identity on labels, expressed on addresses
    std::vector<int> pos2(t2.labels.size());
    for (std::size_t i = 0; i < t2.labels.size(); ++i) pos2[t2.labels[i]] = static_cast<int>(i);
    std::vector<int> ps(n);
    for (int i = 0; i < n; ++i) ps[i] = pos2[t1.labels[i]];

    // pruned domain: p_t is forced by commutativity on the hit part of T1
    std::vector<int> pt(t1.tree.map.target, -1);
    if (t1.tree.sc) pt[0] = 0;
    for (int s = 0; s < n; ++s) {
        const int t = t1.tree.map(s);
        const int want = t2.tree.map(ps[s]);
        if (pt[t] >= 0 && pt[t] != want) return std::nullopt;
        pt[t] = want;
    }
    int prev = -1;
    for (int t = 0; t < t1.tree.map.target; ++t) {
        if (pt[t] < 0) return std::nullopt;  // cannot happen for pruned t1
        if (pt[t] < prev) return std::nullopt;
        prev = pt[t];
    }
    try {
        return TwoTreeMap(t1.tree, t2.tree, std::move(ps),
                          MonotoneMap(t1.tree.map.target, t2.tree.map.target, std::move(pt)));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

bool poset_morphism_exists(const LabeledTwoTree& t1, const LabeledTwoTree& t2) {
    return find_poset_morphism(t1, t2).has_value();
}

}  // namespace scop
