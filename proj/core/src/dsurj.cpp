#include "scop/dsurj.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "scop/field.hpp"

namespace scop {

std::string DSurjection::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ")";
    return os.str();
}

bool no_adjacent_repeat(const DSurjection& s) {
    for (std::size_t i = 1; i < s.values.size(); ++i)
        if (s.values[i] == s.values[i - 1]) return false;
    return true;
}

bool no_interleaving(const DSurjection& s) {
    std::set<int> labels(s.values.begin(), s.values.end());
    for (int a : labels) {
        for (int b : labels) {
            if (a == b) continue;
            int state = 0;
            for (int v : s.values) {
                if ((state % 2 == 0 && v == a) || (state % 2 == 1 && v == b)) {
                    if (++state == 4) return false;
                }
            }
        }
    }
    return true;
}

namespace {

bool surjective_onto(const DSurjection& s, int n) {
    std::vector<bool> hit(n, false);
    for (int v : s.values) {
        if (v < 0 || v >= n) return false;
        hit[v] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

bool in_D_tau(const DSurjection& s, const TwoTree& tau) {
    const int n = tau.map.source;
    if (!surjective_onto(s, n)) return false;
    if (!no_adjacent_repeat(s)) return false;

    std::vector<int> first(n, -1), last(n, -1);
    for (int i = 0; i < s.length(); ++i) {
        if (first[s.values[i]] < 0) first[s.values[i]] = i;
        last[s.values[i]] = i;
    }
    // nesting forces strict drop in T
    for (int a = 0; a < n; ++a)
        for (int p = first[a] + 1; p < last[a]; ++p) {
            const int b = s.values[p];
            if (b != a && !(tau.map(b) < tau.map(a))) return false;
        }
    // fibers over one target element appear in source order
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (tau.map(a) == tau.map(b) && !(last[a] < first[b])) return false;
    return true;
}

bool in_D_set(const DSurjection& s, int S_size, const std::vector<int>& sa_addresses) {
    if (!surjective_onto(s, S_size)) return false;
    if (!no_adjacent_repeat(s)) return false;
    if (!no_interleaving(s)) return false;
    for (int a : sa_addresses) {
        int count = 0;
        for (int v : s.values)
            if (v == a) ++count;
        if (count != 1) return false;
    }
    return true;
}

namespace {

template <class Pred>
std::vector<DSurjection> enumerate_all(int S_size, int N, int bound, Pred&& keep) {
    const int len = N + S_size;
    if (len > bound) throw std::invalid_argument("enumerate_D: length exceeds bound");
    std::vector<DSurjection> out;
    if (len == 0) {
        DSurjection empty;
        if (keep(empty)) out.push_back(empty);
        return out;
    }
    if (S_size == 0) return out;
    DSurjection cur;
    cur.values.assign(len, 0);
    for (;;) {
        if (keep(cur)) out.push_back(cur);
        int i = len - 1;
        while (i >= 0 && cur.values[i] == S_size - 1) --i;
        if (i < 0) break;
        ++cur.values[i];
        for (int j = i + 1; j < len; ++j) cur.values[j] = 0;
    }
    return out;
}

}  // namespace

std::vector<DSurjection> enumerate_D_tau(const TwoTree& tau, int N, int bound) {
    return enumerate_all(tau.map.source, N, bound,
                         [&](const DSurjection& s) { return in_D_tau(s, tau); });
}

std::vector<DSurjection> enumerate_D_set(int S_size, int N, const std::vector<int>& sa_addresses,
                                         int bound) {
    return enumerate_all(S_size, N, bound,
                         [&](const DSurjection& s) { return in_D_set(s, S_size, sa_addresses); });
}

DSurjection sigma_of(const SeqElem& u) {
    DSurjection s;
    for (const auto& cls : elementary_classes(u)) {
        const SeqToken& t = u.arrangement[cls.front()];
        s.values.push_back(t.is_alg() ? t.block : u.n_alg + t.block);
    }
    return s;
}

namespace {

// number of monotone maps from the concatenation of the classes (sizes c_i)
// into an m-ordinal, strictly increasing within each class
long strict_per_class_count(const std::vector<int>& sizes, int m) {
    // dp[last] = ways with the previous class ending at value `last`
    std::vector<long> dp(m, 0);
    bool started = false;
    for (int c : sizes) {
        std::vector<long> ndp(m, 0);
        if (!started) {
            // first class: strictly increasing c-tuples ending at t
            for (int t = c - 1; t < m; ++t) {
                // choose c-1 values below t
                long ways = 1;
                for (int i = 0; i < c - 1; ++i) ways = ways * (t - i) / (i + 1);
                ndp[t] = ways;
            }
            started = true;
        } else {
            for (int last = 0; last < m; ++last) {
                if (dp[last] == 0) continue;
                for (int t = last + c - 1; t < m; ++t) {
                    // strictly increasing c-tuple in [last, t] ending at t
                    long ways = 1;
                    for (int i = 0; i < c - 1; ++i) ways = ways * (t - last - i) / (i + 1);
                    ndp[t] += dp[last] * ways;
                }
            }
        }
        dp = std::move(ndp);
    }
    long total = 0;
    for (long v : dp) total += v;
    if (sizes.empty()) total = 1;
    return total;
}

}  // namespace

GradedReport graded_decompose(const StructuralWindow& w, int N) {
    if (w.spec.family != WindowSpec::Family::seq || !w.spec.tau)
        throw std::invalid_argument("graded_decompose: window must be a Seq(tau) window");
    const TwoTree& tau = *w.spec.tau;
    const int S = window_source_size(w);

    GradedReport rep;
    rep.N = N;

    StructuralWindow gr = graded_piece(w, N);
    rep.graded_homology = homology_dims<Rational>(gr);

    auto dvec = enumerate_D_tau(tau, N);
    rep.d_count = static_cast<int>(dvec.size());

    // group the graded basis by sigma
    std::map<DSurjection, std::map<int, int>> dims;
    for (const auto& [deg, elems] : gr.basis)
        for (const auto& u : elems) ++dims[sigma_of(u)][deg];

    std::set<DSurjection> found, expected(dvec.begin(), dvec.end());
    for (const auto& [sigma, dd] : dims) found.insert(sigma);
    rep.sigma_sets_match = found == expected;

    const auto& c = w.spec.cutoffs;
    for (const auto& sigma : dvec) {
        GradedPartReport part;
        part.sigma = sigma;
        auto it = dims.find(sigma);
        if (it != dims.end()) part.dims = it->second;

        // independent count of the sigma-part: choose class sizes per
        // position (algebra classes are singletons), respecting the window
        // cutoffs blockwise, and count admissible q maps
        const int K = N + S;
        std::vector<int> class_sizes(K, 1);
        auto account = [&](auto&& self, int pos) -> void {
            if (pos == K) {
                std::map<int, int> per_block;
                int total = 0;
                for (int i = 0; i < K; ++i) {
                    if (sigma.values[i] < w.spec.n_alg) continue;  // algebra: size 1, no tokens
                    per_block[sigma.values[i]] += class_sizes[i];
                    total += class_sizes[i];
                }
                for (const auto& [b, sz] : per_block)
                    if (sz > c.max_block_each) return;
                if (total > c.max_block_total) return;
                std::vector<int> csizes;
                for (int i = 0; i < K; ++i)
                    if (sigma.values[i] >= w.spec.n_alg) csizes.push_back(class_sizes[i]);
                if (w.spec.sc) {
                    // no cosimplicial direction: nondegenerate means all classes singleton
                    if (std::all_of(csizes.begin(), csizes.end(), [](int x) { return x == 1; }))
                        ++part.expected_dims[-N];
                    return;
                }
                for (int m = 1; m <= c.max_J; ++m) {
                    long cnt = strict_per_class_count(csizes, m);
                    if (cnt == 0) continue;
                    int deg = (m - 1);
                    for (int cs : csizes) deg -= cs - 1;
                    deg -= N;  // window degree = hom-window degree - N
                    part.expected_dims[deg] += static_cast<int>(cnt);
                }
                return;
            }
            if (sigma.values[pos] < w.spec.n_alg) {
                class_sizes[pos] = 1;
                self(self, pos + 1);
                return;
            }
            for (int sz = 1; sz <= c.max_block_each; ++sz) {
                class_sizes[pos] = sz;
                self(self, pos + 1);
            }
            class_sizes[pos] = 1;
        };
        account(account, 0);

        // drop zero entries for comparability
        std::map<int, int> trimmed;
        for (const auto& [k, v] : part.dims)
            if (v) trimmed[k] = v;
        part.dims = trimmed;
        std::map<int, int> etrimmed;
        for (const auto& [k, v] : part.expected_dims)
            if (v) etrimmed[k] = v;
        part.expected_dims = etrimmed;
        part.dims_match = part.dims == part.expected_dims;
        rep.parts.push_back(std::move(part));
    }

    rep.all_parts_match = rep.sigma_sets_match &&
                          std::all_of(rep.parts.begin(), rep.parts.end(),
                                      [](const GradedPartReport& p) { return p.dims_match; });
    bool hom_ok = true;
    for (const auto& [deg, h] : rep.graded_homology) {
        const int want = deg == -N ? rep.d_count : 0;
        if (h != want) hom_ok = false;
    }
    if (rep.graded_homology.find(-N) == rep.graded_homology.end() && rep.d_count != 0)
        hom_ok = false;
    rep.homology_matches = hom_ok;
    return rep;
}

}  // namespace scop
