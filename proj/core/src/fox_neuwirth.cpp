#include "scop/fox_neuwirth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace scop {

bool SigmaData::is_alg(int label) const {
    return std::find(sa_labels.begin(), sa_labels.end(), label) != sa_labels.end();
}

SigmaData example_sigma() {
    SigmaData sd;
    sd.n_labels = 4;
    sd.sc = true;
    sd.sa_labels = {1};
    sd.sigma.values = {0, 3, 2, 1, 2, 3};
    return sd;
}

int fn_dimension(const TwoTree& t) {
    return t.map.source + t.map.target - (t.sc ? 1 : 0);
}

bool fn_contains(const Configuration& c, const LabeledTwoTree& obj, bool sc, double tol) {
    const TwoTree& t = obj.tree;
    const int n = t.map.source;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const int la = obj.labels[a], lb = obj.labels[b];
            if (t.map(a) == t.map(b)) {
                if (std::abs(c.x[la] - c.x[lb]) > tol) return false;
                if (!(c.y[la] < c.y[lb] + tol)) return false;
            } else {
                if (!(c.x[la] < c.x[lb] + tol)) return false;
            }
        }
    }
    if (sc) {
        for (int a = 0; a < n; ++a) {
            const int la = obj.labels[a];
            if (t.map(a) == 0) {
                if (std::abs(c.x[la]) > tol) return false;
            } else if (!(c.x[la] > -tol)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct FiberSpans {
    std::vector<int> first, last;  // positions of each label's fiber in sigma
};

FiberSpans spans_of(const SigmaData& sd) {
    FiberSpans f;
    f.first.assign(sd.n_labels, -1);
    f.last.assign(sd.n_labels, -1);
    for (int i = 0; i < sd.sigma.length(); ++i) {
        const int v = sd.sigma.values[i];
        if (f.first[v] < 0) f.first[v] = i;
        f.last[v] = i;
    }
    return f;
}

bool nested_in(const FiberSpans& f, int s, int t) {
    // some position of s strictly inside the span of t
    return f.first[t] < f.first[s] && f.last[s] < f.last[t];
}

bool entirely_left(const FiberSpans& f, int s, int t) { return f.last[s] < f.first[t]; }

}  // namespace

bool x_sigma_contains(const Configuration& c, const SigmaData& sd, double tol) {
    FiberSpans f = spans_of(sd);
    for (int s = 0; s < sd.n_labels; ++s) {
        for (int t = 0; t < sd.n_labels; ++t) {
            if (s == t) continue;
            if (nested_in(f, s, t) && !(c.x[s] < c.x[t] + tol)) return false;
            if (std::abs(c.x[s] - c.x[t]) <= tol && entirely_left(f, s, t) &&
                !(c.y[s] < c.y[t] + tol))
                return false;
        }
    }
    if (sd.sc) {
        for (int s = 0; s < sd.n_labels; ++s) {
            if (sd.is_alg(s)) {
                if (std::abs(c.x[s]) > tol) return false;
            } else if (!(c.x[s] > tol)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> sigma_order(const SigmaData& sd) {
    FiberSpans f = spans_of(sd);
    std::vector<int> order(sd.n_labels);
    for (int i = 0; i < sd.n_labels; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int s, int t) {
        if (s == t) return false;
        if (nested_in(f, s, t) || entirely_left(f, s, t)) return true;
        return false;
    });
    // the order must be total: verify comparability of adjacent entries
    for (std::size_t i = 1; i < order.size(); ++i) {
        const int s = order[i - 1], t = order[i];
        if (!nested_in(f, s, t) && !entirely_left(f, s, t))
            throw std::logic_error("sigma_order: fibers incomparable (sigma invalid)");
    }
    return order;
}

namespace {

constexpr double kTGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};

double min_tail(const Configuration& c, const std::vector<int>& order, int from) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = from; i < order.size(); ++i) m = std::min(m, c.y[order[i]]);
    return m;
}

struct Checker {
    RetractionReport& rep;
    double tol;
    void check(bool ok, const std::string& what) {
        ++rep.stage_checks;
        if (!ok) {
            rep.ok = false;
            if (rep.failures.size() < 20) rep.failures.push_back(what);
        }
    }
};

bool config_close(const Configuration& a, const Configuration& b, double tol) {
    for (int i = 0; i < a.size(); ++i)
        if (std::abs(a.x[i] - b.x[i]) > tol || std::abs(a.y[i] - b.y[i]) > tol) return false;
    return true;
}

// ---- the X_sigma stages -------------------------------------------------

bool in_Y(const Configuration& c, const SigmaData& sd, const std::vector<int>& order, int k,
          double tol) {
    if (!x_sigma_contains(c, sd, tol)) return false;
    for (int s = 1; s <= k; ++s)
        if (std::abs(c.y[order[s - 1]] - (c.y[order[0]] + s - 1)) > tol) return false;
    if (k >= 1 && k < static_cast<int>(order.size())) {
        if (std::abs(min_tail(c, order, k) - (c.y[order[k - 1]] + 1)) > tol) return false;
    }
    return true;
}

bool in_Z(const Configuration& c, const SigmaData& sd, const std::vector<int>& order, int k,
          double tol) {
    return in_Y(c, sd, order, k, tol) &&
           std::abs(c.y[order[k]] - min_tail(c, order, k)) <= tol;
}

Configuration stage_h(const Configuration& c, const std::vector<int>& order, int k, double t) {
    Configuration out = c;
    const double mu = min_tail(c, order, k);
    out.y[order[k]] = (1 - t) * c.y[order[k]] + t * mu;
    return out;
}

Configuration stage_hz(const Configuration& c, const std::vector<int>& order, int k, double t) {
    Configuration out = c;
    const double mu2 = min_tail(c, order, k + 1);
    const double shift = c.y[order[k]] + 1 - mu2;
    for (std::size_t s = k + 1; s < order.size(); ++s) out.y[order[s]] += t * shift;
    return out;
}

Configuration stage_H(const Configuration& c, const SigmaData& sd, const std::vector<int>& order,
                      double t) {
    Configuration out = c;
    int beta = 0;
    for (int lbl : order) {
        if (sd.sc && sd.is_alg(lbl)) continue;
        ++beta;
        out.x[lbl] = (1 - t) * c.x[lbl] + t * beta;
    }
    return out;
}

bool in_L(const Configuration& c, const SigmaData& sd, const std::vector<int>& order, double tol) {
    if (!in_Y(c, sd, order, static_cast<int>(order.size()), tol)) return false;
    int beta = 0;
    for (int lbl : order) {
        if (sd.sc && sd.is_alg(lbl)) {
            if (std::abs(c.x[lbl]) > tol) return false;
        } else {
            ++beta;
            if (std::abs(c.x[lbl] - beta) > tol) return false;
        }
    }
    return true;
}

// ---- sampling -----------------------------------------------------------

Configuration sample_x_sigma(const SigmaData& sd, std::mt19937_64& rng) {
    FiberSpans f = spans_of(sd);
    std::vector<int> order = sigma_order(sd);
    std::uniform_real_distribution<double> jitter(0.05, 0.45);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Configuration c;
        c.x.assign(sd.n_labels, 0.0);
        c.y.assign(sd.n_labels, 0.0);
        double cursor = 0.0;
        for (int lbl : order) {
            if (sd.sc && sd.is_alg(lbl)) {
                c.x[lbl] = 0.0;
                continue;
            }
            cursor += 1.0 + jitter(rng);
            c.x[lbl] = cursor;
        }
        // occasionally merge the columns of a separated (non-nested) pair
        for (std::size_t i = 1; i < order.size(); ++i) {
            const int s = order[i - 1], t = order[i];
            if (sd.sc && (sd.is_alg(s) || sd.is_alg(t))) continue;
            if (entirely_left(f, s, t) && unit(rng) < 0.3) c.x[t] = c.x[s];
        }
        for (int l = 0; l < sd.n_labels; ++l) c.y[l] = 10.0 * unit(rng);
        // within a shared column, heights follow the sigma order
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::vector<int> col;
            for (int lbl : order)
                if (std::abs(c.x[lbl] - c.x[order[i]]) < 1e-12) col.push_back(lbl);
            std::vector<double> ys;
            for (int lbl : col) ys.push_back(c.y[lbl]);
            std::sort(ys.begin(), ys.end());
            for (std::size_t j = 0; j < col.size(); ++j) c.y[col[j]] = ys[j];
            // separate ties
            for (std::size_t j = 1; j < col.size(); ++j)
                if (c.y[col[j]] <= c.y[col[j - 1]]) c.y[col[j]] = c.y[col[j - 1]] + 0.5;
        }
        if (x_sigma_contains(c, sd, 1e-9)) return c;
    }
    throw std::logic_error("sample_x_sigma: rejection sampling failed");
}

Configuration sample_fn(const LabeledTwoTree& obj, bool sc, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> jitter(0.05, 0.45);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const TwoTree& t = obj.tree;
    Configuration c;
    c.x.assign(static_cast<int>(obj.labels.size()), 0.0);
    c.y.assign(static_cast<int>(obj.labels.size()), 0.0);
    std::vector<double> col(t.map.target);
    double cursor = sc ? 0.0 : -3.0;
    for (int l = 0; l < t.map.target; ++l) {
        if (sc && l == 0) {
            col[l] = 0.0;
            continue;
        }
        cursor += 1.0 + jitter(rng);
        col[l] = cursor;
    }
    for (int a = 0; a < t.map.source; ++a) c.x[obj.labels[a]] = col[t.map(a)];
    // heights increasing along each fiber
    for (int l = 0; l < t.map.target; ++l) {
        std::vector<int> fiber;
        for (int a = 0; a < t.map.source; ++a)
            if (t.map(a) == l) fiber.push_back(a);
        std::vector<double> ys;
        for (std::size_t i = 0; i < fiber.size(); ++i) ys.push_back(10.0 * unit(rng));
        std::sort(ys.begin(), ys.end());
        for (std::size_t i = 1; i < ys.size(); ++i)
            if (ys[i] <= ys[i - 1] + 1e-6) ys[i] = ys[i - 1] + 0.3;
        for (std::size_t i = 0; i < fiber.size(); ++i) c.y[obj.labels[fiber[i]]] = ys[i];
    }
    return c;
}

// ---- the per-tree cell-union stages -------------------------------------

struct PhiContext {
    const Poset& poset;
    bool sc;
    double tol;
    std::vector<std::vector<int>> upsets;

    bool contains(const Configuration& c, int obj) const {
        for (int j : upsets[obj])
            if (fn_contains(c, poset.objects[j], sc, tol)) return true;
        return false;
    }
};

bool in_F(const Configuration& c, const PhiContext& ctx, int obj, int k) {
    if (!ctx.contains(c, obj)) return false;
    const auto& labels = ctx.poset.objects[obj].labels;
    for (int a = 0; a < k; ++a)
        if (std::abs(c.y[labels[a]] - (a + 1)) > ctx.tol) return false;
    return true;
}

Configuration stage_f(const Configuration& c, const LabeledTwoTree& obj, int k, double t) {
    Configuration out = c;
    const double yk1 = c.y[obj.labels[k]];
    for (std::size_t a = k; a < obj.labels.size(); ++a) {
        const int lbl = obj.labels[a];
        out.y[lbl] = (1 - t) * c.y[lbl] + t * (k + 1 + c.y[lbl] - yk1);
    }
    return out;
}

std::vector<int> g_columns(const TwoTree& t) {
    std::vector<int> cols;
    for (int l = t.sc ? 1 : 0; l < t.map.target; ++l) cols.push_back(l);
    return cols;
}

double g_target(const TwoTree& t, int l) { return t.sc ? l : l + 1; }

bool in_G(const Configuration& c, const PhiContext& ctx, int obj, int k) {
    if (!in_F(c, ctx, obj, static_cast<int>(ctx.poset.objects[obj].labels.size()))) return false;
    const TwoTree& t = ctx.poset.objects[obj].tree;
    auto cols = g_columns(t);
    for (int m = 0; m < k; ++m) {
        // any source point on that column
        for (int a = 0; a < t.map.source; ++a)
            if (t.map(a) == cols[m] &&
                std::abs(c.x[ctx.poset.objects[obj].labels[a]] - g_target(t, cols[m])) > ctx.tol)
                return false;
    }
    return true;
}

Configuration stage_g(const Configuration& c, const LabeledTwoTree& obj, int k, double t) {
    const TwoTree& tree = obj.tree;
    auto cols = g_columns(tree);
    // column coordinate of cols[k]
    double zk = 0.0;
    for (int a = 0; a < tree.map.source; ++a)
        if (tree.map(a) == cols[k]) zk = c.x[obj.labels[a]];
    const double target = g_target(tree, cols[k]);
    Configuration out = c;
    for (std::size_t m = k; m < cols.size(); ++m) {
        for (int a = 0; a < tree.map.source; ++a) {
            if (tree.map(a) != cols[m]) continue;
            const int lbl = obj.labels[a];
            out.x[lbl] = (1 - t) * c.x[lbl] + t * (target + c.x[lbl] - zk);
        }
    }
    return out;
}

}  // namespace

RetractionReport retraction_suite(const SigmaData& sd, int n_samples, std::uint64_t seed,
                                  double tol) {
    RetractionReport rep;
    Checker ck{rep, tol};
    std::mt19937_64 rng(seed);
    const std::vector<int> order = sigma_order(sd);
    const int n = sd.n_labels;
    const int N = sd.filtration_level();

    Poset poset = build_J_sigma(n, sd.sc, sd.sa_labels, sd.sigma, N);
    PhiContext ctx{poset, sd.sc, tol, {}};
    ctx.upsets.resize(poset.size());
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j)
            if (poset.leq[i][j]) ctx.upsets[i].push_back(j);

    for (int sample = 0; sample < n_samples; ++sample) {
        Configuration c = sample_x_sigma(sd, rng);
        ++rep.configurations;
        ck.check(x_sigma_contains(c, sd, tol), "sample not in the configuration union");

        for (int k = 0; k < n; ++k) {
            ck.check(in_Y(c, sd, order, k, tol), "height stage: input left Y_" + std::to_string(k));
            for (double t : kTGrid)
                ck.check(in_Y(stage_h(c, order, k, t), sd, order, k, tol),
                         "height stage leaves Y_" + std::to_string(k));
            Configuration z = stage_h(c, order, k, 1.0);
            ck.check(in_Z(z, sd, order, k, tol), "height stage endpoint not in Z_" + std::to_string(k));
            for (double t : kTGrid)
                ck.check(config_close(stage_h(z, order, k, t), z, tol),
                         "height stage moves a fixed point");

            for (double t : kTGrid)
                ck.check(in_Z(stage_hz(z, order, k, t), sd, order, k, tol),
                         "shift stage leaves Z_" + std::to_string(k));
            Configuration y1 = stage_hz(z, order, k, 1.0);
            ck.check(in_Y(y1, sd, order, k + 1, tol),
                     "shift stage endpoint not in Y_" + std::to_string(k + 1));
            for (double t : kTGrid)
                ck.check(config_close(stage_hz(y1, order, k, t), y1, tol),
                         "shift stage moves a fixed point");
            c = y1;
        }

        for (double t : kTGrid)
            ck.check(in_Y(stage_H(c, sd, order, t), sd, order, n, tol),
                     "column straightening leaves Y_top");
        Configuration l1 = stage_H(c, sd, order, 1.0);
        ck.check(in_L(l1, sd, order, tol), "column straightening endpoint not on the line");
        for (double t : kTGrid)
            ck.check(config_close(stage_H(l1, sd, order, t), l1, tol),
                     "column straightening moves a line point");
    }

    // per-tree stages on the cell unions
    const int per_obj = std::max(1, n_samples / std::max(1, poset.size()));
    for (int o = 0; o < poset.size(); ++o) {
        const LabeledTwoTree& obj = poset.objects[o];
        std::uniform_int_distribution<int> pick(0, static_cast<int>(ctx.upsets[o].size()) - 1);
        for (int s = 0; s < per_obj; ++s) {
            Configuration c = sample_fn(poset.objects[ctx.upsets[o][pick(rng)]], sd.sc, rng);
            ck.check(ctx.contains(c, o), "cell sample not in the union");
            for (int k = 0; k < n; ++k) {
                for (double t : kTGrid)
                    ck.check(in_F(stage_f(c, obj, k, t), ctx, o, k),
                             "cell height stage leaves F_" + std::to_string(k));
                Configuration f1 = stage_f(c, obj, k, 1.0);
                ck.check(in_F(f1, ctx, o, k + 1),
                         "cell height stage endpoint not in F_" + std::to_string(k + 1));
                for (double t : kTGrid)
                    ck.check(config_close(stage_f(f1, obj, k, t), f1, tol),
                             "cell height stage moves a fixed point");
                c = f1;
            }
            auto cols = g_columns(obj.tree);
            for (int k = 0; k < static_cast<int>(cols.size()); ++k) {
                for (double t : kTGrid)
                    ck.check(in_G(stage_g(c, obj, k, t), ctx, o, k),
                             "column stage leaves G_" + std::to_string(k));
                Configuration g1 = stage_g(c, obj, k, 1.0);
                ck.check(in_G(g1, ctx, o, k + 1),
                         "column stage endpoint not in G_" + std::to_string(k + 1));
                for (double t : kTGrid)
                    ck.check(config_close(stage_g(g1, obj, k, t), g1, tol),
                             "column stage moves a fixed point");
                c = g1;
            }
        }
    }
    return rep;
}

}  // namespace scop
