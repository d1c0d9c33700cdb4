#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace scop {

/// A finite totally ordered set, addressed 0..size-1 in increasing order.
/// External labels, when needed, are carried beside the ordinal, so
/// isomorphism of ordinals is equality of sizes.
struct Ordinal {
    int size = 0;

    bool operator==(const Ordinal&) const = default;
};

/// Order-preserving map between finite ordinals.
struct MonotoneMap {
    int source = 0;
    int target = 0;
    std::vector<int> values;  // one target address per source element

    MonotoneMap() = default;
    MonotoneMap(int src, int tgt, std::vector<int> vals)
        : source(src), target(tgt), values(std::move(vals)) {
        validate();
    }

    static MonotoneMap identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return MonotoneMap(n, n, std::move(v));
    }

    int operator()(int i) const { return values.at(i); }

    bool is_surjective() const {
        std::vector<bool> hit(target, false);
        for (int v : values) hit[v] = true;
        for (bool h : hit)
            if (!h) return false;
        return true;
    }

    bool is_identity() const {
        if (source != target) return false;
        for (int i = 0; i < source; ++i)
            if (values[i] != i) return false;
        return true;
    }

    MonotoneMap then(const MonotoneMap& g) const {
        if (target != g.source)
            throw std::invalid_argument("MonotoneMap::then: middle ordinals disagree");
        std::vector<int> v(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) v[i] = g.values[values[i]];
        return MonotoneMap(source, g.target, std::move(v));
    }

    /// Coface: the increasing injection [n-1] -> [n] skipping value i.
    static MonotoneMap coface(int n, int i) {
        std::vector<int> v(n - 1);
        for (int j = 0; j < n - 1; ++j) v[j] = j < i ? j : j + 1;
        return MonotoneMap(n - 1, n, std::move(v));
    }

    /// Codegeneracy: the surjection [n] -> [n-1] hitting value i twice.
    static MonotoneMap codegeneracy(int n, int i) {
        std::vector<int> v(n);
        for (int j = 0; j < n; ++j) v[j] = j <= i ? j : j - 1;
        return MonotoneMap(n, n - 1, std::move(v));
    }

    bool operator==(const MonotoneMap&) const = default;

    void validate() const {
        if (static_cast<int>(values.size()) != source)
            throw std::invalid_argument("MonotoneMap: wrong number of values");
        int prev = -1;
        for (int v : values) {
            if (v < 0 || v >= target)
                throw std::invalid_argument("MonotoneMap: value out of target range");
            if (v < prev) throw std::invalid_argument("MonotoneMap: values not nondecreasing");
            prev = v;
        }
    }
};

/// All monotone maps from an n-ordinal to an m-ordinal.
std::vector<MonotoneMap> all_monotone_maps(int n, int m);

/// All monotone surjections from an n-ordinal onto an m-ordinal.
std::vector<MonotoneMap> all_monotone_surjections(int n, int m);

}  // namespace scop
