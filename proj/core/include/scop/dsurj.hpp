#pragma once

#include <map>
#include <string>
#include <vector>

#include "scop/two_tree.hpp"
#include "scop/window.hpp"

namespace scop {

/// A surjection {1,..,N+|S|} -> S recorded as 0-based source addresses.
struct DSurjection {
    std::vector<int> values;

    int length() const { return static_cast<int>(values.size()); }
    bool operator==(const DSurjection&) const = default;
    auto operator<=>(const DSurjection&) const = default;
    std::string str() const;
};

/// No two adjacent positions map to the same element.
bool no_adjacent_repeat(const DSurjection& s);

/// No pair of fibers interleaves (i1 < j1 < i2 < j2 alternating).
bool no_interleaving(const DSurjection& s);

/// Tree conditions: if a fiber is nested strictly inside another then the
/// inner one sits lower in T, and fibers over one target element appear in
/// source order.  Together with the two set conditions this is membership in
/// D(tau, N).
bool in_D_tau(const DSurjection& s, const TwoTree& tau);

/// Set-level membership in D(S, N); sa_addresses lists the algebra-colored
/// elements (their fibers must be singletons).
bool in_D_set(const DSurjection& s, int S_size, const std::vector<int>& sa_addresses);

std::vector<DSurjection> enumerate_D_tau(const TwoTree& tau, int N, int bound = 12);
std::vector<DSurjection> enumerate_D_set(int S_size, int N, const std::vector<int>& sa_addresses,
                                         int bound = 12);

/// The class pattern of a window basis element: one source address per
/// elementary class (algebra label l -> address l, block b -> n_alg + b).
DSurjection sigma_of(const SeqElem& u);

/// Per-sigma report of a graded piece F_N/F_{N-1}.
struct GradedPartReport {
    DSurjection sigma;
    std::map<int, int> dims;           // per-degree dimensions of the part
    std::map<int, int> expected_dims;  // independent count of the shifted hom-window
    bool dims_match = false;
};

struct GradedReport {
    int N = 0;
    std::vector<GradedPartReport> parts;
    std::map<int, int> graded_homology;  // exact homology of the graded piece
    int d_count = 0;                     // |D(tau, N)| from the independent enumerator
    bool sigma_sets_match = false;       // {sigma of parts} == D(tau, N)
    bool homology_matches = false;       // dim H^{-N} == |D|, other degrees 0
    bool all_parts_match = false;
};

/// Decompose the graded piece of a Seq(tau) window by sigma and verify the
/// direct-sum structure dimension-wise against an independent combinatorial
/// count, and its homology against the independent surjection enumerator.
GradedReport graded_decompose(const StructuralWindow& w, int N);

}  // namespace scop
