#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scop/ordinal.hpp"

namespace scop {

/// An order-preserving map of ordinals tau : S -> T.  With sc set, T is an
/// SC-ordinal: its minimum (address 0) is marked and the fiber over it is
/// the algebra-colored part S_a of S.
struct TwoTree {
    MonotoneMap map;  // source ordinal S -> target ordinal T
    bool sc = false;

    TwoTree() = default;
    TwoTree(MonotoneMap m, bool sc_flag = false);

    int source_size() const { return map.source; }
    int target_size() const { return map.target; }

    /// Point 2-tree u_c (and its SC twin u_a).
    static TwoTree point(bool sc_flag = false);

    /// Addresses of S_a = fiber over the marked minimum (empty when not SC).
    std::vector<int> sa() const;

    bool operator==(const TwoTree&) const = default;
    std::string str() const;
};

/// tau surjective; in the SC case surjective onto the non-minimal part of T.
bool is_pruned(const TwoTree& t);

/// Drop unhit target elements (never the marked minimum), giving the pruned
/// 2-tree carrying the same composition data.
TwoTree normalize_pruned(const TwoTree& t);

/// Structure-preserving map of (SC) 2-trees.  p_s is an arbitrary map of
/// source sets that commutes with the taus and is increasing on every fiber;
/// p_t is monotone (and fixes the marked minimum in the SC case).
struct TwoTreeMap {
    TwoTree dom, cod;
    std::vector<int> p_s;  // source address in dom -> source address in cod
    MonotoneMap p_t;

    TwoTreeMap() = default;
    TwoTreeMap(TwoTree d, TwoTree c, std::vector<int> ps, MonotoneMap pt);

    void validate() const;
    TwoTreeMap then(const TwoTreeMap& g) const;
};

/// The 2-tree P^-1(s1): restriction of dom's tau to the p_s-preimage of s1,
/// mapping into the p_t-preimage of cod's tau(s1), with inherited orders.
/// SC iff the codomain is SC and tau(s1) is its marked minimum.
TwoTree fiber(const TwoTreeMap& P, int s1);

/// Addresses (in dom source order) of the elements making up fiber(P, s1).
std::vector<int> fiber_source_addresses(const TwoTreeMap& P, int s1);

/// An object of the poset J(S): a total order on the abstract label set
/// (labels[k] marks source address k) together with a pruned 2-tree on it.
struct LabeledTwoTree {
    std::vector<int> labels;
    TwoTree tree;

    bool operator==(const LabeledTwoTree&) const = default;
};

/// All objects of J(S) for a label set {0..S_size-1}: every total order on
/// the labels with every pruned 2-tree structure, target taken up to
/// isomorphism of ordinals.  In the SC case the fiber over the marked
/// minimum must be exactly sa_labels; when fix_sa_order is set their
/// relative order is pinned to the order given in sa_labels, otherwise all
/// orders of sa_labels are enumerated.
std::vector<LabeledTwoTree> enumerate_pruned(int S_size, bool sc = false,
                                             const std::vector<int>& sa_labels = {},
                                             bool fix_sa_order = false, int bound = 6);

/// Whether a J(S)-morphism t1 -> t2 exists (a TwoTreeMap whose source map is
/// the identity on labels).
bool poset_morphism_exists(const LabeledTwoTree& t1, const LabeledTwoTree& t2);

/// The morphism itself, when one exists.
std::optional<TwoTreeMap> find_poset_morphism(const LabeledTwoTree& t1,
                                              const LabeledTwoTree& t2);

}  // namespace scop
