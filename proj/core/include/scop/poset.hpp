#pragma once

#include <map>
#include <vector>

#include "scop/dsurj.hpp"
#include "scop/two_tree.hpp"

namespace scop {

/// A finite poset of labeled pruned (SC) 2-trees; leq[i][j] records a
/// J(S)-morphism object i -> object j.
struct Poset {
    std::vector<LabeledTwoTree> objects;
    std::vector<std::vector<bool>> leq;

    int size() const { return static_cast<int>(objects.size()); }
    void assert_poset() const;  // reflexive, antisymmetric, transitive
};

/// The poset J(S) on labels {0..S_size-1}; SC when sa_labels is meaningful
/// (pass sc=true with possibly empty sa_labels).
Poset build_J(int S_size, bool sc = false, const std::vector<int>& sa_labels = {},
              int bound = 6);

/// The full sub-poset J(sigma) of objects whose 2-tree admits sigma.
/// sigma.values are labels; they are translated to each object's source
/// addresses through its labeling.
Poset build_J_sigma(int S_size, bool sc, const std::vector<int>& sa_labels,
                    const DSurjection& sigma, int N, int bound = 6);

/// Translate a label-valued surjection to source addresses of one object.
DSurjection sigma_on_object(const DSurjection& sigma_labels, const LabeledTwoTree& obj);

/// Reduced homology dimensions of the order complex (chains of the strict
/// order), computed exactly.  Degree -1 carries the reduced homology of the
/// empty complex.
std::map<int, int> order_complex_reduced_homology(const Poset& p);

/// Set-valued contravariant functor data on a poset: sets are 0..sizes[i]-1;
/// for every related pair i <= j (i != j) with a morphism i -> j, maps[{i,j}]
/// sends elements of F(j) into F(i).
struct SetFunctor {
    std::vector<int> sizes;
    std::map<std::pair<int, int>, std::vector<int>> maps;
};

/// Size of colim F: disjoint union of the sets modulo the relations
/// generated by the morphism images (union-find).
int set_colim_size(const Poset& p, const SetFunctor& f);

}  // namespace scop
