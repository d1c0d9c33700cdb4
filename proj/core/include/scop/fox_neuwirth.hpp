#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scop/dsurj.hpp"
#include "scop/poset.hpp"
#include "scop/two_tree.hpp"

namespace scop {

/// Planar configuration indexed by labels 0..n-1.
struct Configuration {
    std::vector<double> x, y;
    int size() const { return static_cast<int>(x.size()); }
};

/// A surjection at set level with SC coloring, values given as labels.
struct SigmaData {
    int n_labels = 0;
    bool sc = false;
    std::vector<int> sa_labels;  // algebra-colored labels
    DSurjection sigma;           // label-valued

    int filtration_level() const { return sigma.length() - n_labels; }
    bool is_alg(int label) const;
};

/// The example fixture used throughout: S = {0,1,2,3} with label 1 algebra-
/// colored, sigma = (0,3,2,1,2,3).
SigmaData example_sigma();

/// Dimension of the Fox-Neuwirth cell of a pruned (SC) 2-tree:
/// |S|+|T|, one less in the SC case.
int fn_dimension(const TwoTree& t);

/// Membership of a configuration in the cell of a labeled 2-tree: fibers
/// share a column with heights increasing in source order, columns ordered
/// with T; SC pins algebra labels to x = 0 and the rest to x > 0.
bool fn_contains(const Configuration& c, const LabeledTwoTree& obj, bool sc, double tol);

/// Membership in the union X_sigma of the cells over J(sigma), through the
/// explicit order/column conditions on sigma.
bool x_sigma_contains(const Configuration& c, const SigmaData& sd, double tol);

/// The total order on labels induced by sigma (nesting-inside or
/// entirely-to-the-left comes first).
std::vector<int> sigma_order(const SigmaData& sd);

struct RetractionReport {
    bool ok = true;
    int configurations = 0;
    int stage_checks = 0;
    std::vector<std::string> failures;  // capped verbose diagnostics
};

/// Monte-Carlo validation of the deformation retraction stages: the
/// straight-line stages on heights within X_sigma, their column analogues
/// on the per-tree cell unions, endpoint and fixed-point behaviour, down to
/// the final line.
RetractionReport retraction_suite(const SigmaData& sd, int n_samples, std::uint64_t seed,
                                  double tol);

}  // namespace scop
