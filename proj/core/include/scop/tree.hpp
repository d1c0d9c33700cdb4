#pragma once

#include <optional>
#include <string>
#include <vector>

namespace scop {

/// One position of the boundary-walk total order of a marked planar tree.
/// Sector (s, i) is the i-th sector around the vertex marked s (there are
/// arity(s)+1 of them); Output j and Algebra a are terminal marks.
struct Token {
    enum class Kind { sector, output, algebra };
    Kind kind;
    int block;  // s label for sectors, j label for outputs, a label for algebra
    int index;  // sector position, 0-based; unused otherwise

    bool operator==(const Token&) const = default;
};

struct TotalOrderWord {
    std::vector<Token> tokens;

    bool operator==(const TotalOrderWord&) const = default;
    std::string str() const;
};

/// Validation of the boundary-order conditions: sectors of each block appear
/// exactly once each, in order; output labels appear in increasing order;
/// no two blocks interleave.  Failures name the offending tokens.
struct WordDiagnostics {
    bool ok = true;
    std::string message;
    std::vector<int> offending_positions;
};
WordDiagnostics validate_word(const TotalOrderWord& w);

/// Rooted planar tree with marked vertices. Output and Algebra marks sit
/// only on terminal vertices; a vertex marked s in S has exactly arity(s)
/// children; unmarked arity-n vertices are the unique n-ary product, and
/// unmarked leaves the unit.
struct TreeNode {
    enum class Kind { unmarked, cochain, output, algebra };
    Kind kind = Kind::unmarked;
    int label = -1;
    std::vector<TreeNode> children;

    bool operator==(const TreeNode&) const = default;
};

struct MarkedPlanarTree {
    TreeNode root;

    bool operator==(const MarkedPlanarTree&) const = default;
    std::string str() const;

    void validate() const;  // throws std::invalid_argument with the reason
};

/// One equivalence move applied at the deterministic (leftmost-innermost)
/// position: contraction of an edge with unmarked ends, or removal of an
/// unmarked vertex with a single outgoing edge.  Empty when minimal.
std::optional<MarkedPlanarTree> reduce_step(const MarkedPlanarTree& t);

/// The unique minimal representative of the equivalence class.
MarkedPlanarTree to_minimal(const MarkedPlanarTree& t);

bool is_minimal(const MarkedPlanarTree& t);

/// Clockwise boundary walk from the root; the total order on sectors,
/// output marks and algebra marks.
TotalOrderWord nu_ord(const MarkedPlanarTree& t);

/// Inverse of nu_ord: the minimal tree realizing a valid order.
MarkedPlanarTree nu_tree(const TotalOrderWord& w);

/// All valid words over the given profile: S blocks with the listed arities,
/// output labels 0..n_out-1, algebra labels 0..n_alg-1.
std::vector<TotalOrderWord> enumerate_words(const std::vector<int>& arities, int n_out,
                                            int n_alg);

/// All valid words with at most max_tokens tokens, across all profiles
/// (non-SC when with_algebra is false).
std::vector<TotalOrderWord> enumerate_words_up_to(int max_tokens, bool with_algebra);

}  // namespace scop
