#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scop/tree.hpp"
#include "scop/two_tree.hpp"

namespace scop {

/// A token of a sequence element: (block, index) addresses the index-th
/// element of the ordinal coloring block; index == -1 marks an algebra-color
/// token (block is then its label).
struct SeqToken {
    int block = 0;
    int index = 0;

    bool is_alg() const { return index < 0; }
    bool operator==(const SeqToken&) const = default;
    auto operator<=>(const SeqToken&) const = default;
};

/// An element of the sequence operad: an arrangement (total order) of the
/// tokens of all blocks, plus, in the cochain-colored case, a nondecreasing
/// map into the output ordinal J.  Block ordinals and J are non-empty.
///
/// In the algebra-colored (SC) case there is no output ordinal; algebra
/// tokens ride along in the arrangement, in any relative order.
struct SeqElem {
    std::vector<int> blocks;           // ordinal sizes, each >= 1
    int J = 1;                         // output ordinal size (ignored when sc)
    bool sc = false;
    int n_alg = 0;                     // number of algebra tokens (sc only)
    std::vector<SeqToken> arrangement;
    std::vector<int> q;                // J-address per arrangement position (empty when sc)

    int token_count() const { return static_cast<int>(arrangement.size()); }
    std::string str() const;
    bool operator==(const SeqElem&) const = default;
    auto operator<=>(const SeqElem&) const = default;

    /// Identity element of cochain color n (block of size n, q = id).
    static SeqElem unit_c(int n);
    /// Identity element of algebra color (one algebra token, no blocks).
    static SeqElem unit_a();
};

struct SeqDiagnostics {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Full invariant check: arrangement is a permutation of the token set,
/// restricted to every block it is increasing, no two blocks interleave,
/// q is nondecreasing into J.  Violations are all named.
SeqDiagnostics validate(const SeqElem& u);

/// Positions of the elementary-equivalence classes: maximal contiguous runs
/// of tokens of one block; algebra tokens are singletons.
std::vector<std::vector<int>> elementary_classes(const SeqElem& u);

/// |u| = number of elementary classes.  The filtration level of u over a
/// source of size |S| is |u| - |S|.
int class_count(const SeqElem& u);

/// Operadic composition of cochain-colored elements: slot t of u receives
/// u_t, whose output ordinal must equal block t of u.  Blocks of the result
/// are those of the inner elements, concatenated in slot order.
SeqElem compose(const SeqElem& u, const std::vector<SeqElem>& inner);

/// Swiss-Cheese composition: v is algebra-colored; c_inner fills the cochain
/// slots (blocks of v, in order), a_inner the algebra slots (algebra tokens
/// of v, in label order) with algebra-colored elements.
SeqElem compose_sc(const SeqElem& v, const std::vector<SeqElem>& c_inner,
                   const std::vector<SeqElem>& a_inner);

/// Unary (co)simplicial actions. act_on_J post-composes q with theta;
/// act_on_block pulls block s back along theta (tokens of s become theta's
/// source, inheriting arrangement positions of their images).
SeqElem act_on_J(const SeqElem& u, const MonotoneMap& theta);
SeqElem act_on_block(const SeqElem& u, int s, const MonotoneMap& theta);

/// Membership in Seq(tau) inside the desymmetrized operad: block s of u is
/// attached to source address s of tau (SC: algebra label l to address l,
/// block b to address n_alg + b).
bool in_seq_tau(const SeqElem& u, const TwoTree& tau);

/// All valid elements with the given profile. Non-SC: every arrangement and
/// every nondecreasing q into J.  SC: J ignored, n_alg algebra tokens.
std::vector<SeqElem> enumerate_elems(const std::vector<int>& blocks, int J, bool sc,
                                     int n_alg, int token_bound = 8);

/// Bijection with boundary-order words: block sizes become sector counts,
/// output tokens encode q, algebra tokens pass through.
TotalOrderWord seq_to_word(const SeqElem& u);
SeqElem word_to_seq(const TotalOrderWord& w);

/// Tree-level composition by grafting: the vertex of `outer` marked t is
/// replaced by inner[t], whose output leaves absorb that vertex's child
/// subtrees; SC slots (algebra leaves of outer, label a) absorb a_inner[a]
/// wholesale.  Inner cochain labels are renumbered in slot order, matching
/// the block numbering of compose/compose_sc.  Independent oracle for both.
MarkedPlanarTree graft_compose(const MarkedPlanarTree& outer,
                               const std::vector<MarkedPlanarTree>& inner,
                               const std::vector<MarkedPlanarTree>& a_inner = {});

}  // namespace scop
