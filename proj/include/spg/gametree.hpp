#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spg/complex.hpp"
#include "spg/value.hpp"

namespace spg {

struct TreeNode {
    VertexMask face = 0;
    int parent = -1;
    /// 'L' or 'R' for the move into this node; 0 at the root.
    char label = 0;
    std::vector<int> children;
};

/// The game tree of a legal complex: one node per move sequence.
class GameTree {
public:
    const LabeledComplex& complex() const { return complex_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    const TreeNode& root() const { return nodes_.front(); }

private:
    friend GameTree build_tree(const LabeledComplex& complex, std::size_t max_nodes);

    LabeledComplex complex_;
    std::vector<TreeNode> nodes_;
};

/// Children of the node for F are the faces F+v, v not in F, in canonical
/// vertex order. A void complex gives the single-node tree. Throws
/// BudgetExceeded beyond `max_nodes`.
GameTree build_tree(const LabeledComplex& complex, std::size_t max_nodes = 2'000'000);

/// Interns rooted, edge-labelled unordered trees; equal codes mean isomorphic trees.
class TreeCoder {
public:
    std::uint32_t code(const GameTree& tree);

private:
    std::map<std::pair<char, std::vector<std::uint32_t>>, std::uint32_t> table_;
};

bool trees_isomorphic(const GameTree& a, const GameTree& b);

/// Normal-play outcome by minimax over faces.
Outcome outcome(const LabeledComplex& complex);

/// Canonical value, memoized by face.
Value canonical_value(const LabeledComplex& complex);

struct IsoAgreement {
    bool complexes_isomorphic = false;
    bool trees_isomorphic = false;
    bool agree() const { return complexes_isomorphic == trees_isomorphic; }
};

/// Evaluates both sides of the complex/tree correspondence independently.
IsoAgreement legal_iso_iff_tree_iso(const LabeledComplex& a, const LabeledComplex& b);

/// Left edges blue, Right edges red; node labels list the face.
std::string to_dot(const GameTree& tree);

} // namespace spg
