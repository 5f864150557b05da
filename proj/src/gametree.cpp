#include "spg/gametree.hpp"

#include <algorithm>
#include <unordered_map>

namespace spg {

namespace {

std::vector<VertexMask> face_list(const LabeledComplex& complex)
{
    return complex.is_void() ? std::vector<VertexMask>{} : faces(complex);
}

} // namespace

GameTree build_tree(const LabeledComplex& complex, std::size_t max_nodes)
{
    GameTree tree;
    tree.complex_ = complex;
    tree.nodes_.push_back({});
    if (complex.is_void()) {
        return tree;
    }
    const std::size_t n = complex.num_vertices();
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        const VertexMask face = tree.nodes_[static_cast<std::size_t>(at)].face;
        std::vector<int> kids;
        for (std::size_t v = 0; v < n; ++v) {
            const VertexMask next = face | bit(v);
            if (next == face || !complex.contains_face(next)) {
                continue;
            }
            if (tree.nodes_.size() >= max_nodes) {
                throw BudgetExceeded("game tree exceeds " + std::to_string(max_nodes) + " nodes");
            }
            TreeNode child;
            child.face = next;
            child.parent = at;
            child.label = to_char(complex.vertices()[v].part);
            kids.push_back(static_cast<int>(tree.nodes_.size()));
            tree.nodes_.push_back(std::move(child));
        }
        tree.nodes_[static_cast<std::size_t>(at)].children = kids;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    return tree;
}

std::uint32_t TreeCoder::code(const GameTree& tree)
{
    const auto& nodes = tree.nodes();
    std::vector<std::uint32_t> codes(nodes.size(), 0);
    // children always have larger indices than their parent
    for (std::size_t i = nodes.size(); i-- > 0;) {
        std::vector<std::uint32_t> kids;
        for (int c : nodes[i].children) {
            kids.push_back(codes[static_cast<std::size_t>(c)]);
        }
        std::sort(kids.begin(), kids.end());
        auto key = std::make_pair(nodes[i].label, std::move(kids));
        auto it = table_.find(key);
        if (it == table_.end()) {
            it = table_.emplace(std::move(key), static_cast<std::uint32_t>(table_.size())).first;
        }
        codes[i] = it->second;
    }
    return codes.front();
}

bool trees_isomorphic(const GameTree& a, const GameTree& b)
{
    if (a.size() != b.size()) {
        return false;
    }
    TreeCoder coder;
    return coder.code(a) == coder.code(b);
}

Outcome outcome(const LabeledComplex& complex)
{
    if (complex.is_void()) {
        return Outcome::P;
    }
    const std::size_t n = complex.num_vertices();
    const VertexMask left = complex.part_mask(Player::Left);
    // wins[F] bit 0: Left moving first wins from F; bit 1: Right moving first wins
    std::unordered_map<VertexMask, int> wins;
    auto fs = face_list(complex);
    std::sort(fs.begin(), fs.end(), [](VertexMask a, VertexMask b) { return popcount(a) > popcount(b); });
    for (VertexMask f : fs) {
        int w = 0;
        for (std::size_t v = 0; v < n; ++v) {
            const VertexMask g = f | bit(v);
            if (g == f) {
                continue;
            }
            auto it = wins.find(g);
            if (it == wins.end()) {
                continue;
            }
            if ((left & bit(v)) != 0 && (it->second & 2) == 0) {
                w |= 1;
            }
            if ((left & bit(v)) == 0 && (it->second & 1) == 0) {
                w |= 2;
            }
        }
        wins.emplace(f, w);
    }
    switch (wins.at(0)) {
    case 0: return Outcome::P;
    case 1: return Outcome::L;
    case 2: return Outcome::R;
    default: return Outcome::N;
    }
}

Value canonical_value(const LabeledComplex& complex)
{
    if (complex.is_void()) {
        return Value();
    }
    const std::size_t n = complex.num_vertices();
    const VertexMask left = complex.part_mask(Player::Left);
    std::unordered_map<VertexMask, Value> memo;
    auto fs = face_list(complex);
    std::sort(fs.begin(), fs.end(), [](VertexMask a, VertexMask b) { return popcount(a) > popcount(b); });
    for (VertexMask f : fs) {
        std::vector<Value> l;
        std::vector<Value> r;
        for (std::size_t v = 0; v < n; ++v) {
            const VertexMask g = f | bit(v);
            if (g == f) {
                continue;
            }
            if (auto it = memo.find(g); it != memo.end()) {
                ((left & bit(v)) != 0 ? l : r).push_back(it->second);
            }
        }
        memo.emplace(f, Value::from_options(l, r));
    }
    return memo.at(0);
}

IsoAgreement legal_iso_iff_tree_iso(const LabeledComplex& a, const LabeledComplex& b)
{
    IsoAgreement out;
    out.complexes_isomorphic = are_isomorphic(a, b).has_value();
    out.trees_isomorphic = trees_isomorphic(build_tree(a), build_tree(b));
    return out;
}

std::string to_dot(const GameTree& tree)
{
    std::string out = "digraph game_tree {\n";
    const auto& nodes = tree.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::string face;
        for (const auto& name : tree.complex().names(nodes[i].face)) {
            face += name;
        }
        out += "  n" + std::to_string(i) + " [label=\"" + (face.empty() ? "{}" : face) + "\"];\n";
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        out += "  n" + std::to_string(nodes[i].parent) + " -> n" + std::to_string(i) + " [label=\"" +
               std::string(1, nodes[i].label) + "\", color=" + (nodes[i].label == 'L' ? "blue" : "red") +
               "];\n";
    }
    return out + "}\n";
}

} // namespace spg
