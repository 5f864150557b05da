#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spg/types.hpp"

namespace spg {

struct Vertex {
    std::string name;
    Player part = Player::Left;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Canonical vertex order: the Left block before the Right block, names in natural order.
bool canonical_vertex_less(const Vertex& a, const Vertex& b);

using PartMap = std::map<std::string, Player>;

/// A simplicial complex whose vertices are bipartitioned into Left and Right.
///
/// Values are always normalized: vertices are in canonical order, every
/// vertex lies in some facet, facets form an antichain and are sorted by
/// their index sequence. Two representations of "empty" exist: the void
/// complex (no faces at all) and the complex {∅} whose only facet is ∅.
class LabeledComplex {
public:
    /// The void complex.
    LabeledComplex() = default;

    static LabeledComplex void_complex() { return {}; }
    static LabeledComplex empty_face_only();

    /// Normalizes an arbitrary family. Vertices missing from `part` are rejected.
    static LabeledComplex from_facets(const std::vector<std::vector<std::string>>& facets,
                                      const PartMap& part);

    /// Masks are taken relative to `vertices` (in the given order).
    static LabeledComplex from_masks(const std::vector<Vertex>& vertices,
                                     const std::vector<VertexMask>& facets);

    bool is_void() const { return void_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<VertexMask>& facet_masks() const { return facets_; }

    std::vector<std::vector<std::string>> facets() const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    VertexMask mask_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names(VertexMask mask) const;
    PartMap parts() const;

    VertexMask part_mask(Player p) const;
    bool contains_face(VertexMask face) const;

    friend bool operator==(const LabeledComplex&, const LabeledComplex&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<VertexMask> facets_;
    bool void_ = true;
};

/// A square-free monomial ideal described by its minimal generators.
///
/// Generators are subsets of the variable list. The empty generator stands for
/// the unit ideal and is then the only generator; no generators is the zero ideal.
class SquareFreeIdeal {
public:
    SquareFreeIdeal() = default;

    static SquareFreeIdeal from_masks(const std::vector<Vertex>& variables,
                                      const std::vector<VertexMask>& generators);
    static SquareFreeIdeal from_names(const std::vector<Vertex>& variables,
                                      const std::vector<std::vector<std::string>>& generators);

    const std::vector<Vertex>& variables() const { return variables_; }
    const std::vector<VertexMask>& generator_masks() const { return generators_; }
    std::vector<std::vector<std::string>> generators() const;
    std::vector<std::string> names(VertexMask mask) const;

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return generators_.size() == 1 && generators_.front() == 0; }
    /// True if the monomial is divisible by some generator.
    bool contains(VertexMask monomial) const;

    friend bool operator==(const SquareFreeIdeal&, const SquareFreeIdeal&) = default;

private:
    std::vector<Vertex> variables_;
    std::vector<VertexMask> generators_;
};

/// Reduces a family to its inclusion-maximal (or minimal) members, deduplicated and sorted.
std::vector<VertexMask> maximal_elements(std::vector<VertexMask> family);
std::vector<VertexMask> minimal_elements(std::vector<VertexMask> family);

/// Orders masks by their ascending index sequence, e.g. {0,1} < {0,2} < {1}.
bool index_sequence_less(VertexMask a, VertexMask b);

std::vector<VertexMask> faces(const LabeledComplex& complex);
/// dim(F) = |F| - 1; both the void complex and {∅} report -1.
int dimension(const LabeledComplex& complex);
bool is_pure(const LabeledComplex& complex);
LabeledComplex k_skeleton(const LabeledComplex& complex, int k);

std::vector<VertexMask> minimal_nonfaces(const LabeledComplex& complex);

SquareFreeIdeal facet_ideal(const LabeledComplex& complex);
SquareFreeIdeal sr_ideal(const LabeledComplex& complex);
LabeledComplex facet_complex(const SquareFreeIdeal& ideal);
LabeledComplex sr_complex(const SquareFreeIdeal& ideal);

bool is_flag(const LabeledComplex& complex);
bool is_simplex(const LabeledComplex& complex);
bool has_isolated_vertex(const LabeledComplex& complex);

/// Facets of a maximal-independent-set style enumeration: all maximal subsets
/// of `universe` that contain no member of `forbidden`.
std::vector<VertexMask> maximal_avoiding_sets(std::size_t universe,
                                              const std::vector<VertexMask>& forbidden);

struct LabeledGraph {
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

LabeledComplex independence_complex(const LabeledGraph& graph);

/// Returns image indices: result[i] is the vertex of `b` that vertex i of `a` maps to.
std::optional<std::vector<std::size_t>> are_isomorphic(const LabeledComplex& a,
                                                       const LabeledComplex& b);

/// Renames vertices; names absent from the map are kept.
LabeledComplex rename(const LabeledComplex& complex,
                      const std::map<std::string, std::string>& names);

/// Facets in monomial style, e.g. <ab, bc> or <x1y3, x2>.
std::string to_string(const LabeledComplex& complex);
std::string to_string(const SquareFreeIdeal& ideal);

} // namespace spg
