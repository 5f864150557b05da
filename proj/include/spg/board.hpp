#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spg/complex.hpp"
#include "spg/types.hpp"

namespace spg {

struct Coord {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Roles of board vertices produced by the labelled-cycle constructions.
enum class CycleRole { Outer, Connection, Inner, Centre };

std::string to_string(CycleRole role);
CycleRole cycle_role_from_string(std::string_view s);

/// For Outer/Connection/Inner, `cycle` is the index of the cycle the vertex
/// belongs to and, for Connection, `peer` is the cycle it links towards.
/// Centre vertices carry the label of the edge whose path they lie on.
struct CycleLabel {
    int cycle = -1;
    CycleRole role = CycleRole::Outer;
    int peer = -1;
    int edge = -1;

    friend bool operator==(const CycleLabel&, const CycleLabel&) = default;
};

/// A finite simple graph on vertices 0..n-1.
class Board {
public:
    Board() = default;
    Board(int num_vertices, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return static_cast<int>(adjacency_.size()); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    bool has_coords() const { return !coords_.empty(); }
    const std::map<int, Coord>& coords() const { return coords_; }
    const Coord& coord(int v) const;
    /// Coordinates must be injective, cover every vertex and make each edge orthogonal.
    void set_coords(std::map<int, Coord> coords);

    const std::map<int, CycleLabel>& cycle_labels() const { return cycle_labels_; }
    std::optional<CycleLabel> cycle_label(int v) const;
    void set_cycle_labels(std::map<int, CycleLabel> labels);

    /// Subgraph on `vertices` (relabelled 0..k-1 in the given order) keeping
    /// only `edges`, which must be board edges between listed vertices.
    Board subgraph(const std::vector<int>& vertices,
                   const std::vector<std::pair<int, int>>& edges) const;
    Board induced_subgraph(const std::vector<int>& vertices) const;

    bool is_connected() const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, Coord> coords_;
    std::map<int, CycleLabel> cycle_labels_;
};

/// Incremental construction helper.
class BoardBuilder {
public:
    int add_vertex();
    int add_vertices(int count);
    void add_edge(int u, int v);
    /// Closes `vertices` into a cycle.
    void add_cycle(const std::vector<int>& vertices);
    void label(int v, CycleLabel l) { labels_[v] = l; }
    int size() const { return count_; }
    Board build() const;

private:
    int count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, CycleLabel> labels_;
};

Board build_path(int n);
Board build_cycle(int n);
Board build_grid(int rows, int cols);
/// Cells listed in order become vertices 0..k-1; orthogonal neighbours are joined.
Board build_grid_cells(const std::vector<Coord>& cells);
/// Relabels ids consecutively; coordinates are dropped, cycle labels kept.
Board disjoint_union(const std::vector<Board>& boards);

/// Parses "path:3", "cycle:4", "grid:2x3", "grid-cells:[(0,0),(1,0)]",
/// "union:(path:3,cycle:4)" and "empty".
Board parse_board_spec(std::string_view spec);

struct Piece {
    std::string name;
    Board shape;
    Player player = Player::Left;
};

Piece single_vertex_piece(Player p);
Piece domino_piece(Player p);
Piece cycle_piece(int length, Player p);

struct Placement {
    Player player = Player::Left;
    std::vector<int> occupied;

    friend auto operator<=>(const Placement&, const Placement&) = default;
};

std::string to_string(const Placement& p);

struct EmbeddingBudget {
    /// Search nodes visited before giving up; 0 means unlimited.
    std::size_t max_nodes = 0;
    /// Wall-clock cap in seconds; 0 means unlimited.
    double time_cap_seconds = 0;
};

/// Distinct vertex images of (non-induced) subgraph embeddings of `pattern`
/// into `host`, each sorted, in lexicographic order.
std::vector<std::vector<int>> embedding_images(const Board& pattern, const Board& host,
                                               const EmbeddingBudget& budget = {});

/// Visits every embedding as a map pattern vertex -> host vertex. The visitor
/// returns false to stop the search.
template <typename Visitor>
void for_each_embedding(const Board& pattern, const Board& host, Visitor&& visit,
                        const EmbeddingBudget& budget = {});

std::vector<Placement> piece_placements(const Board& board, const Piece& piece,
                                        const EmbeddingBudget& budget = {});

/// Minimum graph distance between two vertex sets; nullopt when disconnected.
std::optional<int> distance(const Board& board, const std::vector<int>& a,
                            const std::vector<int>& b);

/// Edge labelling of the 1-skeleton of a complex: vertex-name pairs to 1..k.
class EdgeLabeling {
public:
    EdgeLabeling() = default;
    explicit EdgeLabeling(std::map<std::pair<std::string, std::string>, int> labels);

    /// Edges sorted by (canonical index of u, canonical index of v), labelled 1..k.
    static EdgeLabeling default_for(const LabeledComplex& complex);

    /// Throws unless the labelling is a bijection edges(complex^[1]) -> 1..k.
    void validate(const LabeledComplex& complex) const;

    int label(const std::string& u, const std::string& v) const;
    const std::map<std::pair<std::string, std::string>, int>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }

    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

private:
    std::map<std::pair<std::string, std::string>, int> labels_;
};

/// Edges of the 1-skeleton as index pairs (i < j) in canonical order.
std::vector<std::pair<std::size_t, std::size_t>> skeleton_edges(const LabeledComplex& complex);

/// Number of vertices of the piece shape for a complex on n vertices.
int gamma_outer_length(int n, Player p);

/// The piece shape: an outer cycle of n^4+4 (Left) or n^4+5 (Right) vertices,
/// with an n^3-cycle joined at each of n-1 consecutive vertices.
Board gamma_piece_shape(int n, Player p);
Piece gamma_piece(int n, Player p);

/// Appends a labelled piece-shaped component to `builder`; returns the vertices
/// of the component. `peers` lists the connection labels (one per connection vertex).
std::vector<int> append_gamma_component(BoardBuilder& builder, int cycle_index, int n, Player p,
                                        const std::vector<int>& peers,
                                        std::vector<int>* connection_vertices = nullptr);

/// Board realising `gamma` as an illegal complex. Cycle i corresponds to the
/// i-th vertex of gamma in canonical order.
Board gamma_board(const LabeledComplex& gamma, const EdgeLabeling& labeling);

/// Vertices of cycle `index` (outer, connection and inner roles).
std::vector<int> labelled_cycle_vertices(const Board& board, int index);

std::string to_dot(const Board& board);

} // namespace spg

#include "spg/embedding.hpp"
