#include "spg/board.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace spg {

std::string to_string(CycleRole role)
{
    switch (role) {
    case CycleRole::Outer: return "outer";
    case CycleRole::Connection: return "connection";
    case CycleRole::Inner: return "inner";
    case CycleRole::Centre: return "centre";
    }
    return "?";
}

CycleRole cycle_role_from_string(std::string_view s)
{
    if (s == "outer") return CycleRole::Outer;
    if (s == "connection") return CycleRole::Connection;
    if (s == "inner") return CycleRole::Inner;
    if (s == "centre") return CycleRole::Centre;
    throw Error("unknown cycle role '" + std::string(s) + "'");
}

Board::Board(int num_vertices, const std::vector<std::pair<int, int>>& edges)
{
    if (num_vertices < 0) {
        throw Error("negative vertex count");
    }
    adjacency_.resize(static_cast<std::size_t>(num_vertices));
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) {
            throw Error("loop at vertex " + std::to_string(u));
        }
        const auto e = std::minmax(u, v);
        if (!seen.insert(e).second) {
            throw Error("repeated edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
        }
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool Board::adjacent(int u, int v) const
{
    const auto& n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
}

const Coord& Board::coord(int v) const
{
    auto it = coords_.find(v);
    if (it == coords_.end()) {
        throw Error("vertex " + std::to_string(v) + " has no coordinates");
    }
    return it->second;
}

void Board::set_coords(std::map<int, Coord> coords)
{
    if (coords.empty()) {
        coords_.clear();
        return;
    }
    if (static_cast<int>(coords.size()) != num_vertices()) {
        throw Error("coordinates must cover every board vertex");
    }
    std::set<Coord> cells;
    for (const auto& [v, c] : coords) {
        if (v < 0 || v >= num_vertices()) {
            throw Error("coordinate for unknown vertex " + std::to_string(v));
        }
        if (!cells.insert(c).second) {
            throw Error("two vertices share cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
        }
    }
    for (auto [u, v] : edges_) {
        const Coord a = coords.at(u);
        const Coord b = coords.at(v);
        if (std::abs(a.row - b.row) + std::abs(a.col - b.col) != 1) {
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") does not join orthogonally adjacent cells");
        }
    }
    coords_ = std::move(coords);
}

std::optional<CycleLabel> Board::cycle_label(int v) const
{
    auto it = cycle_labels_.find(v);
    if (it == cycle_labels_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void Board::set_cycle_labels(std::map<int, CycleLabel> labels)
{
    for (const auto& [v, l] : labels) {
        if (v < 0 || v >= num_vertices()) {
            throw Error("cycle label for unknown vertex " + std::to_string(v));
        }
    }
    cycle_labels_ = std::move(labels);
}

Board Board::subgraph(const std::vector<int>& vertices,
                      const std::vector<std::pair<int, int>>& edges) const
{
    std::map<int, int> index;
    for (int v : vertices) {
        if (v < 0 || v >= num_vertices() || !index.emplace(v, static_cast<int>(index.size())).second) {
            throw Error("invalid subgraph vertex list");
        }
    }
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : edges) {
        if (!adjacent(u, v) || index.count(u) == 0 || index.count(v) == 0) {
            throw Error("subgraph edge is not a board edge between listed vertices");
        }
        mapped.emplace_back(index.at(u), index.at(v));
    }
    Board out(static_cast<int>(vertices.size()), mapped);
    if (has_coords()) {
        std::map<int, Coord> c;
        for (int v : vertices) {
            c.emplace(index.at(v), coords_.at(v));
        }
        out.coords_ = std::move(c);
    }
    std::map<int, CycleLabel> labels;
    for (int v : vertices) {
        if (auto it = cycle_labels_.find(v); it != cycle_labels_.end()) {
            labels.emplace(index.at(v), it->second);
        }
    }
    out.cycle_labels_ = std::move(labels);
    return out;
}

Board Board::induced_subgraph(const std::vector<int>& vertices) const
{
    std::set<int> in(vertices.begin(), vertices.end());
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_) {
        if (in.count(u) != 0 && in.count(v) != 0) {
            es.emplace_back(u, v);
        }
    }
    return subgraph(vertices, es);
}

bool Board::is_connected() const
{
    if (num_vertices() == 0) {
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(num_vertices()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == num_vertices();
}

int BoardBuilder::add_vertex()
{
    return count_++;
}

int BoardBuilder::add_vertices(int count)
{
    const int first = count_;
    count_ += count;
    return first;
}

void BoardBuilder::add_edge(int u, int v)
{
    edges_.emplace_back(u, v);
}

void BoardBuilder::add_cycle(const std::vector<int>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        add_edge(vertices[i], vertices[(i + 1) % vertices.size()]);
    }
}

Board BoardBuilder::build() const
{
    Board b(count_, edges_);
    b.set_cycle_labels(labels_);
    return b;
}

Board build_path(int n)
{
    if (n < 1) {
        throw Error("path needs at least 1 vertex");
    }
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) {
        es.emplace_back(i, i + 1);
    }
    return Board(n, es);
}

Board build_cycle(int n)
{
    if (n < 3) {
        throw Error("cycle needs at least 3 vertices");
    }
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
    }
    return Board(n, es);
}

Board build_grid(int rows, int cols)
{
    if (rows < 1 || cols < 1) {
        throw Error("grid needs at least one row and one column");
    }
    std::vector<Coord> cells;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            cells.push_back({r, c});
        }
    }
    return build_grid_cells(cells);
}

Board build_grid_cells(const std::vector<Coord>& cells)
{
    std::map<Coord, int> index;
    for (const auto& c : cells) {
        if (!index.emplace(c, static_cast<int>(index.size())).second) {
            throw Error("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") listed twice");
        }
    }
    std::vector<std::pair<int, int>> es;
    for (const auto& [c, i] : index) {
        for (Coord d : {Coord{c.row + 1, c.col}, Coord{c.row, c.col + 1}}) {
            if (auto it = index.find(d); it != index.end()) {
                es.emplace_back(i, it->second);
            }
        }
    }
    Board b(static_cast<int>(cells.size()), es);
    std::map<int, Coord> coords;
    for (const auto& [c, i] : index) {
        coords.emplace(i, c);
    }
    b.set_coords(std::move(coords));
    return b;
}

Board disjoint_union(const std::vector<Board>& boards)
{
    int offset = 0;
    std::vector<std::pair<int, int>> es;
    std::map<int, CycleLabel> labels;
    for (const auto& b : boards) {
        for (auto [u, v] : b.edges()) {
            es.emplace_back(u + offset, v + offset);
        }
        for (const auto& [v, l] : b.cycle_labels()) {
            labels.emplace(v + offset, l);
        }
        offset += b.num_vertices();
    }
    Board out(offset, es);
    out.set_cycle_labels(std::move(labels));
    return out;
}

namespace {

std::string trim(std::string_view s)
{
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

// Splits on commas that are not nested in brackets or parentheses.
std::vector<std::string> split_top_level(std::string_view s)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[') {
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
        } else if (c == ',' && depth == 0) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    parts.push_back(trim(s.substr(start)));
    return parts;
}

int parse_int(const std::string& s, std::string_view spec)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) {
            throw Error("");
        }
        return v;
    } catch (const std::exception&) {
        throw Error("bad number '" + s + "' in board spec '" + std::string(spec) + "'");
    }
}

std::string unwrap(const std::string& s, char open, char close, std::string_view spec)
{
    if (s.size() < 2 || s.front() != open || s.back() != close) {
        throw Error("expected " + std::string(1, open) + "..." + std::string(1, close) +
                    " in board spec '" + std::string(spec) + "'");
    }
    return s.substr(1, s.size() - 2);
}

} // namespace

Board parse_board_spec(std::string_view spec_in)
{
    const std::string spec = trim(spec_in);
    if (spec == "empty") {
        return Board();
    }
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw Error("board spec '" + spec + "' lacks a ':'");
    }
    const std::string kind = spec.substr(0, colon);
    const std::string arg = trim(spec.substr(colon + 1));
    if (kind == "path") {
        return build_path(parse_int(arg, spec));
    }
    if (kind == "cycle") {
        return build_cycle(parse_int(arg, spec));
    }
    if (kind == "grid") {
        const auto x = arg.find('x');
        if (x == std::string::npos) {
            throw Error("grid spec must look like grid:RxC, got '" + spec + "'");
        }
        return build_grid(parse_int(arg.substr(0, x), spec), parse_int(arg.substr(x + 1), spec));
    }
    if (kind == "grid-cells") {
        std::vector<Coord> cells;
        const std::string body = unwrap(arg, '[', ']', spec);
        if (!trim(body).empty()) {
            for (const auto& cell : split_top_level(body)) {
                const auto rc = split_top_level(unwrap(cell, '(', ')', spec));
                if (rc.size() != 2) {
                    throw Error("cell '" + cell + "' must be (row,col)");
                }
                cells.push_back({parse_int(rc[0], spec), parse_int(rc[1], spec)});
            }
        }
        return build_grid_cells(cells);
    }
    if (kind == "union") {
        std::vector<Board> parts;
        for (const auto& p : split_top_level(unwrap(arg, '(', ')', spec))) {
            parts.push_back(parse_board_spec(p));
        }
        return disjoint_union(parts);
    }
    throw Error("unknown board kind '" + kind + "'");
}

Piece single_vertex_piece(Player p)
{
    return {"vertex", Board(1, {}), p};
}

Piece domino_piece(Player p)
{
    return {"domino", build_path(2), p};
}

Piece cycle_piece(int length, Player p)
{
    return {"cycle" + std::to_string(length), build_cycle(length), p};
}

std::string to_string(const Placement& p)
{
    std::ostringstream out;
    out << to_char(p.player) << '{';
    for (std::size_t i = 0; i < p.occupied.size(); ++i) {
        out << (i ? "," : "") << p.occupied[i];
    }
    out << '}';
    return out.str();
}

namespace detail {

EmbeddingPlan plan_embedding(const Board& pattern)
{
    const int n = pattern.num_vertices();
    EmbeddingPlan plan;
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<int> ordered_neighbors(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (position[static_cast<std::size_t>(v)] >= 0) {
                continue;
            }
            if (best < 0) {
                best = v;
                continue;
            }
            const auto key = [&](int u) {
                return std::make_pair(ordered_neighbors[static_cast<std::size_t>(u)], pattern.degree(u));
            };
            if (key(v) > key(best)) {
                best = v;
            }
        }
        position[static_cast<std::size_t>(best)] = step;
        plan.order.push_back(best);
        std::vector<int> back;
        for (int w : pattern.neighbors(best)) {
            if (position[static_cast<std::size_t>(w)] >= 0 && w != best) {
                back.push_back(position[static_cast<std::size_t>(w)]);
            } else {
                ++ordered_neighbors[static_cast<std::size_t>(w)];
            }
        }
        std::sort(back.begin(), back.end());
        plan.back.push_back(std::move(back));
    }
    return plan;
}

SearchClock::SearchClock(const EmbeddingBudget& budget)
    : budget_(budget), start_(std::chrono::steady_clock::now())
{
}

void SearchClock::tick()
{
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) {
        throw BudgetExceeded("embedding search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }
    if (budget_.time_cap_seconds > 0 && (nodes_ & 0xfff) == 0) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() > budget_.time_cap_seconds) {
            throw BudgetExceeded("embedding search exceeded " + std::to_string(budget_.time_cap_seconds) + " s");
        }
    }
}

} // namespace detail

std::vector<std::vector<int>> embedding_images(const Board& pattern, const Board& host,
                                               const EmbeddingBudget& budget)
{
    std::set<std::vector<int>> images;
    for_each_embedding(
        pattern, host,
        [&](const std::vector<int>& image) {
            std::vector<int> s = image;
            std::sort(s.begin(), s.end());
            images.insert(std::move(s));
            return true;
        },
        budget);
    return {images.begin(), images.end()};
}

std::vector<Placement> piece_placements(const Board& board, const Piece& piece,
                                        const EmbeddingBudget& budget)
{
    std::vector<Placement> out;
    for (auto& image : embedding_images(piece.shape, board, budget)) {
        out.push_back({piece.player, std::move(image)});
    }
    return out;
}

std::optional<int> distance(const Board& board, const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.empty() || b.empty()) {
        throw Error("distance needs two nonempty vertex sets");
    }
    std::vector<int> dist(static_cast<std::size_t>(board.num_vertices()), -1);
    std::vector<char> target(static_cast<std::size_t>(board.num_vertices()), 0);
    for (int v : b) {
        target.at(static_cast<std::size_t>(v)) = 1;
    }
    std::deque<int> queue;
    for (int v : a) {
        if (target.at(static_cast<std::size_t>(v))) {
            return 0;
        }
        if (dist[static_cast<std::size_t>(v)] < 0) {
            dist[static_cast<std::size_t>(v)] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : board.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] >= 0) {
                continue;
            }
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            if (target[static_cast<std::size_t>(w)]) {
                return dist[static_cast<std::size_t>(w)];
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

EdgeLabeling::EdgeLabeling(std::map<std::pair<std::string, std::string>, int> labels)
    : labels_(std::move(labels))
{
}

std::vector<std::pair<std::size_t, std::size_t>> skeleton_edges(const LabeledComplex& complex)
{
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (VertexMask f : complex.facet_masks()) {
        for (std::size_t i = 0; i < complex.num_vertices(); ++i) {
            for (std::size_t j = i + 1; j < complex.num_vertices(); ++j) {
                if ((f & bit(i)) && (f & bit(j))) {
                    edges.emplace(i, j);
                }
            }
        }
    }
    return {edges.begin(), edges.end()};
}

EdgeLabeling EdgeLabeling::default_for(const LabeledComplex& complex)
{
    std::map<std::pair<std::string, std::string>, int> labels;
    int next = 1;
    for (auto [i, j] : skeleton_edges(complex)) {
        labels.emplace(std::make_pair(complex.vertices()[i].name, complex.vertices()[j].name), next++);
    }
    return EdgeLabeling(std::move(labels));
}

int EdgeLabeling::label(const std::string& u, const std::string& v) const
{
    if (auto it = labels_.find({u, v}); it != labels_.end()) {
        return it->second;
    }
    if (auto it = labels_.find({v, u}); it != labels_.end()) {
        return it->second;
    }
    throw Error("edge " + u + v + " has no label");
}

void EdgeLabeling::validate(const LabeledComplex& complex) const
{
    const auto edges = skeleton_edges(complex);
    if (edges.size() != labels_.size()) {
        throw Error("labelling has " + std::to_string(labels_.size()) + " entries but the complex has " +
                    std::to_string(edges.size()) + " edges");
    }
    std::set<int> seen;
    for (auto [i, j] : edges) {
        const int l = label(complex.vertices()[i].name, complex.vertices()[j].name);
        if (l < 1 || l > static_cast<int>(edges.size())) {
            throw Error("edge label " + std::to_string(l) + " outside 1.." + std::to_string(edges.size()));
        }
        if (!seen.insert(l).second) {
            throw Error("edge label " + std::to_string(l) + " used twice");
        }
    }
}

int gamma_outer_length(int n, Player p)
{
    if (n < 1 || n > 40) {
        throw Error("gamma construction size " + std::to_string(n) + " out of range");
    }
    return n * n * n * n + (p == Player::Left ? 4 : 5);
}

std::vector<int> append_gamma_component(BoardBuilder& builder, int cycle_index, int n, Player p,
                                        const std::vector<int>& peers,
                                        std::vector<int>* connection_vertices)
{
    if (static_cast<int>(peers.size()) != n - 1) {
        throw Error("a labelled cycle needs n-1 connection labels");
    }
    const int outer = gamma_outer_length(n, p);
    const int inner = n * n * n;
    std::vector<int> cycle;
    std::vector<int> all;
    const int first = builder.add_vertices(outer);
    for (int k = 0; k < outer; ++k) {
        cycle.push_back(first + k);
        all.push_back(first + k);
        builder.label(first + k, {cycle_index, CycleRole::Outer, -1, -1});
    }
    builder.add_cycle(cycle);
    for (int t = 0; t < n - 1; ++t) {
        const int c = cycle[static_cast<std::size_t>(t)];
        builder.label(c, {cycle_index, CycleRole::Connection, peers[static_cast<std::size_t>(t)], -1});
        if (connection_vertices != nullptr) {
            connection_vertices->push_back(c);
        }
        std::vector<int> ring{c};
        const int start = builder.add_vertices(inner - 1);
        for (int k = 0; k < inner - 1; ++k) {
            ring.push_back(start + k);
            all.push_back(start + k);
            builder.label(start + k, {cycle_index, CycleRole::Inner, -1, -1});
        }
        builder.add_cycle(ring);
    }
    std::sort(all.begin(), all.end());
    return all;
}

Board gamma_piece_shape(int n, Player p)
{
    BoardBuilder b;
    std::vector<int> peers;
    for (int t = 0; t < n - 1; ++t) {
        peers.push_back(t);
    }
    append_gamma_component(b, 0, n, p, peers);
    return Board(b.size(), b.build().edges());
}

Piece gamma_piece(int n, Player p)
{
    return {"gamma" + std::to_string(n) + to_char(p), gamma_piece_shape(n, p), p};
}

Board gamma_board(const LabeledComplex& gamma, const EdgeLabeling& labeling)
{
    if (gamma.is_void() || gamma.num_vertices() == 0) {
        return Board();
    }
    if (has_isolated_vertex(gamma)) {
        for (VertexMask f : gamma.facet_masks()) {
            if (popcount(f) == 1) {
                throw Error("complex has isolated vertex '" + gamma.names(f).front() +
                            "'; an invariant game cannot have an illegal basic position");
            }
        }
    }
    labeling.validate(gamma);
    const int n = static_cast<int>(gamma.num_vertices());
    BoardBuilder builder;
    // connection[i][j] = vertex of cycle i that links towards cycle j
    std::vector<std::map<int, int>> connection(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> peers;
        for (int j = 0; j < n; ++j) {
            if (j != i) {
                peers.push_back(j);
            }
        }
        std::vector<int> conn;
        append_gamma_component(builder, i, n, gamma.vertices()[static_cast<std::size_t>(i)].part, peers, &conn);
        for (std::size_t t = 0; t < peers.size(); ++t) {
            connection[static_cast<std::size_t>(i)][peers[t]] = conn[t];
        }
    }
    for (auto [i, j] : skeleton_edges(gamma)) {
        const int l = labeling.label(gamma.vertices()[i].name, gamma.vertices()[j].name);
        std::vector<int> path{connection[i].at(static_cast<int>(j))};
        const int start = builder.add_vertices(l);
        for (int k = 0; k < l; ++k) {
            path.push_back(start + k);
            builder.label(start + k, {-1, CycleRole::Centre, -1, l});
        }
        path.push_back(connection[j].at(static_cast<int>(i)));
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            builder.add_edge(path[k], path[k + 1]);
        }
    }
    return builder.build();
}

std::vector<int> labelled_cycle_vertices(const Board& board, int index)
{
    std::vector<int> out;
    for (const auto& [v, l] : board.cycle_labels()) {
        if (l.cycle == index && l.role != CycleRole::Centre) {
            out.push_back(v);
        }
    }
    return out;
}

std::string to_dot(const Board& board)
{
    std::ostringstream out;
    out << "graph board {\n";
    for (int v = 0; v < board.num_vertices(); ++v) {
        out << "  " << v;
        std::vector<std::string> attrs;
        if (board.has_coords()) {
            const Coord c = board.coord(v);
            attrs.push_back("pos=\"" + std::to_string(c.col) + "," + std::to_string(-c.row) + "!\"");
        }
        if (auto l = board.cycle_label(v)) {
            std::string text = to_string(l->role);
            if (l->role == CycleRole::Centre) {
                text += " e" + std::to_string(l->edge);
            } else {
                text += " c" + std::to_string(l->cycle);
                if (l->role == CycleRole::Connection) {
                    text += "->" + std::to_string(l->peer);
                }
            }
            attrs.push_back("tooltip=\"" + text + "\"");
        }
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) {
                out << (i ? ", " : "") << attrs[i];
            }
            out << "]";
        }
        out << ";\n";
    }
    for (auto [u, v] : board.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace spg
