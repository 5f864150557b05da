#include "doctest.h"
#include "oracles.hpp"
#include "spg/board.hpp"
#include "spg/ruleset.hpp"

using namespace spg;

namespace {

const std::vector<Coord> kLCells{{0, 0}, {1, 0}, {2, 0}, {2, 1}};

LabeledComplex p3_gamma()
{
    return LabeledComplex::from_facets({{"a", "b"}, {"b", "c"}},
                                       {{"a", Player::Left}, {"b", Player::Right}, {"c", Player::Left}});
}

std::map<int, int> cycle_sizes(const Board& b, CycleRole role)
{
    std::map<int, int> out;
    for (const auto& [v, l] : b.cycle_labels()) {
        if (l.role == role || (role == CycleRole::Outer && l.role == CycleRole::Connection)) ++out[l.cycle];
    }
    return out;
}

} // namespace

TEST_CASE("standard boards")
{
    const auto p = build_path(3);
    CHECK(p.num_vertices() == 3);
    CHECK(p.num_edges() == 2);
    const auto g = build_grid(1, 2);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    const auto u = disjoint_union({build_cycle(3), build_cycle(4)});
    CHECK(u.num_vertices() == 7);
    CHECK(u.num_edges() == 7);
    CHECK_THROWS_AS(build_path(0), Error);
    CHECK_THROWS_AS(build_cycle(2), Error);
    CHECK_THROWS_AS(build_grid(0, 3), Error);
}

TEST_CASE("board specs")
{
    CHECK(parse_board_spec("path:3") == build_path(3));
    CHECK(parse_board_spec("grid:2x3") == build_grid(2, 3));
    CHECK(parse_board_spec("union:(path:3,cycle:4)").num_vertices() == 7);
    CHECK(parse_board_spec("empty").num_vertices() == 0);
    const auto l_shape = parse_board_spec("grid-cells:[(0,0),(1,0),(2,0),(2,1)]");
    CHECK(l_shape == build_grid_cells(kLCells));
    CHECK(l_shape.num_edges() == 3);
    CHECK_THROWS_AS(parse_board_spec("torus:3"), Error);
}

TEST_CASE("board invariants are enforced")
{
    CHECK_THROWS_AS(Board(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Board(2, {{0, 1}, {1, 0}}), Error);
    Board b(2, {{0, 1}});
    CHECK_THROWS_AS(b.set_coords({{0, {0, 0}}, {1, {1, 1}}}), Error);
    CHECK_THROWS_AS(b.set_coords({{0, {0, 0}}, {1, {0, 0}}}), Error);
}

TEST_CASE("piece placements")
{
    CHECK(piece_placements(build_path(3), single_vertex_piece(Player::Left)).size() == 3);
    const auto dom = piece_placements(build_grid_cells(kLCells), domino_piece(Player::Left));
    std::vector<std::vector<int>> occ;
    for (const auto& p : dom) occ.push_back(p.occupied);
    CHECK(occ == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(piece_placements(build_cycle(4), cycle_piece(3, Player::Left)).empty());
}

TEST_CASE("embedding images agree with exhaustive search on small graphs")
{
    std::mt19937_64 rng(11);
    const std::vector<Board> patterns{build_path(2), build_path(3), build_cycle(3), build_cycle(4),
                                      Board(3, {{0, 1}, {0, 2}})};
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::pair<int, int>> es;
        const int n = 3 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) es.emplace_back(i, j);
        const Board host(n, es);
        for (const auto& pat : patterns) {
            const auto got = embedding_images(pat, host);
            const auto want = oracle::embedding_images(pat, host);
            CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("placements on a disjoint union split by component")
{
    const auto b1 = build_cycle(4);
    const auto b2 = build_path(3);
    const auto u = disjoint_union({b1, b2});
    const auto piece = domino_piece(Player::Left);
    const auto on_union = piece_placements(u, piece);
    CHECK(on_union.size() == piece_placements(b1, piece).size() + piece_placements(b2, piece).size());
}

TEST_CASE("embedding budget")
{
    EmbeddingBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(embedding_images(build_cycle(6), build_grid(4, 4), tiny), BudgetExceeded);
}

TEST_CASE("distance")
{
    const auto p = build_path(5);
    CHECK(distance(p, {1, 2}, {2, 3}) == 0);
    CHECK(distance(p, {0}, {1}) == 1);
    CHECK(distance(p, {0}, {4}) == 4);
    CHECK_FALSE(distance(disjoint_union({build_path(1), build_path(1)}), {0}, {1}).has_value());
    CHECK_THROWS_AS(distance(p, {}, {1}), Error);
    std::mt19937_64 rng(5);
    const auto g = build_grid(3, 4);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> a{static_cast<int>(rng() % 12)};
        std::vector<int> b{static_cast<int>(rng() % 12), static_cast<int>(rng() % 12)};
        CHECK(distance(g, a, b) == oracle::set_distance(g, a, b));
        CHECK(distance(g, a, b) == distance(g, b, a));
        CHECK(distance(g, a, a) == 0);
    }
}

TEST_CASE("gamma board of the path on three vertices")
{
    const auto gamma = p3_gamma();
    const auto labeling = EdgeLabeling::default_for(gamma);
    CHECK(labeling.label("a", "b") == 1);
    CHECK(labeling.label("c", "b") == 2);
    const auto b = gamma_board(gamma, labeling);
    // outer cycles: 85 (a), 85 (c), 86 (b)
    const auto outer = cycle_sizes(b, CycleRole::Outer);
    CHECK(outer.at(0) == 85);
    CHECK(outer.at(1) == 85);
    CHECK(outer.at(2) == 86);
    // two inner 27-cycles per labelled cycle, sharing the connection vertex
    const auto inner = cycle_sizes(b, CycleRole::Inner);
    for (int i = 0; i < 3; ++i) CHECK(inner.at(i) == 2 * 26);
    int centre1 = 0;
    int centre2 = 0;
    for (const auto& [v, l] : b.cycle_labels()) {
        if (l.role == CycleRole::Centre) (l.edge == 1 ? centre1 : centre2)++;
    }
    CHECK(centre1 == 1);
    CHECK(centre2 == 2);
    CHECK(b.num_vertices() == 85 + 85 + 86 + 6 * 26 + 3);
    // full piece images on cycles i and j joined by edge l are at distance l + 1
    CHECK(distance(b, labelled_cycle_vertices(b, 0), labelled_cycle_vertices(b, 2)) == 2);
    CHECK(distance(b, labelled_cycle_vertices(b, 1), labelled_cycle_vertices(b, 2)) == 3);
}

TEST_CASE("gamma board edge cases")
{
    CHECK(gamma_board(LabeledComplex(), {}).num_vertices() == 0);
    const auto edge = LabeledComplex::from_facets({{"a", "b"}}, {{"a", Player::Left}, {"b", Player::Right}});
    const auto b = gamma_board(edge, EdgeLabeling::default_for(edge));
    const auto outer = cycle_sizes(b, CycleRole::Outer);
    CHECK(outer.at(0) == 20);
    CHECK(outer.at(1) == 21);
    CHECK(b.num_vertices() == 20 + 21 + 2 * 7 + 1);
    const auto iso = LabeledComplex::from_facets({{"a", "b"}, {"c"}},
                                                 {{"a", Player::Left}, {"b", Player::Left}, {"c", Player::Left}});
    CHECK_THROWS_AS(gamma_board(iso, EdgeLabeling::default_for(iso)), Error);
}

TEST_CASE("gamma board vertex count formula for all complexes on up to three vertices")
{
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& c : oracle::all_complexes(k)) {
            if (has_isolated_vertex(c)) continue;
            const auto lab = EdgeLabeling::default_for(c);
            const auto b = gamma_board(c, lab);
            const int n = static_cast<int>(c.num_vertices());
            int expected = 0;
            for (const auto& v : c.vertices()) expected += gamma_outer_length(n, v.part);
            expected += n * (n - 1) * (n * n * n - 1);
            for (const auto& [e, l] : lab.labels()) expected += l;
            CHECK(b.num_vertices() == expected);
        }
    }
}

TEST_CASE("cycles through connection and centre vertices only are short")
{
    // exhaustive simple-cycle search in the subgraph of connection and centre vertices
    for (std::size_t k = 2; k <= 3; ++k) {
        for (const auto& c : oracle::all_complexes(k)) {
            if (has_isolated_vertex(c)) continue;
            const auto b = gamma_board(c, EdgeLabeling::default_for(c));
            std::vector<int> keep;
            for (const auto& [v, l] : b.cycle_labels())
                if (l.role == CycleRole::Connection || l.role == CycleRole::Centre) keep.push_back(v);
            const auto sub = b.induced_subgraph(keep);
            const int bound = gamma_outer_length(static_cast<int>(k), Player::Left);
            int longest = 0;
            std::vector<char> on(static_cast<std::size_t>(sub.num_vertices()), 0);
            std::function<void(int, int, int)> walk = [&](int start, int v, int len) {
                for (int w : sub.neighbors(v)) {
                    if (w == start && len >= 3) longest = std::max(longest, len);
                    if (w > start && !on[w]) {
                        on[w] = 1;
                        walk(start, w, len + 1);
                        on[w] = 0;
                    }
                }
            };
            for (int s = 0; s < sub.num_vertices(); ++s) {
                on[s] = 1;
                walk(s, s, 1);
                on[s] = 0;
            }
            CHECK(longest < bound);
        }
    }
}

TEST_CASE("gamma piece shape")
{
    const auto left = gamma_piece_shape(3, Player::Left);
    CHECK(left.num_vertices() == 85 + 2 * 26);
    CHECK(left.is_connected());
    const auto right = gamma_piece_shape(2, Player::Right);
    CHECK(right.num_vertices() == 21 + 7);
}

TEST_CASE("edge labelling validation")
{
    const auto g = p3_gamma();
    EdgeLabeling bad({{{"a", "b"}, 1}, {{"b", "c"}, 1}});
    CHECK_THROWS_AS(bad.validate(g), Error);
    EdgeLabeling swapped({{{"a", "b"}, 2}, {{"b", "c"}, 1}});
    CHECK_NOTHROW(swapped.validate(g));
}

TEST_CASE("dot export lists every edge")
{
    const auto dot = to_dot(build_path(3));
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}
