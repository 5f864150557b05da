#include "spg/ruleset.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "spg/io.hpp"

namespace spg {

Position::Position(std::vector<Placement> placements) : placements_(std::move(placements))
{
    std::sort(placements_.begin(), placements_.end());
    std::set<int> seen;
    for (const auto& p : placements_) {
        if (p.occupied.empty()) {
            throw Error("placement occupies no vertex");
        }
        for (int v : p.occupied) {
            if (!seen.insert(v).second) {
                throw Error("placements overlap at vertex " + std::to_string(v));
            }
        }
    }
}

std::vector<int> Position::occupancy(const Board& board) const
{
    std::vector<int> owner(static_cast<std::size_t>(board.num_vertices()), -1);
    for (const auto& p : placements_) {
        for (int v : p.occupied) {
            owner.at(static_cast<std::size_t>(v)) = p.player == Player::Left ? 0 : 1;
        }
    }
    return owner;
}

std::string Position::key() const
{
    std::string out;
    for (const auto& p : placements_) {
        out += to_string(p);
    }
    return out;
}

namespace {

Ruleset single_vertex_ruleset(std::string name, LegalityFn legal, bool invariant)
{
    Ruleset r;
    r.name = name;
    r.left_pieces = {single_vertex_piece(Player::Left)};
    r.right_pieces = {single_vertex_piece(Player::Right)};
    r.legal = std::move(legal);
    r.claims_invariant = invariant;
    r.descriptor = {{"name", std::move(name)}};
    return r;
}

} // namespace

Ruleset snort()
{
    return single_vertex_ruleset(
        "snort",
        [](const Board& board, const Position& pos) {
            const auto owner = pos.occupancy(board);
            for (auto [u, v] : board.edges()) {
                const int a = owner[static_cast<std::size_t>(u)];
                const int b = owner[static_cast<std::size_t>(v)];
                if (a >= 0 && b >= 0 && a != b) {
                    return false;
                }
            }
            return true;
        },
        true);
}

Ruleset col()
{
    return single_vertex_ruleset(
        "col",
        [](const Board& board, const Position& pos) {
            const auto owner = pos.occupancy(board);
            for (auto [u, v] : board.edges()) {
                const int a = owner[static_cast<std::size_t>(u)];
                if (a >= 0 && a == owner[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
            return true;
        },
        true);
}

Ruleset nogo()
{
    return single_vertex_ruleset(
        "nogo",
        [](const Board& board, const Position& pos) {
            const auto owner = pos.occupancy(board);
            std::vector<char> seen(owner.size(), 0);
            for (int start = 0; start < board.num_vertices(); ++start) {
                const int colour = owner[static_cast<std::size_t>(start)];
                if (colour < 0 || seen[static_cast<std::size_t>(start)]) {
                    continue;
                }
                // flood the monochromatic group, looking for an empty neighbour
                bool liberty = false;
                std::vector<int> stack{start};
                seen[static_cast<std::size_t>(start)] = 1;
                while (!stack.empty()) {
                    const int v = stack.back();
                    stack.pop_back();
                    for (int w : board.neighbors(v)) {
                        const int o = owner[static_cast<std::size_t>(w)];
                        if (o < 0) {
                            liberty = true;
                        } else if (o == colour && !seen[static_cast<std::size_t>(w)]) {
                            seen[static_cast<std::size_t>(w)] = 1;
                            stack.push_back(w);
                        }
                    }
                }
                if (!liberty) {
                    return false;
                }
            }
            return true;
        },
        false);
}

Ruleset domineering()
{
    Ruleset r;
    r.name = "domineering";
    r.left_pieces = {domino_piece(Player::Left)};
    r.right_pieces = {domino_piece(Player::Right)};
    r.requires_coords = true;
    r.descriptor = {{"name", "domineering"}};
    r.legal = [](const Board& board, const Position& pos) {
        if (!board.has_coords()) {
            throw Error("domineering needs a board with grid coordinates");
        }
        for (const auto& p : pos.placements()) {
            if (p.occupied.size() != 2) {
                return false;
            }
            const Coord a = board.coord(p.occupied[0]);
            const Coord b = board.coord(p.occupied[1]);
            const bool vertical = a.col == b.col && std::abs(a.row - b.row) == 1;
            const bool horizontal = a.row == b.row && std::abs(a.col - b.col) == 1;
            if ((p.player == Player::Left && !vertical) || (p.player == Player::Right && !horizontal)) {
                return false;
            }
        }
        return true;
    };
    return r;
}

Ruleset free_placement()
{
    return single_vertex_ruleset("free", [](const Board&, const Position&) { return true; }, true);
}

Ruleset free_pieces(const Piece& left, const Piece& right, std::string name)
{
    Ruleset r;
    r.name = name;
    r.left_pieces = {left};
    r.right_pieces = {right};
    r.legal = [](const Board&, const Position&) { return true; };
    r.claims_invariant = true;
    r.descriptor = {{"name", std::move(name)},
                    {"left_piece", board_to_json(left.shape)},
                    {"right_piece", board_to_json(right.shape)}};
    return r;
}

Board table_board(const LabeledComplex& complex)
{
    BoardBuilder b;
    for (std::size_t i = 0; i < complex.num_vertices(); ++i) {
        const int len = complex.vertices()[i].part == Player::Left ? 3 : 4;
        std::vector<int> cyc;
        const int first = b.add_vertices(len);
        for (int k = 0; k < len; ++k) {
            cyc.push_back(first + k);
            b.label(first + k, {static_cast<int>(i), CycleRole::Outer, -1, -1});
        }
        b.add_cycle(cyc);
    }
    return b.build();
}

namespace {

// Maps each placement to the complex vertex of its labelled cycle; nullopt if
// some placement strays off the labelled cycles or onto the wrong player's cycle.
std::optional<VertexMask> cycles_played(const LabeledComplex& complex, const Board& board,
                                        const Position& pos)
{
    VertexMask m = 0;
    for (const auto& p : pos.placements()) {
        int cycle = -1;
        for (int v : p.occupied) {
            const auto l = board.cycle_label(v);
            if (!l || l->cycle < 0 || l->role == CycleRole::Centre || (cycle >= 0 && l->cycle != cycle)) {
                return std::nullopt;
            }
            cycle = l->cycle;
        }
        if (cycle >= static_cast<int>(complex.num_vertices()) ||
            complex.vertices()[static_cast<std::size_t>(cycle)].part != p.player) {
            return std::nullopt;
        }
        m |= bit(static_cast<std::size_t>(cycle));
    }
    return m;
}

Ruleset table_game(const LabeledComplex& complex, bool legal_variant)
{
    Ruleset r;
    r.name = legal_variant ? "table-legal" : "table-illegal";
    r.left_pieces = {cycle_piece(3, Player::Left)};
    r.right_pieces = {cycle_piece(4, Player::Right)};
    r.descriptor = {{"name", r.name}, {"complex", complex_to_json(complex)}};
    auto shared = std::make_shared<const LabeledComplex>(complex);
    if (legal_variant) {
        r.legal = [shared](const Board& board, const Position& pos) {
            if (pos.size() == 0) {
                return true;
            }
            const auto m = cycles_played(*shared, board, pos);
            return m && shared->contains_face(*m);
        };
    } else {
        r.legal = [shared](const Board& board, const Position& pos) {
            if (pos.size() == 0) {
                return true;
            }
            const auto m = cycles_played(*shared, board, pos);
            if (!m) {
                return false;
            }
            const auto& fs = shared->facet_masks();
            return std::none_of(fs.begin(), fs.end(), [&](VertexMask f) { return is_subset(f, *m); });
        };
    }
    return r;
}

} // namespace

Ruleset table_game_legal(const LabeledComplex& complex)
{
    return table_game(complex, true);
}

Ruleset table_game_illegal(const LabeledComplex& complex)
{
    return table_game(complex, false);
}

std::vector<IdSet> id_sets(const LabeledComplex& gamma, const EdgeLabeling& labeling)
{
    if (has_isolated_vertex(gamma)) {
        throw Error("id-sets need a complex without isolated vertices");
    }
    labeling.validate(gamma);
    std::vector<IdSet> out;
    for (VertexMask f : gamma.facet_masks()) {
        IdSet s;
        s.facet = gamma.names(f);
        for (std::size_t a = 0; a < s.facet.size(); ++a) {
            for (std::size_t b = a + 1; b < s.facet.size(); ++b) {
                s.distances.insert(labeling.label(s.facet[a], s.facet[b]) + 1);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

Ruleset gamma_game(const LabeledComplex& gamma, const EdgeLabeling& labeling)
{
    if (gamma.is_void() || gamma.num_vertices() == 0) {
        Ruleset r = free_placement();
        r.name = "gamma";
        r.descriptor = {{"name", "gamma"}, {"complex", complex_to_json(gamma)}};
        return r;
    }
    const auto sets = id_sets(gamma, labeling);
    const int n = static_cast<int>(gamma.num_vertices());
    Ruleset r;
    r.name = "gamma";
    r.left_pieces = {gamma_piece(n, Player::Left)};
    r.right_pieces = {gamma_piece(n, Player::Right)};
    r.claims_invariant = true;
    r.descriptor = {{"name", "gamma"},
                    {"complex", complex_to_json(gamma)},
                    {"labeling", labeling_to_json(labeling)}};
    struct Rule {
        std::size_t size;
        std::set<int> distances;
    };
    std::vector<Rule> rules;
    for (const auto& s : sets) {
        rules.push_back({s.facet.size(), s.distances});
    }
    r.legal = [rules](const Board& board, const Position& pos) {
        const auto& ps = pos.placements();
        const std::size_t k = ps.size();
        if (k < 2) {
            return true;
        }
        std::vector<std::vector<int>> dist(k, std::vector<int>(k, -1));
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                const auto d = distance(board, ps[a].occupied, ps[b].occupied);
                dist[a][b] = dist[b][a] = d ? *d : -1;
            }
        }
        for (const auto& rule : rules) {
            if (rule.size > k || rule.size > 64) {
                continue;
            }
            // every rule.size-subset of the placements
            std::vector<std::size_t> pick(rule.size);
            auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> bool {
                if (depth == rule.size) {
                    std::set<int> ds;
                    for (std::size_t a = 0; a < depth; ++a) {
                        for (std::size_t b = a + 1; b < depth; ++b) {
                            ds.insert(dist[pick[a]][pick[b]]);
                        }
                    }
                    return ds == rule.distances;
                }
                for (std::size_t i = from; i < k; ++i) {
                    pick[depth] = i;
                    if (self(self, depth + 1, i + 1)) {
                        return true;
                    }
                }
                return false;
            };
            if (rec(rec, 0, 0)) {
                return false;
            }
        }
        return true;
    };
    return r;
}

Ruleset builtin_ruleset(std::string_view name)
{
    if (name == "snort") return snort();
    if (name == "col") return col();
    if (name == "nogo") return nogo();
    if (name == "domineering") return domineering();
    if (name == "free") return free_placement();
    throw Error("unknown ruleset '" + std::string(name) + "'");
}

} // namespace spg
