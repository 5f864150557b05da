#include "spg/engine.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace spg {

BasicPositionIndex::BasicPositionIndex(std::vector<Placement> left, std::vector<Placement> right)
{
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    left.erase(std::unique(left.begin(), left.end()), left.end());
    right.erase(std::unique(right.begin(), right.end()), right.end());
    for (std::size_t i = 0; i < left.size(); ++i) {
        entries_.push_back({"x" + std::to_string(i + 1), std::move(left[i])});
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
        entries_.push_back({"y" + std::to_string(i + 1), std::move(right[i])});
    }
    left_count_ = left.size();
}

BasicPositionIndex BasicPositionIndex::named(std::vector<BasicPosition> entries)
{
    std::sort(entries.begin(), entries.end(), [](const BasicPosition& a, const BasicPosition& b) {
        return canonical_vertex_less({a.variable, a.placement.player}, {b.variable, b.placement.player});
    });
    BasicPositionIndex idx;
    for (const auto& e : entries) {
        if (e.placement.player == Player::Left) {
            ++idx.left_count_;
        }
    }
    idx.entries_ = std::move(entries);
    return idx;
}

std::vector<Vertex> BasicPositionIndex::variables() const
{
    std::vector<Vertex> out;
    for (const auto& e : entries_) {
        out.push_back({e.variable, e.placement.player});
    }
    return out;
}

std::optional<std::size_t> BasicPositionIndex::find(const Placement& p) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].placement == p) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<std::string> BasicPositionIndex::names(VertexMask m) const
{
    std::vector<std::string> out;
    for (; m != 0; m &= m - 1) {
        out.push_back(entries_.at(static_cast<std::size_t>(__builtin_ctzll(m))).variable);
    }
    return out;
}

LabeledComplex GameAnalysis::legal_complex() const
{
    return LabeledComplex::from_masks(index.variables(), maximal_legal);
}

LabeledComplex GameAnalysis::illegal_complex() const
{
    return LabeledComplex::from_masks(index.variables(), minimal_illegal);
}

SquareFreeIdeal GameAnalysis::legal_ideal() const
{
    return SquareFreeIdeal::from_masks(index.variables(), maximal_legal);
}

SquareFreeIdeal GameAnalysis::illegal_ideal() const
{
    return SquareFreeIdeal::from_masks(index.variables(), minimal_illegal);
}

namespace {

void check_board(const Ruleset& game, const Board& board)
{
    if (game.requires_coords && !board.has_coords()) {
        throw Error(game.name + " needs a board with grid coordinates");
    }
}

std::string braces(const std::vector<std::string>& names)
{
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i ? "," : "") + names[i];
    }
    return out + "}";
}

// conflict[i] = basic positions sharing a vertex with basic position i
std::vector<VertexMask> overlap_masks(const BasicPositionIndex& index)
{
    const auto& es = index.entries();
    std::vector<VertexMask> conflict(es.size(), 0);
    std::map<int, VertexMask> at_vertex;
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (int v : es[i].placement.occupied) {
            at_vertex[v] |= bit(i);
        }
    }
    for (const auto& [v, m] : at_vertex) {
        for (VertexMask rest = m; rest != 0; rest &= rest - 1) {
            conflict[static_cast<std::size_t>(__builtin_ctzll(rest))] |= m;
        }
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
        conflict[i] &= ~bit(i);
    }
    return conflict;
}

bool position_accepted(const Ruleset& game, const Board& board, const BasicPositionIndex& index,
                       VertexMask mask)
{
    auto pos = make_position(index, mask);
    return pos && game.legal(board, *pos);
}

int highest_bit(VertexMask m)
{
    return m == 0 ? -1 : 63 - __builtin_clzll(m);
}

bool mask_order(VertexMask a, VertexMask b)
{
    if (popcount(a) != popcount(b)) {
        return popcount(a) < popcount(b);
    }
    return index_sequence_less(a, b);
}

} // namespace

std::optional<Position> make_position(const BasicPositionIndex& index, VertexMask mask)
{
    std::vector<Placement> ps;
    std::set<int> used;
    for (; mask != 0; mask &= mask - 1) {
        const auto& p = index.entries().at(static_cast<std::size_t>(__builtin_ctzll(mask))).placement;
        for (int v : p.occupied) {
            if (!used.insert(v).second) {
                return std::nullopt;
            }
        }
        ps.push_back(p);
    }
    return Position(std::move(ps));
}

BasicPositionIndex basic_positions(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    check_board(game, board);
    std::vector<Placement> left;
    std::vector<Placement> right;
    for (const auto& piece : game.left_pieces) {
        for (auto& p : piece_placements(board, piece, options.embedding)) {
            left.push_back({Player::Left, std::move(p.occupied)});
        }
    }
    for (const auto& piece : game.right_pieces) {
        for (auto& p : piece_placements(board, piece, options.embedding)) {
            right.push_back({Player::Right, std::move(p.occupied)});
        }
    }
    return BasicPositionIndex(std::move(left), std::move(right));
}

GameAnalysis analyze(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    GameAnalysis out;
    out.index = basic_positions(game, board, options);
    const std::size_t n = out.index.size();
    if (n > options.max_basic_positions || n > kMaxVertices) {
        throw Error("game has " + std::to_string(n) + " basic positions, above the cap of " +
                    std::to_string(std::min(options.max_basic_positions, kMaxVertices)));
    }
    if (!game.legal(board, Position())) {
        throw Error(game.name + " rejects the empty board");
    }
    const auto conflict = overlap_masks(out.index);

    // level-by-level closure: a position is legal iff the rules accept it and
    // every one-smaller sub-position is legal
    std::unordered_set<VertexMask> legal{0};
    std::vector<VertexMask> level{0};
    while (!level.empty()) {
        std::vector<VertexMask> next;
        for (VertexMask f : level) {
            for (std::size_t b = static_cast<std::size_t>(highest_bit(f) + 1); b < n; ++b) {
                if ((conflict[b] & f) != 0) {
                    continue;
                }
                const VertexMask c = f | bit(b);
                VertexMask missing = 0;
                for (VertexMask rest = f; rest != 0; rest &= rest - 1) {
                    const VertexMask u = rest & (~rest + 1);
                    if (legal.count(c & ~u) == 0) {
                        missing = c & ~u;
                        break;
                    }
                }
                const bool accepted = position_accepted(game, board, out.index, c);
                if (accepted && missing == 0) {
                    next.push_back(c);
                } else if (accepted && options.strict_closure) {
                    throw Error("rules of " + game.name + " accept " + braces(out.index.names(c)) +
                                " but not its sub-position " + braces(out.index.names(missing)));
                }
            }
        }
        for (VertexMask c : next) {
            legal.insert(c);
        }
        level = std::move(next);
    }

    out.legal_positions.assign(legal.begin(), legal.end());
    std::sort(out.legal_positions.begin(), out.legal_positions.end(), mask_order);

    std::set<VertexMask> minimal;
    for (std::size_t b = 0; b < n; ++b) {
        if (legal.count(bit(b)) == 0) {
            minimal.insert(bit(b));
        }
    }
    for (VertexMask f : out.legal_positions) {
        bool maximal = true;
        for (std::size_t b = 0; b < n; ++b) {
            if ((f & bit(b)) != 0) {
                continue;
            }
            const VertexMask c = f | bit(b);
            if (legal.count(c) != 0) {
                maximal = false;
                continue;
            }
            if (f == 0 || minimal.count(c) != 0) {
                continue;
            }
            bool all_sub_legal = true;
            for (VertexMask rest = c; rest != 0 && all_sub_legal; rest &= rest - 1) {
                const VertexMask u = rest & (~rest + 1);
                all_sub_legal = legal.count(c & ~u) != 0;
            }
            if (all_sub_legal) {
                minimal.insert(c);
            }
        }
        if (maximal) {
            out.maximal_legal.push_back(f);
        }
    }
    std::sort(out.maximal_legal.begin(), out.maximal_legal.end(), index_sequence_less);
    out.minimal_illegal.assign(minimal.begin(), minimal.end());
    std::sort(out.minimal_illegal.begin(), out.minimal_illegal.end(), index_sequence_less);
    return out;
}

LabeledComplex legal_complex(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    return analyze(game, board, options).legal_complex();
}

SquareFreeIdeal legal_ideal(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    return analyze(game, board, options).legal_ideal();
}

LabeledComplex illegal_complex(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    return analyze(game, board, options).illegal_complex();
}

SquareFreeIdeal illegal_ideal(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    return analyze(game, board, options).illegal_ideal();
}

ConditionReport check_condition_iv(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    ConditionReport report;
    const auto index = basic_positions(game, board, options);
    const std::size_t n = index.size();
    if (n > options.max_basic_positions || n > kMaxVertices) {
        throw Error("game has " + std::to_string(n) + " basic positions, above the cap");
    }
    if (!game.legal(board, Position())) {
        report.verdict = Verdict::Fail;
        report.witness = "the empty board is rejected";
        return report;
    }
    const auto conflict = overlap_masks(index);
    std::unordered_map<VertexMask, bool> accepted{{0, true}};
    std::vector<VertexMask> level{0};
    std::vector<VertexMask> all{0};
    while (!level.empty()) {
        std::vector<VertexMask> next;
        for (VertexMask f : level) {
            for (std::size_t b = static_cast<std::size_t>(highest_bit(f) + 1); b < n; ++b) {
                if ((conflict[b] & f) == 0) {
                    const VertexMask c = f | bit(b);
                    accepted.emplace(c, position_accepted(game, board, index, c));
                    next.push_back(c);
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    std::sort(all.begin(), all.end(), mask_order);
    report.positions_checked = all.size();
    for (VertexMask p : all) {
        if (!accepted.at(p)) {
            continue;
        }
        for (VertexMask rest = p; rest != 0; rest &= rest - 1) {
            const VertexMask sub = p & ~(rest & (~rest + 1));
            if (!accepted.at(sub)) {
                report.verdict = Verdict::Fail;
                report.witness = braces(index.names(p)) + " is accepted but its sub-position " +
                                 braces(index.names(sub)) + " is not";
                return report;
            }
        }
    }
    return report;
}

namespace {

// Legal in the reachability sense: every sub-position is accepted.
bool reachable_legal(const Ruleset& game, const Board& board, const std::vector<Placement>& ps)
{
    const std::size_t k = ps.size();
    for (VertexMask m = 0; m < bit(k); ++m) {
        std::vector<Placement> sub;
        for (std::size_t i = 0; i < k; ++i) {
            if ((m & bit(i)) != 0) {
                sub.push_back(ps[i]);
            }
        }
        if (!game.legal(board, Position(std::move(sub)))) {
            return false;
        }
    }
    return true;
}

} // namespace

InvarianceReport check_invariance(const Ruleset& game, const Board& board, std::size_t samples,
                                  std::uint64_t seed, const EngineOptions& options)
{
    InvarianceReport report;
    const auto index = basic_positions(game, board, options);
    for (const auto& e : index.entries()) {
        if (!game.legal(board, Position({e.placement}))) {
            report.all_basic_legal = false;
            report.illegal_basic.push_back(e.variable);
        }
    }
    if (!report.all_basic_legal) {
        report.counterexample = "illegal basic position " + report.illegal_basic.front();
    }

    std::mt19937_64 rng(seed);
    const std::size_t n = index.size();
    const auto conflict = n <= kMaxVertices ? overlap_masks(index) : std::vector<VertexMask>{};
    for (std::size_t s = 0; s < samples && n > 0 && n <= kMaxVertices; ++s) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) {
            order[i] = i;
        }
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t want = 1 + std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(n, 3) - 1)(rng);
        VertexMask chosen = 0;
        for (std::size_t i : order) {
            if (static_cast<std::size_t>(popcount(chosen)) == want) {
                break;
            }
            if ((conflict[i] & chosen) == 0) {
                chosen |= bit(i);
            }
        }
        // closed neighbourhood of the occupied cells
        std::set<int> region;
        std::vector<Placement> original;
        for (VertexMask rest = chosen; rest != 0; rest &= rest - 1) {
            const auto& p = index.entries()[static_cast<std::size_t>(__builtin_ctzll(rest))].placement;
            original.push_back(p);
            for (int v : p.occupied) {
                region.insert(v);
                region.insert(board.neighbors(v).begin(), board.neighbors(v).end());
            }
        }
        const std::vector<int> cells(region.begin(), region.end());
        std::map<int, int> local;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            local.emplace(cells[i], static_cast<int>(i));
        }
        const Board sub = board.induced_subgraph(cells);
        std::vector<std::vector<int>> maps;
        for_each_embedding(
            sub, board,
            [&](const std::vector<int>& image) {
                maps.push_back(image);
                return maps.size() < 256;
            },
            options.embedding);
        if (maps.empty()) {
            continue;
        }
        const auto& phi = maps[std::uniform_int_distribution<std::size_t>(0, maps.size() - 1)(rng)];
        std::vector<std::pair<int, int>> image_edges;
        for (auto [u, v] : sub.edges()) {
            image_edges.emplace_back(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)]);
        }
        const Board copy = board.subgraph(phi, image_edges);
        std::vector<Placement> local_position;
        for (const auto& p : original) {
            Placement q{p.player, {}};
            for (int v : p.occupied) {
                q.occupied.push_back(local.at(v));
            }
            std::sort(q.occupied.begin(), q.occupied.end());
            local_position.push_back(std::move(q));
        }
        ++report.samples_checked;
        const bool here = reachable_legal(game, sub, local_position);
        const bool there = reachable_legal(game, copy, local_position);
        if (here != there && report.counterexample.empty()) {
            std::string where;
            for (int v : phi) {
                where += (where.empty() ? "" : ",") + std::to_string(v);
            }
            report.counterexample = "position " + braces(index.names(chosen)) + " is " +
                                    (here ? "legal" : "illegal") + " on its neighbourhood but " +
                                    (there ? "legal" : "illegal") + " on the copy at {" + where + "}";
        }
    }
    if (!report.counterexample.empty()) {
        report.verdict = Verdict::Fail;
    } else if (report.samples_checked == 0 && samples > 0) {
        report.verdict = Verdict::Inconclusive;
    } else {
        report.verdict = Verdict::Pass;
    }
    return report;
}

} // namespace spg
