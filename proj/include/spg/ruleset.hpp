#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "spg/board.hpp"
#include "spg/complex.hpp"

namespace spg {

/// A set of pairwise vertex-disjoint placements.
class Position {
public:
    Position() = default;
    /// Throws if two placements share a vertex or a placement is empty.
    explicit Position(std::vector<Placement> placements);

    const std::vector<Placement>& placements() const { return placements_; }
    std::size_t size() const { return placements_.size(); }
    bool empty() const { return placements_.empty(); }

    /// -1 for an empty vertex, otherwise the index of the owning player (0 = Left).
    std::vector<int> occupancy(const Board& board) const;

    std::string key() const;

    friend bool operator==(const Position&, const Position&) = default;

private:
    std::vector<Placement> placements_;
};

using LegalityFn = std::function<bool(const Board&, const Position&)>;

struct Ruleset {
    std::string name;
    std::vector<Piece> left_pieces;
    std::vector<Piece> right_pieces;
    LegalityFn legal;
    bool claims_invariant = false;
    bool requires_coords = false;
    /// Machine-readable description for export.
    nlohmann::json descriptor;

    const std::vector<Piece>& pieces(Player p) const
    {
        return p == Player::Left ? left_pieces : right_pieces;
    }
};

Ruleset snort();
Ruleset col();
Ruleset nogo();
Ruleset domineering();
Ruleset free_placement();

/// Left plays `left`, Right plays `right`, every non-overlapping position is legal.
Ruleset free_pieces(const Piece& left, const Piece& right, std::string name);

/// m disjoint 3-cycles then n disjoint 4-cycles, cycle i labelled with the i-th
/// vertex of `complex` in canonical order.
Board table_board(const LabeledComplex& complex);

/// Legal iff the cycles played form a face of `complex`.
Ruleset table_game_legal(const LabeledComplex& complex);
/// Legal iff the cycles played contain no facet of `complex`.
Ruleset table_game_illegal(const LabeledComplex& complex);

struct IdSet {
    std::vector<std::string> facet;
    std::set<int> distances;

    friend bool operator==(const IdSet&, const IdSet&) = default;
};

std::vector<IdSet> id_sets(const LabeledComplex& gamma, const EdgeLabeling& labeling);

/// Illegal iff some f placements have pairwise distances (as a set) equal to the
/// id-set of an f-element facet. An empty complex gives free placement.
Ruleset gamma_game(const LabeledComplex& gamma, const EdgeLabeling& labeling);

/// Resolves "snort", "col", "nogo", "domineering", "free". File-backed rulesets are
/// resolved by the io layer.
Ruleset builtin_ruleset(std::string_view name);

} // namespace spg
