#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spg/board.hpp"
#include "spg/complex.hpp"
#include "spg/ruleset.hpp"

namespace spg {

struct BasicPosition {
    std::string variable;
    Placement placement;
};

/// Basic positions of a game on a board: Left placements (x1..xm) then Right
/// placements (y1..yn), each block in occupied-set order.
class BasicPositionIndex {
public:
    BasicPositionIndex() = default;
    BasicPositionIndex(std::vector<Placement> left, std::vector<Placement> right);
    /// Custom variable names; entries are reordered canonically by (player, name).
    static BasicPositionIndex named(std::vector<BasicPosition> entries);

    const std::vector<BasicPosition>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t left_count() const { return left_count_; }
    std::vector<Vertex> variables() const;
    std::optional<std::size_t> find(const Placement& p) const;
    std::vector<std::string> names(VertexMask m) const;

private:
    std::vector<BasicPosition> entries_;
    std::size_t left_count_ = 0;
};

struct EngineOptions {
    /// Refuse complex extraction above this many basic positions.
    std::size_t max_basic_positions = 24;
    /// Raise on positions the rules accept although a sub-position is illegal.
    bool strict_closure = true;
    EmbeddingBudget embedding;
};

/// Legal and minimal illegal positions of a game on a board, as masks over the index.
///
/// Combinations whose placements overlap are not positions; they count as
/// illegal, so a pair of overlapping basic positions that are each legal is a
/// minimal illegal position.
struct GameAnalysis {
    BasicPositionIndex index;
    std::vector<VertexMask> legal_positions;
    std::vector<VertexMask> maximal_legal;
    std::vector<VertexMask> minimal_illegal;

    LabeledComplex legal_complex() const;
    LabeledComplex illegal_complex() const;
    SquareFreeIdeal legal_ideal() const;
    SquareFreeIdeal illegal_ideal() const;
};

BasicPositionIndex basic_positions(const Ruleset& game, const Board& board,
                                   const EngineOptions& options = {});

GameAnalysis analyze(const Ruleset& game, const Board& board, const EngineOptions& options = {});

LabeledComplex legal_complex(const Ruleset& game, const Board& board, const EngineOptions& options = {});
SquareFreeIdeal legal_ideal(const Ruleset& game, const Board& board, const EngineOptions& options = {});
LabeledComplex illegal_complex(const Ruleset& game, const Board& board, const EngineOptions& options = {});
SquareFreeIdeal illegal_ideal(const Ruleset& game, const Board& board, const EngineOptions& options = {});

/// Builds the position for a set of basic positions; nullopt if placements overlap.
std::optional<Position> make_position(const BasicPositionIndex& index, VertexMask mask);

struct ConditionReport {
    Verdict verdict = Verdict::Pass;
    std::size_t positions_checked = 0;
    std::string witness;
};

/// Exhaustively checks that the legality predicate is downward closed: whenever
/// the rules accept a position they accept every sub-position.
ConditionReport check_condition_iv(const Ruleset& game, const Board& board,
                                   const EngineOptions& options = {});

struct InvarianceReport {
    Verdict verdict = Verdict::Inconclusive;
    bool all_basic_legal = true;
    std::vector<std::string> illegal_basic;
    std::size_t samples_checked = 0;
    std::string counterexample;
};

/// Part (a) is exact: every basic position must be legal. Part (b) samples
/// positions, takes the closed neighbourhood of the occupied cells as a
/// sub-board, maps it elsewhere by a random embedding and compares legality
/// of the position on both copies. Only a partial verifier: invariance
/// quantifies over all boards.
InvarianceReport check_invariance(const Ruleset& game, const Board& board, std::size_t samples,
                                  std::uint64_t seed, const EngineOptions& options = {});

} // namespace spg
