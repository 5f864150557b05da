#pragma once

#include <string>
#include <utility>

#include "spg/board.hpp"
#include "spg/complex.hpp"
#include "spg/engine.hpp"
#include "spg/ruleset.hpp"

namespace spg {

enum class ComplexKind { Legal, Illegal };

std::string to_string(ComplexKind k);

/// A game and board built to realize `target` as their legal or illegal complex.
struct Realization {
    Ruleset game;
    Board board;
    /// Basic positions the construction intends, named after the target's vertices.
    BasicPositionIndex intended;
    LabeledComplex target;
    ComplexKind kind = ComplexKind::Legal;
    /// Number of labelled cycles the piece shape was built for; 0 without a gamma-construction.
    std::size_t gamma_order = 0;
    std::string provenance;
};

/// Shared board of one 3-cycle per Left vertex and one 4-cycle per Right
/// vertex; the first game realizes `complex` as legal complex, the second as
/// illegal complex.
std::pair<Realization, Realization> realize_both(const LabeledComplex& complex);

/// Gamma-game on the gamma-board under one shared labelling. Throws on isolated vertices.
Realization realize_illegal(const LabeledComplex& gamma);
Realization realize_illegal(const LabeledComplex& gamma, const EdgeLabeling& labeling);

/// Invariant game with legal complex `complex`: free cycle pieces on labelled
/// cycles for a simplex, otherwise the gamma-construction of the minimal
/// non-faces plus one extra component per vertex lying in every facet.
Realization realize_legal(const LabeledComplex& complex);

/// Invariant realization of the legal complex of (game, board).
Realization to_invariant(const Ruleset& game, const Board& board, const EngineOptions& options = {});

/// Realization of the legal complex of (game, board) whose illegal complex is
/// a graph. Throws naming a facet of size three or more.
Realization to_independence(const Ruleset& game, const Board& board, const EngineOptions& options = {});

struct VerifyBudget {
    /// Gamma-constructions on more vertices than this are not attempted.
    std::size_t max_gamma_vertices = 3;
    /// Wall-clock cap for each placement search.
    double time_cap_seconds = 600;
    /// Cap on basic positions for complex extraction.
    std::size_t max_basic_positions = 24;
};

struct RoundTripReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string log;
};

/// Recomputes the complex of a realization with the engine, renames basic
/// positions to the intended names and demands exact equality.
RoundTripReport check_realization(const Realization& r, const VerifyBudget& budget = {});

enum class RoundTripKind { Legal, Illegal, Both };

RoundTripKind round_trip_kind_from_string(std::string_view s);

/// Builds the matching construction and checks it. Over budget gives Inconclusive.
RoundTripReport verify_roundtrip(RoundTripKind kind, const LabeledComplex& complex,
                                 const VerifyBudget& budget = {});

} // namespace spg
