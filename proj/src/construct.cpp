#include "spg/construct.hpp"

#include <algorithm>
#include <map>

#include "spg/io.hpp"

namespace spg {

std::string to_string(ComplexKind k)
{
    return k == ComplexKind::Legal ? "legal" : "illegal";
}

RoundTripKind round_trip_kind_from_string(std::string_view s)
{
    if (s == "legal") return RoundTripKind::Legal;
    if (s == "illegal") return RoundTripKind::Illegal;
    if (s == "both") return RoundTripKind::Both;
    throw Error("unknown round-trip kind '" + std::string(s) + "' (expected legal, illegal or both)");
}

namespace {

// Basic positions named after complex vertices: vertex i sits on labelled cycle index_offset + i.
std::vector<BasicPosition> cycle_positions(const LabeledComplex& complex, const Board& board, int index_offset)
{
    std::vector<BasicPosition> out;
    for (std::size_t i = 0; i < complex.num_vertices(); ++i) {
        const auto& v = complex.vertices()[i];
        out.push_back({v.name, {v.part, labelled_cycle_vertices(board, index_offset + static_cast<int>(i))}});
    }
    return out;
}

Realization table_realization(const LabeledComplex& complex, bool legal_variant)
{
    Realization r;
    r.board = table_board(complex);
    r.game = legal_variant ? table_game_legal(complex) : table_game_illegal(complex);
    r.intended = BasicPositionIndex::named(cycle_positions(complex, r.board, 0));
    r.target = complex;
    r.kind = legal_variant ? ComplexKind::Legal : ComplexKind::Illegal;
    r.provenance = legal_variant ? "table game, legal complex" : "table game, illegal complex";
    return r;
}

std::string facet_name(const LabeledComplex& complex, VertexMask f)
{
    std::string out;
    for (const auto& name : complex.names(f)) {
        out += name;
    }
    return out;
}

} // namespace

std::pair<Realization, Realization> realize_both(const LabeledComplex& complex)
{
    return {table_realization(complex, true), table_realization(complex, false)};
}

Realization realize_illegal(const LabeledComplex& gamma)
{
    return realize_illegal(gamma, EdgeLabeling::default_for(gamma));
}

Realization realize_illegal(const LabeledComplex& gamma, const EdgeLabeling& labeling)
{
    Realization r;
    r.game = gamma_game(gamma, labeling);
    r.board = gamma_board(gamma, labeling);
    r.target = gamma;
    r.kind = ComplexKind::Illegal;
    r.gamma_order = gamma.num_vertices();
    r.intended = BasicPositionIndex::named(cycle_positions(gamma, r.board, 0));
    r.provenance = "gamma-game on gamma-board";
    return r;
}

Realization realize_legal(const LabeledComplex& complex)
{
    if (complex.is_void()) {
        throw Error("the void complex is not a legal complex: the empty board is always a legal position");
    }
    Realization r;
    r.target = complex;
    r.kind = ComplexKind::Legal;
    if (is_simplex(complex)) {
        r.board = table_board(complex);
        r.game = free_pieces(cycle_piece(3, Player::Left), cycle_piece(4, Player::Right), "free-cycles");
        r.intended = BasicPositionIndex::named(cycle_positions(complex, r.board, 0));
        r.provenance = "simplex: free cycle pieces on labelled cycles";
        return r;
    }
    const LabeledComplex gamma = facet_complex(sr_ideal(complex));
    const EdgeLabeling labeling = EdgeLabeling::default_for(gamma);
    const int n = static_cast<int>(gamma.num_vertices());
    r.game = gamma_game(gamma, labeling);
    r.gamma_order = gamma.num_vertices();

    // vertices in every facet are in no minimal non-face; each gets its own component
    std::vector<Vertex> cones;
    for (const auto& v : complex.vertices()) {
        if (!gamma.index_of(v.name)) {
            cones.push_back(v);
        }
    }
    BoardBuilder extra;
    for (std::size_t t = 0; t < cones.size(); ++t) {
        append_gamma_component(extra, n + static_cast<int>(t), n, cones[t].part, std::vector<int>(static_cast<std::size_t>(n - 1), -1));
    }
    r.board = cones.empty() ? gamma_board(gamma, labeling) : disjoint_union({gamma_board(gamma, labeling), extra.build()});

    auto entries = cycle_positions(gamma, r.board, 0);
    for (std::size_t t = 0; t < cones.size(); ++t) {
        entries.push_back({cones[t].name, {cones[t].part, labelled_cycle_vertices(r.board, n + static_cast<int>(t))}});
    }
    r.intended = BasicPositionIndex::named(std::move(entries));
    r.game.descriptor["extra_components"] = cones.size();
    r.provenance = "gamma-construction of the minimal non-faces";
    if (!cones.empty()) {
        r.provenance += " with " + std::to_string(cones.size()) + " extra component" + (cones.size() > 1 ? "s" : "");
    }
    return r;
}

Realization to_invariant(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    Realization r = realize_legal(legal_complex(game, board, options));
    r.provenance = "invariant realization of " + game.name + ": " + r.provenance;
    return r;
}

Realization to_independence(const Ruleset& game, const Board& board, const EngineOptions& options)
{
    const auto analysis = analyze(game, board, options);
    const auto gamma = analysis.illegal_complex();
    bool has_edge = false;
    for (VertexMask f : gamma.facet_masks()) {
        if (popcount(f) >= 3) {
            throw Error("illegal complex of " + game.name + " has facet " + facet_name(gamma, f) + " of size " +
                        std::to_string(popcount(f)) + "; it is not a graph");
        }
        has_edge = has_edge || popcount(f) == 2;
    }
    if (!has_edge) {
        throw Error("illegal complex of " + game.name + " has no edge; it is not a non-empty graph");
    }
    Realization r = realize_legal(analysis.legal_complex());
    r.provenance = "independence realization of " + game.name + ": " + r.provenance;
    return r;
}

RoundTripReport check_realization(const Realization& r, const VerifyBudget& budget)
{
    RoundTripReport report;
    if (r.gamma_order > budget.max_gamma_vertices) {
        report.log = "gamma-construction on " + std::to_string(r.gamma_order) + " vertices exceeds the budget of " +
                     std::to_string(budget.max_gamma_vertices) + "\n";
        return report;
    }
    EngineOptions options;
    options.max_basic_positions = budget.max_basic_positions;
    options.embedding.time_cap_seconds = budget.time_cap_seconds;
    report.log = r.provenance + ": board with " + std::to_string(r.board.num_vertices()) + " vertices, " +
                 std::to_string(r.board.num_edges()) + " edges\n";
    GameAnalysis analysis;
    try {
        analysis = analyze(r.game, r.board, options);
    } catch (const BudgetExceeded& e) {
        report.log += std::string("budget exceeded: ") + e.what() + "\n";
        return report;
    }
    std::map<std::string, std::string> names;
    for (const auto& e : analysis.index.entries()) {
        const auto at = r.intended.find(e.placement);
        if (!at) {
            report.verdict = Verdict::Fail;
            report.log += "unexpected basic position " + e.variable + " = " + to_string(e.placement) + "\n";
            return report;
        }
        names[e.variable] = r.intended.entries()[*at].variable;
    }
    if (names.size() != r.intended.size()) {
        report.verdict = Verdict::Fail;
        report.log += "engine found " + std::to_string(names.size()) + " of " +
                      std::to_string(r.intended.size()) + " intended basic positions\n";
        return report;
    }
    const auto computed = rename(r.kind == ComplexKind::Legal ? analysis.legal_complex() : analysis.illegal_complex(), names);
    report.log += "expected " + to_string(r.kind) + " complex " + to_string(r.target) + "\n";
    report.log += "computed " + to_string(r.kind) + " complex " + to_string(computed) + "\n";
    const bool both_empty = computed.num_vertices() == 0 && r.target.num_vertices() == 0;
    if (computed == r.target || both_empty) {
        report.verdict = Verdict::Pass;
    } else {
        report.verdict = Verdict::Fail;
    }
    return report;
}

namespace {

RoundTripReport combine(const RoundTripReport& a, const RoundTripReport& b)
{
    RoundTripReport out;
    out.log = a.log + b.log;
    if (a.verdict == Verdict::Fail || b.verdict == Verdict::Fail) {
        out.verdict = Verdict::Fail;
    } else if (a.verdict == Verdict::Inconclusive || b.verdict == Verdict::Inconclusive) {
        out.verdict = Verdict::Inconclusive;
    } else {
        out.verdict = Verdict::Pass;
    }
    return out;
}

RoundTripReport over_budget(std::size_t n, const VerifyBudget& budget)
{
    return {Verdict::Inconclusive, "gamma-construction on " + std::to_string(n) +
                                       " vertices exceeds the budget of " +
                                       std::to_string(budget.max_gamma_vertices) + "\n"};
}

} // namespace

RoundTripReport verify_roundtrip(RoundTripKind kind, const LabeledComplex& complex, const VerifyBudget& budget)
{
    switch (kind) {
    case RoundTripKind::Both: {
        const auto [g1, g2] = realize_both(complex);
        return combine(check_realization(g1, budget), check_realization(g2, budget));
    }
    case RoundTripKind::Illegal:
        if (complex.num_vertices() > budget.max_gamma_vertices) {
            return over_budget(complex.num_vertices(), budget);
        }
        return check_realization(realize_illegal(complex), budget);
    case RoundTripKind::Legal:
        if (!complex.is_void() && !is_simplex(complex)) {
            const auto n = facet_complex(sr_ideal(complex)).num_vertices();
            if (n > budget.max_gamma_vertices) {
                return over_budget(n, budget);
            }
        }
        return check_realization(realize_legal(complex), budget);
    }
    return {};
}

} // namespace spg
