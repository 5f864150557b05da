#pragma once

#include "spg/board.hpp"
#include "spg/ruleset.hpp"

namespace fixture {

inline spg::Board l_board()
{
    return spg::build_grid_cells({{0, 0}, {1, 0}, {2, 0}, {2, 1}});
}

/// Neither player may place on a vertex of degree 1.
inline spg::Ruleset degree_one()
{
    spg::Ruleset r = spg::free_placement();
    r.name = "degree-1";
    r.claims_invariant = false;
    r.legal = [](const spg::Board& b, const spg::Position& pos) {
        for (const auto& p : pos.placements())
            for (int v : p.occupied)
                if (b.degree(v) == 1) return false;
        return true;
    };
    return r;
}

/// Legal iff the position has exactly two pieces (or none): not downward closed.
inline spg::Ruleset exactly_two()
{
    spg::Ruleset r = spg::free_placement();
    r.name = "exactly-2";
    r.legal = [](const spg::Board&, const spg::Position& pos) { return pos.size() == 0 || pos.size() == 2; };
    return r;
}

} // namespace fixture
