#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "spg/construct.hpp"
#include "spg/gametree.hpp"

using namespace spg;

namespace {

LabeledComplex make(const std::vector<std::vector<std::string>>& facets, const std::string& left)
{
    PartMap parts;
    for (const auto& f : facets)
        for (const auto& n : f) parts[n] = left.find(n) != std::string::npos ? Player::Left : Player::Right;
    return LabeledComplex::from_facets(facets, parts);
}

VerifyBudget budget(std::size_t gamma)
{
    VerifyBudget b;
    b.max_gamma_vertices = gamma;
    b.time_cap_seconds = 600;
    return b;
}

} // namespace

TEST_CASE("cycle table constructions on single examples")
{
    const auto ab = make({{"a", "b"}}, "a");
    auto [g1, g2] = realize_both(ab);
    CHECK(g1.board.num_vertices() == 7);
    CHECK(legal_complex(g1.game, g1.board).num_vertices() == 2);
    CHECK(check_realization(g1).verdict == Verdict::Pass);
    CHECK(check_realization(g2).verdict == Verdict::Pass);

    const auto a = make({{"a"}}, "a");
    auto [h1, h2] = realize_both(a);
    CHECK(h2.board.num_vertices() == 3);
    CHECK(check_realization(h2).verdict == Verdict::Pass);
    CHECK(to_string(illegal_complex(h2.game, h2.board)) == "<x1>");

    auto [v1, v2] = realize_both(LabeledComplex());
    CHECK(v1.board.num_vertices() == 0);
    CHECK(illegal_complex(v2.game, v2.board).is_void());
}

TEST_CASE("gamma realization of the path on three vertices")
{
    const auto p3 = make({{"a", "b"}, {"b", "c"}}, "ac");
    const auto r = realize_illegal(p3);
    CHECK(r.board.num_vertices() == 415);
    CHECK(r.game.left_pieces.front().shape.num_vertices() == 85 + 52);
    CHECK(r.game.right_pieces.front().shape.num_vertices() == 86 + 52);
    CHECK(basic_positions(r.game, r.board).size() == 3);
    const auto rep = check_realization(r, budget(3));
    CHECK(rep.verdict == Verdict::Pass);
    // every basic position legal, no singleton facet
    const auto inv = check_invariance(r.game, r.board, 0, 1);
    CHECK(inv.all_basic_legal);
    CHECK_FALSE(has_isolated_vertex(illegal_complex(r.game, r.board)));
}

TEST_CASE("gamma realization of a single edge")
{
    const auto edge = make({{"a", "b"}}, "a");
    const auto r = realize_illegal(edge);
    CHECK(r.game.left_pieces.front().shape.num_vertices() == 20 + 7);
    CHECK(r.game.right_pieces.front().shape.num_vertices() == 21 + 7);
    CHECK(check_realization(r).verdict == Verdict::Pass);
}

TEST_CASE("gamma realization edge cases")
{
    const auto empty = realize_illegal(LabeledComplex());
    CHECK(empty.board.num_vertices() == 0);
    CHECK(illegal_complex(empty.game, empty.board).is_void());
    CHECK_THROWS_AS(realize_illegal(make({{"a", "b"}, {"c"}}, "abc")), Error);
}

TEST_CASE("legal realization, non-simplex case with an extra component")
{
    const auto d = make({{"a", "b"}, {"b", "c"}}, "ab");
    const auto r = realize_legal(d);
    CHECK(r.gamma_order == 2);
    // Left plays 20-cycles, Right 21-cycles, each with one 8-cycle
    CHECK(r.game.left_pieces.front().shape.num_vertices() == 27);
    CHECK(r.game.right_pieces.front().shape.num_vertices() == 28);
    // b is in every facet and gets its own component, cycle index 2
    CHECK(labelled_cycle_vertices(r.board, 2).size() == 27);
    CHECK(r.board.num_vertices() == 20 + 21 + 14 + 1 + 27);
    CHECK(check_realization(r).verdict == Verdict::Pass);
}

TEST_CASE("legal realization, simplex case")
{
    const auto d = make({{"a", "b", "c"}}, "a");
    const auto r = realize_legal(d);
    CHECK(r.board.num_vertices() == 3 + 4 + 4);
    CHECK(check_realization(r).verdict == Verdict::Pass);
    CHECK(illegal_complex(r.game, r.board).is_void());
    CHECK_THROWS_AS(realize_legal(LabeledComplex()), Error);
    CHECK(check_realization(realize_legal(LabeledComplex::empty_face_only())).verdict == Verdict::Pass);
}

TEST_CASE("invariant realization of domineering preserves the tree and value")
{
    const auto board = fixture::l_board();
    const auto r = to_invariant(domineering(), board);
    CHECK(check_realization(r).verdict == Verdict::Pass);
    const auto original = legal_complex(domineering(), board);
    const auto realized = legal_complex(r.game, r.board);
    CHECK(trees_isomorphic(build_tree(original), build_tree(realized)));
    CHECK(canonical_value(original) == canonical_value(realized));
    const auto empty = to_invariant(free_placement(), Board());
    CHECK(empty.board.num_vertices() == 0);
}

TEST_CASE("invariant realization of snort keeps the value")
{
    const auto r = to_invariant(snort(), build_path(2));
    REQUIRE(check_realization(r, budget(4)).verdict == Verdict::Pass);
    CHECK(to_string(canonical_value(legal_complex(r.game, r.board))) == "±1");
}

TEST_CASE("independence realization")
{
    const auto r = to_independence(snort(), build_path(2));
    CHECK(check_realization(r, budget(4)).verdict == Verdict::Pass);
    const auto a = analyze(r.game, r.board);
    for (VertexMask f : a.minimal_illegal) CHECK(popcount(f) == 2);
    CHECK(a.illegal_complex().facet_masks().size() == analyze(snort(), build_path(2)).minimal_illegal.size());

    try {
        to_independence(nogo(), build_path(3));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("x1x2x3") != std::string::npos);
    }
}

TEST_CASE("round trip verifier")
{
    const auto p3 = make({{"a", "b"}, {"b", "c"}}, "ac");
    CHECK(verify_roundtrip(RoundTripKind::Illegal, p3).verdict == Verdict::Pass);
    CHECK(verify_roundtrip(RoundTripKind::Legal, make({{"a", "b"}, {"b", "c"}}, "ab")).verdict == Verdict::Pass);
    const auto k4 = make({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}, "ac");
    CHECK(verify_roundtrip(RoundTripKind::Illegal, k4).verdict == Verdict::Inconclusive);
    VerifyBudget tight;
    tight.time_cap_seconds = 1e-9;
    CHECK(verify_roundtrip(RoundTripKind::Illegal, p3, tight).verdict == Verdict::Inconclusive);
    CHECK(round_trip_kind_from_string("both") == RoundTripKind::Both);
    CHECK_THROWS_AS(round_trip_kind_from_string("sideways"), Error);
}

TEST_CASE("table constructions round trip on every complex with at most three vertices")
{
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& c : oracle::all_complexes(k)) {
            CHECK(verify_roundtrip(RoundTripKind::Both, c).verdict == Verdict::Pass);
        }
    }
}

TEST_CASE("gamma round trips on every complex with two vertices and no isolated vertex")
{
    for (const auto& c : oracle::all_complexes(2)) {
        if (has_isolated_vertex(c)) continue;
        CHECK(verify_roundtrip(RoundTripKind::Illegal, c).verdict == Verdict::Pass);
    }
}
