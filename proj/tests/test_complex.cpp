#include "doctest.h"
#include "oracles.hpp"
#include "spg/complex.hpp"

using namespace spg;

namespace {

LabeledComplex abbc()
{
    return LabeledComplex::from_facets({{"a", "b"}, {"b", "c"}},
                                       {{"a", Player::Left}, {"b", Player::Left}, {"c", Player::Right}});
}

PartMap all_left(std::initializer_list<const char*> names)
{
    PartMap m;
    for (const char* n : names) m[n] = Player::Left;
    return m;
}

} // namespace

TEST_CASE("from_facets normalizes containment and duplicates")
{
    const auto c = LabeledComplex::from_facets({{"a", "b"}, {"b", "c"}, {"b"}, {"b", "a"}}, all_left({"a", "b", "c"}));
    CHECK(c.facets() == std::vector<std::vector<std::string>>{{"a", "b"}, {"b", "c"}});
    CHECK(c.num_vertices() == 3);
}

TEST_CASE("empty family is the void complex")
{
    const auto c = LabeledComplex::from_facets({}, {});
    CHECK(c.is_void());
    CHECK(c.num_vertices() == 0);
    CHECK(c != LabeledComplex::empty_face_only());
}

TEST_CASE("vertex order puts the Left block first")
{
    const auto c = LabeledComplex::from_facets({{"z", "a"}, {"m"}},
                                               {{"z", Player::Left}, {"a", Player::Right}, {"m", Player::Left}});
    std::vector<std::string> names;
    for (const auto& v : c.vertices()) names.push_back(v.name);
    CHECK(names == std::vector<std::string>{"m", "z", "a"});
}

TEST_CASE("natural order sorts x2 before x10")
{
    CHECK(natural_less("x2", "x10"));
    CHECK_FALSE(natural_less("x10", "x2"));
    CHECK(natural_less("a", "b"));
}

TEST_CASE("missing part is rejected with the vertex named")
{
    try {
        LabeledComplex::from_facets({{"a", "q"}}, all_left({"a"}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("'q'") != std::string::npos);
    }
}

TEST_CASE("abbc example has three vertices and two facets")
{
    const auto c = abbc();
    CHECK(c.num_vertices() == 3);
    CHECK(c.facet_masks().size() == 2);
    CHECK(to_string(c) == "<ab, bc>");
}

TEST_CASE("faces")
{
    const auto ab = LabeledComplex::from_facets({{"a", "b"}}, all_left({"a", "b"}));
    CHECK(faces(ab).size() == 4);
    const auto a_b = LabeledComplex::from_facets({{"a"}, {"b"}}, all_left({"a", "b"}));
    CHECK(faces(a_b).size() == 3);
    CHECK(faces(abbc()).size() == 6);
    CHECK(oracle::mask_family(abbc(), faces(abbc())) == oracle::faces(abbc()));
}

TEST_CASE("dimension, purity and skeleton")
{
    const auto abc = LabeledComplex::from_facets({{"a", "b", "c"}}, all_left({"a", "b", "c"}));
    const auto sk = k_skeleton(abc, 1);
    CHECK(to_string(sk) == "<ab, ac, bc>");
    const auto mixed = LabeledComplex::from_facets({{"a", "b", "c"}, {"a", "d"}}, all_left({"a", "b", "c", "d"}));
    CHECK(dimension(mixed) == 2);
    CHECK_FALSE(is_pure(mixed));
    CHECK(is_pure(abc));
    CHECK_THROWS_AS(k_skeleton(abc, 3), Error);
    CHECK_THROWS_AS(k_skeleton(abc, -1), Error);
    CHECK(dimension(LabeledComplex()) == -1);
    CHECK(dimension(LabeledComplex::empty_face_only()) == -1);
}

TEST_CASE("minimal non-faces")
{
    const auto c = abbc();
    CHECK(oracle::mask_family(c, minimal_nonfaces(c)) == oracle::Family{{"a", "c"}});
    const auto abc = LabeledComplex::from_facets({{"a", "b", "c"}}, all_left({"a", "b", "c"}));
    CHECK(minimal_nonfaces(abc).empty());
    const auto a_b = LabeledComplex::from_facets({{"a"}, {"b"}}, all_left({"a", "b"}));
    CHECK(oracle::mask_family(a_b, minimal_nonfaces(a_b)) == oracle::minimal_nonfaces(a_b));
    CHECK(oracle::mask_family(a_b, minimal_nonfaces(a_b)) == oracle::Family{{"a", "b"}});
}

TEST_CASE("facet and Stanley-Reisner conversions")
{
    const std::vector<Vertex> vars{{"x1", Player::Left}, {"x2", Player::Left}};
    const auto ideal = SquareFreeIdeal::from_names(vars, {{"x1", "x2"}});
    CHECK(to_string(facet_complex(ideal)) == "<x1x2>");
    CHECK(to_string(sr_complex(ideal)) == "<x1, x2>");
    CHECK(sr_complex(sr_ideal(abbc())) == abbc());
    CHECK(to_string(sr_ideal(abbc())) == "(ac)");
    CHECK(to_string(facet_ideal(abbc())) == "(ab, bc)");
}

TEST_CASE("ideal generators are kept minimal")
{
    const std::vector<Vertex> vars{{"x1", Player::Left}, {"x2", Player::Left}, {"y1", Player::Right}};
    const auto ideal = SquareFreeIdeal::from_names(vars, {{"x1", "x2"}, {"x1"}, {"y1", "x2"}});
    CHECK(to_string(ideal) == "(x1, x2y1)");
    CHECK(ideal.contains(bit(0) | bit(2)));
    CHECK_FALSE(ideal.contains(bit(1)));
}

TEST_CASE("flag, simplex and isolated vertices")
{
    CHECK(is_flag(abbc()));
    const auto hollow = LabeledComplex::from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}}, all_left({"a", "b", "c"}));
    CHECK_FALSE(is_flag(hollow));
    const auto abc = LabeledComplex::from_facets({{"a", "b"}, {"c"}}, all_left({"a", "b", "c"}));
    CHECK(has_isolated_vertex(abc));
    CHECK_FALSE(has_isolated_vertex(abbc()));
    CHECK(is_simplex(LabeledComplex::from_facets({{"a", "b"}}, all_left({"a", "b"}))));
    CHECK_FALSE(is_simplex(abbc()));
}

TEST_CASE("independence complexes")
{
    LabeledGraph edge{{{"u", Player::Left}, {"v", Player::Left}}, {{"u", "v"}}};
    CHECK(to_string(independence_complex(edge)) == "<u, v>");
    LabeledGraph path{{{"u", Player::Left}, {"v", Player::Left}, {"w", Player::Left}}, {{"u", "v"}, {"v", "w"}}};
    const auto c = independence_complex(path);
    CHECK(oracle::facets_of(c) == oracle::maximal_independent_sets({"u", "v", "w"}, path.edges));
    CHECK(to_string(c) == "<uw, v>");
}

TEST_CASE("isomorphism examples")
{
    PartMap parts{{"x1", Player::Left}, {"x2", Player::Left}, {"x3", Player::Left},
                  {"y1", Player::Right}, {"y2", Player::Right}, {"y3", Player::Right}};
    const auto a = LabeledComplex::from_facets({{"x1"}, {"x2"}, {"y1"}, {"y2"}}, parts);
    const auto b = LabeledComplex::from_facets({{"x1"}, {"x3"}, {"y1"}, {"y3"}}, parts);
    CHECK(are_isomorphic(a, b).has_value());
    const auto d = LabeledComplex::from_facets({{"x2"}, {"y2"}}, parts);
    CHECK_FALSE(are_isomorphic(LabeledComplex(), d).has_value());
    CHECK_FALSE(are_isomorphic(LabeledComplex::empty_face_only(), d).has_value());

    const auto renamed = rename(abbc(), {{"a", "p"}, {"b", "q"}, {"c", "r"}});
    auto phi = are_isomorphic(abbc(), renamed);
    REQUIRE(phi.has_value());
    for (std::size_t i = 0; i < phi->size(); ++i) {
        CHECK(abbc().vertices()[i].part == renamed.vertices()[(*phi)[i]].part);
    }
}

TEST_CASE("isomorphism respects the bipartition")
{
    const auto left = LabeledComplex::from_facets({{"a"}}, {{"a", Player::Left}});
    const auto right = LabeledComplex::from_facets({{"a"}}, {{"a", Player::Right}});
    CHECK_FALSE(are_isomorphic(left, right).has_value());
}

TEST_CASE("maximal avoiding sets")
{
    // universe {0,1,2}, forbidden {0,1} and {1,2}
    const auto sets = maximal_avoiding_sets(3, {0b011, 0b110});
    CHECK(oracle::index_sets(sets) == std::set<std::set<std::size_t>>{{0, 2}, {1}});
}
