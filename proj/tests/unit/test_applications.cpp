#include "zdp/applications.hpp"
#include "zdp/classifiers.hpp"
#include "zdp/errors.hpp"
#include "zdp/semigroup.hpp"

#include "doctest.h"

#include <algorithm>

using namespace zdp;

TEST_CASE("cig of Z12 is the path (2)-(3)-(4)")
{
    // Coordinates: (i,j) is the ideal of Z4 x Z3 with i-th and j-th chain
    // positions, so (1,1) = (2), (2,0) = (3), (0,1) = (4).
    const Graph g = cig({{2, 1}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(g.index_of("(1,1)"), g.index_of("(2,0)")));
    CHECK(g.adjacent(g.index_of("(2,0)"), g.index_of("(0,1)")));
    CHECK(!g.adjacent(g.index_of("(1,1)"), g.index_of("(0,1)")));
    CHECK(is_complemented(g));
    CHECK(g == cig_direct({{2, 1}}));
}

TEST_CASE("cig of Z6 is a single edge; local rings give the empty graph")
{
    const Graph g = cig({{1, 1}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    for (int k = 1; k <= 5; ++k) {
        CHECK(cig({{k}}).vertex_count() == 0);
        CHECK(cig_is_complemented({{k}}));
    }
    CHECK(cig_is_complemented({{1, 1, 1}}));
}

TEST_CASE("cig matches the direct comaximality definition")
{
    const std::vector<std::vector<int>> specs{{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 1, 1},
                                              {3, 2}, {2, 1, 1}, {1, 1, 1, 1}, {7}, {3, 3}, {5, 1}};
    for (const auto &lengths : specs) {
        CAPTURE(lengths.size());
        CHECK(cig({lengths}) == cig_direct({lengths}));
        CHECK(cig_is_complemented({lengths}));
    }
}

TEST_CASE("artinian spec validation")
{
    CHECK_THROWS_AS(cig({{}}), RangeError);
    CHECK_THROWS_AS(cig({{0, 1}}), RangeError);
    CHECK_THROWS_AS(artinian_ideal_lattice({{63, 1}}), SizeError);
    const Poset id = artinian_ideal_lattice({{2, 1}});
    CHECK(id.size() == 6);
    CHECK(id.label(*id.zero()) == "(0,0)");
    CHECK(id.label(*id.top()) == "(2,1)");
}

TEST_CASE("comaximal graph of Z_n")
{
    const Graph z2 = cg_zn(2);
    CHECK(z2.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    const Graph z4 = cg_zn(4);
    CHECK(z4.degree(1) == 3);
    CHECK(z4.degree(3) == 3);
    CHECK(!z4.adjacent(0, 2));
    CHECK(!is_complemented(z4));
    const Graph z7 = cg_zn(7);
    CHECK(z7.edge_count() == 21);
    CHECK_THROWS_AS(cg_zn(1), RangeError);
}

TEST_CASE("component union graphs")
{
    const Graph k3 = ug_vector_space({2, 2});
    CHECK(k3.labels() == std::vector<std::string>{"01", "10", "11"});
    CHECK(k3.edge_count() == 3);
    CHECK(!is_complemented(k3));
    CHECK(!is_complemented(ug_vector_space({2, 3})));
    CHECK(!is_complemented(ug_vector_space({3, 2})));
    CHECK_THROWS_AS(ug_vector_space({4, 2}), RangeError);
    CHECK_THROWS_AS(ug_vector_space({2, 13}), SizeError);
    CHECK_THROWS_AS(ug_vector_space({2, 0}), RangeError);
}

TEST_CASE("full-support vertices form a clique joined to everything")
{
    for (VectorSpaceSpec spec : {VectorSpaceSpec{2, 3}, VectorSpaceSpec{3, 2}, VectorSpaceSpec{3, 3}, VectorSpaceSpec{5, 2}}) {
        const Graph g = ug_vector_space(spec);
        const auto full = ug_full_support_vertices(spec);
        long t = 1;
        for (int i = 0; i < spec.dim; ++i)
            t *= spec.q - 1;
        CHECK(static_cast<long>(full.size()) == t);
        for (int v : full)
            CHECK(g.degree(v) == g.vertex_count() - 1);
        // What remains is the union graph on proper supports.
        std::vector<int> rest;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (std::find(full.begin(), full.end(), v) == full.end())
                rest.push_back(v);
        CHECK(graph_join(g.induced_subgraph(rest), g.induced_subgraph(full)) == g);
    }
}

TEST_CASE("Z6 semigroup")
{
    const SemigroupTable z6 = zn_multiplicative(6);
    CHECK(sg_validate(z6).valid());
    CHECK(sg_is_reduced(z6));
    CHECK(sg_ann(z6, 2) == ElemSet{0, 3});
    CHECK(sg_satisfies_ac(z6));

    const Graph g = sg_graph(z6);
    CHECK(g.labels() == std::vector<std::string>{"2", "3", "4"});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(is_complemented(g));

    const Poset p = lagrange_roy_poset(z6);
    CHECK(is_meet_semilattice(p));
    CHECK(p.zero() == 0);
    CHECK(p.lt(0, 2));
    CHECK(p.lt(2, 4));
    CHECK(p.lt(4, 1));
    CHECK(p.lt(1, 5));
    CHECK(p.lt(3, 1));
    CHECK(!p.le(3, 2));
    CHECK(!p.le(2, 3));
    CHECK(!p.le(3, 4));
    CHECK(gamma(p) == g);
    CHECK(gamma(lagrange_roy_poset(z6, TieBreak::descending)) == g);
    CHECK(is_zero_distributive(p));
}

TEST_CASE("Z4 is not reduced")
{
    const SemigroupTable z4 = zn_multiplicative(4);
    CHECK(!sg_is_reduced(z4));
    CHECK_THROWS_AS(lagrange_roy_poset(z4), NotReducedError);
}

TEST_CASE("semigroup validation errors")
{
    SemigroupTable t = zn_multiplicative(4);
    t.mul[2][3] = 0;
    CHECK(!sg_validate(t).commutative);
    CHECK_THROWS_AS(sg_require_valid(t), CommError);

    SemigroupTable absorb = zn_multiplicative(3);
    absorb.mul[0][2] = absorb.mul[2][0] = 2;
    CHECK_THROWS_AS(sg_require_valid(absorb), SemigroupError);

    // Commutative with an absorbing 0, but (2*2)*1 = 1 while 2*(2*1) = 0.
    SemigroupTable bad{3, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 0, std::nullopt};
    CHECK(!sg_validate(bad).associative);
    CHECK_THROWS_AS(sg_require_valid(bad), AssocError);

    SemigroupTable no_zero{2, {{0, 0}, {0, 1}}, 1, std::nullopt};
    CHECK_THROWS_AS(sg_require_valid(no_zero), AbsorbError);
}

TEST_CASE("trivial semigroup and graph-free tables")
{
    const SemigroupTable two = zn_multiplicative(2);
    CHECK(sg_satisfies_ac(two));
    CHECK(sg_graph(two).vertex_count() == 0);
    CHECK(sg_graph(zn_multiplicative(5)).vertex_count() == 0);
}

TEST_CASE("a.c. can fail for a reduced semigroup")
{
    bool found = false;
    for (int n = 2; n <= 5; ++n)
        for (const auto &t : all_semigroups_with_identity(n))
            if (sg_is_reduced(t) && !sg_satisfies_ac(t)) {
                found = true;
                CHECK(!satisfies_ac(lagrange_roy_poset(t)));
            }
    CHECK(found);
}

TEST_CASE("semigroup JSON")
{
    const SemigroupTable z6 = zn_multiplicative(6);
    const SemigroupTable back = semigroup_from_json(semigroup_to_json(z6));
    CHECK(back.mul == z6.mul);
    CHECK(back.one == 1);
    CHECK_THROWS_AS(semigroup_from_json(nlohmann::json::parse(R"({"n": 2})")), ParseError);
}

TEST_CASE("identity semigroup counts")
{
    // Labeled tables on {0, 1, e}: e*e may be 0, 1 or e.
    CHECK(all_semigroups_with_identity(2).size() == 1);
    CHECK(all_semigroups_with_identity(3).size() == 3);
    CHECK_THROWS_AS(all_semigroups_with_identity(6), BudgetError);
}
