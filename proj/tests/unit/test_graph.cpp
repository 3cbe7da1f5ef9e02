#include "support/oracle.hpp"

#include "zdp/enumeration.hpp"
#include "zdp/errors.hpp"
#include "zdp/graph.hpp"

#include "doctest.h"

using namespace zdp;

namespace {

auto path3() -> Graph
{
    Graph g({"u", "v", "w"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

} // namespace

TEST_CASE("gamma of the small named posets")
{
    const Graph s = gamma(antichain_with_zero(2));
    CHECK(s.labels() == std::vector<std::string>{"a", "b"});
    CHECK(s.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(gamma(chain(5)).vertex_count() == 0);
    const Graph m = gamma(m3());
    CHECK(m.vertex_count() == 3);
    CHECK(m.edge_count() == 3);
    // Same shape as K3 but equality is by label.
    CHECK_FALSE(m == complete_graph(3));
    CHECK_THROWS_AS(gamma(build_poset(2, {}, RelationKind::covers)), NoZeroError);
}

TEST_CASE("complement pairs")
{
    const Graph s = gamma(antichain_with_zero(2));
    CHECK(is_complement_pair(s, "a", "b"));
    const Graph k3 = complete_graph(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(!is_complement_pair(k3, a, b));
    const Graph p = path3();
    CHECK(is_complement_pair(p, "u", "v"));
    CHECK(is_complement_pair(p, "v", "u"));
    CHECK(!is_complement_pair(p, "u", "w"));
    CHECK(complements_of(p, 1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(is_complement_pair(p, "u", "zz"), UnknownVertex);
}

TEST_CASE("complemented and uniquely complemented")
{
    const Graph s = gamma(antichain_with_zero(2));
    CHECK(is_complemented(s));
    CHECK(is_uniquely_complemented(s));
    CHECK(!is_complemented(complete_graph(3)));
    CHECK(!is_uniquely_complemented(complete_graph(3)));
    CHECK(is_complemented(Graph{}));
    CHECK(is_uniquely_complemented(Graph{}));
    const Graph p = path3();
    CHECK(is_complemented(p));
    CHECK(is_uniquely_complemented(p));
    CHECK(is_uniquely_complemented_literal(p));

    // 4-cycle: both complements of a vertex are its two neighbours, which
    // share a neighbourhood.
    Graph c4({"0", "1", "2", "3"});
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK(is_complemented(c4));
    CHECK(is_uniquely_complemented(c4));

    // Path on four vertices: a-b-c-d. b has complements a and c with
    // different neighbourhoods.
    Graph p4({"a", "b", "c", "d"});
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(is_complemented(p4));
    CHECK(!is_uniquely_complemented(p4));
    CHECK(!is_uniquely_complemented_literal(p4));
}

TEST_CASE("graph construction errors")
{
    Graph g({"x", "y"});
    CHECK_THROWS_AS(g.add_edge(0, 0), RangeError);
    CHECK_THROWS_AS(g.add_edge(0, 2), RangeError);
    CHECK_THROWS_AS(g.index_of("q"), UnknownVertex);
}

TEST_CASE("complement, join and complete graphs")
{
    CHECK(graph_complement(complete_graph(3)).edge_count() == 0);
    const Graph p = path3();
    CHECK(graph_complement(graph_complement(p)) == p);

    Graph edge({"a", "b"});
    edge.add_edge(0, 1);
    const Graph tri = graph_join(edge, complete_graph(1));
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);

    const Graph j = graph_join(p, edge);
    for (int v = 0; v < p.vertex_count(); ++v)
        CHECK(j.degree(v) == p.degree(v) + edge.vertex_count());

    const Graph clash = graph_join(edge, edge);
    CHECK(clash.labels() == std::vector<std::string>{"a", "b", "a'", "b'"});
}

TEST_CASE("DOT export")
{
    CHECK(to_dot(path3(), "P") == "graph \"P\" {\n  \"u\";\n  \"v\";\n  \"w\";\n  \"u\" -- \"v\";\n  \"v\" -- \"w\";\n}\n");
    Graph q({"say \"hi\""});
    CHECK(to_dot(q).find("\"say \\\"hi\\\"\"") != std::string::npos);
}

TEST_CASE("gamma and its complement predicates agree with the oracle on every poset with zero up to 6 elements")
{
    for (const Poset &p : enumerate_posets(6, Dedup::canonical)) {
        if (!p.has_zero())
            continue;
        CAPTURE(p.name());
        const Graph g = gamma(p);
        const oracle::ZeroDivisorGraph ref(p);
        const auto verts = gamma_vertices(p);
        oracle::Mask vmask = 0;
        for (int v : verts)
            vmask |= oracle::bit(v);
        CHECK(vmask == ref.vertices);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = 0; b < verts.size(); ++b)
                CHECK(g.adjacent(static_cast<int>(a), static_cast<int>(b)) == oracle::has(ref.adj[verts[a]], verts[b]));
        CHECK(is_complemented(g) == ref.complemented());
        CHECK(is_uniquely_complemented(g) == ref.uniquely_complemented());
        CHECK(is_uniquely_complemented_literal(g) == ref.uniquely_complemented());
    }
}
