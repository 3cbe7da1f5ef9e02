#include "zdp/errors.hpp"
#include "zdp/poset.hpp"
#include "zdp/poset_json.hpp"

#include "doctest.h"

using namespace zdp;

namespace {

// 0 < a, 0 < b1, 0 < b2 with a, b1, b2 pairwise incomparable.
auto three_atoms() -> Poset { return antichain_with_zero(3); }

} // namespace

TEST_CASE("build_poset from covers takes the transitive closure")
{
    const Poset s = build_poset(3, {{0, 1}, {0, 2}}, RelationKind::covers);
    CHECK(s.zero() == 0);
    CHECK(!s.top());
    CHECK(s.lt(0, 1));
    CHECK(!s.le(1, 2));
    CHECK(!s.le(2, 1));

    const Poset chain3 = build_poset(3, {{0, 1}, {1, 2}}, RelationKind::covers);
    CHECK(chain3.le(0, 2));
    CHECK(chain3.top() == 2);

    const Poset one = build_poset(1, {}, RelationKind::covers);
    CHECK(one.zero() == 0);
    CHECK(one.size() == 1);
}

TEST_CASE("build_poset rejects bad input")
{
    CHECK_THROWS_AS(build_poset(2, {{0, 1}, {1, 0}}, RelationKind::covers), CycleError);
    CHECK_THROWS_AS(build_poset(2, {{0, 1}, {1, 0}}, RelationKind::le), CycleError);
    CHECK_THROWS_AS(build_poset(3, {{0, 1}, {1, 2}}, RelationKind::le), TransitivityError);
    CHECK_THROWS_AS(build_poset(2, {{0, 5}}, RelationKind::le), RangeError);
    CHECK_THROWS_AS(build_poset(0, {}, RelationKind::le), SizeError);
}

TEST_CASE("M3 built from its covers")
{
    const Poset m = build_poset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, RelationKind::covers);
    CHECK(m == m3());
    CHECK(upper_cone(m, ElemSet{1, 2}) == ElemSet{4});
    CHECK(lower_cone(m, ElemSet{}) == m.universe());
    CHECK(upper_cone(m, ElemSet{}) == m.universe());
}

TEST_CASE("cones and annihilators in S = {0, a, b}")
{
    const Poset s = antichain_with_zero(2);
    CHECK(lower_cone(s, ElemSet{1, 2}) == ElemSet{0});
    CHECK(upper_cone(s, ElemSet{1, 2}).empty());
    CHECK(annihilator(s, 1) == ElemSet{0, 2});
    CHECK(annihilator(s, ElemSet{}) == s.universe());
    CHECK(annihilator(s, ElemSet{0}) == s.universe());
    CHECK(annihilator(s, annihilator(s, ElemSet{0})) == ElemSet{0});
}

TEST_CASE("annihilators in chains are trivial")
{
    const Poset c = chain(4);
    for (int x = 1; x < 4; ++x)
        CHECK(annihilator(c, x) == ElemSet{0});
}

TEST_CASE("annihilator needs a zero")
{
    const Poset two_min = build_poset(2, {}, RelationKind::covers);
    CHECK(!two_min.has_zero());
    CHECK_THROWS_AS(annihilator(two_min, 0), NoZeroError);
    CHECK_THROWS_AS(pseudocomplement(two_min, 0), NoZeroError);
    CHECK_THROWS_AS(is_zero_distributive(two_min), NoZeroError);
}

TEST_CASE("pseudocomplements")
{
    const Poset b2 = boolean_lattice(2);
    CHECK(pseudocomplement(b2, 1) == 2);
    CHECK(pseudocomplement(b2, 0) == 3);
    CHECK(pseudocomplement(antichain_with_zero(2), 0) == std::nullopt);
    // a^perp = {0, b1, b2} has two maximal elements.
    CHECK(pseudocomplement(three_atoms(), 1) == std::nullopt);
}

TEST_CASE("semilattice, lattice and pseudocomplement predicates")
{
    const Poset b2 = boolean_lattice(2);
    CHECK(is_pseudocomplemented(b2));
    CHECK(is_meet_semilattice(b2));
    CHECK(is_lattice(b2));

    const Poset s = antichain_with_zero(2);
    CHECK(!is_pseudocomplemented(s));
    CHECK(is_meet_semilattice(s));
    CHECK(!is_lattice(s));

    CHECK(!is_pseudocomplemented(m3()));
    CHECK(is_meet_semilattice(m3()));
    CHECK(is_lattice(m3()));
    CHECK(meet(m3(), 1, 2) == 0);
    CHECK(join(m3(), 1, 2) == 4);
    CHECK(join(s, 1, 2) == std::nullopt);
}

TEST_CASE("0-distributivity")
{
    CHECK(!is_zero_distributive(m3()));
    CHECK(is_zero_distributive(antichain_with_zero(2)));
    CHECK(is_zero_distributive(chain(5)));
    CHECK(is_zero_distributive(boolean_lattice(3)));
}

TEST_CASE("dual")
{
    const Poset c = chain(3);
    const Poset d = dual(c);
    CHECK(d.le(2, 0));
    CHECK(d.zero() == 2);
    CHECK(d.top() == 0);
    CHECK(dual(dual(m3())) == m3());
    const Poset b2 = boolean_lattice(2);
    CHECK(dual(b2).zero() == b2.top());
}

TEST_CASE("direct product")
{
    const Poset grid = direct_product(chain(2), chain(2));
    CHECK(grid.size() == 4);
    CHECK(is_lattice(grid));
    CHECK(grid.covers().size() == 4);
    CHECK(grid.zero().has_value());
    CHECK(grid.label(*grid.zero()) == "(0,0)");

    const Poset z12 = direct_product(chain(3), chain(2));
    CHECK(z12.size() == 6);
    CHECK(z12.covers().size() == 7);

    const Poset same = direct_product(m3(), chain(1));
    CHECK(same.size() == 5);
    CHECK(same.covers().size() == m3().covers().size());
}

TEST_CASE("adjoin_zero and permute")
{
    const Poset two = build_poset(2, {}, RelationKind::covers);
    const Poset z = adjoin_zero(two);
    CHECK(z.size() == 3);
    CHECK(z.zero() == 0);
    CHECK(z == antichain_with_zero(2));

    const Poset c = chain(3);
    const Poset r = permute(c, {2, 1, 0});
    CHECK(r.le(2, 0));
    CHECK(r.zero() == 2);
    CHECK_THROWS_AS(permute(c, {0, 0, 1}), RangeError);
}

TEST_CASE("Galois laws for cones on M3")
{
    const Poset m = m3();
    for (ElemSet::Word w = 0; w < 32; ++w) {
        const ElemSet a(w);
        CHECK(a.subset_of(lower_cone(m, upper_cone(m, a))));
        CHECK(upper_cone(m, lower_cone(m, upper_cone(m, a))) == upper_cone(m, a));
    }
}

TEST_CASE("JSON round trip")
{
    for (const Poset &p : {m3(), boolean_lattice(3), chain(1), antichain_with_zero(4)}) {
        const std::string text = serialize_poset(p);
        const Poset back = parse_poset(text);
        CHECK(back == p);
        CHECK(back.labels() == p.labels());
        CHECK(serialize_poset(back) == text);
    }
    const Poset le = parse_poset(R"({"n": 3, "kind": "le", "relations": [[0,1],[1,2],[0,2]]})");
    CHECK(le == chain(3));
    CHECK(serialize_poset(le) == R"({"kind":"covers","n":3,"relations":[[0,1],[1,2]]})");
}

TEST_CASE("JSON errors")
{
    CHECK_THROWS_AS(parse_poset("not json"), ParseError);
    CHECK_THROWS_AS(parse_poset(R"({"n": 2})"), ParseError);
    CHECK_THROWS_AS(parse_poset(R"({"n": 2, "kind": "hasse", "relations": []})"), ParseError);
    CHECK_THROWS_AS(parse_poset(R"({"n": 2, "kind": "covers", "relations": [[0,1],[1,0]]})"), CycleError);
    CHECK_THROWS_AS(parse_poset(R"({"n": 2, "kind": "covers", "relations": [], "labels": ["x"]})"), RangeError);
}
