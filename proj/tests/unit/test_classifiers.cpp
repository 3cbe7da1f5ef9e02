#include "support/oracle.hpp"

#include "zdp/classifiers.hpp"
#include "zdp/enumeration.hpp"
#include "zdp/errors.hpp"

#include "doctest.h"

using namespace zdp;

namespace {

auto statements(const ClassificationReport &r) -> std::vector<bool> { return std::vector<bool>(r.s.begin(), r.s.end()); }

} // namespace

TEST_CASE("S = {0, a, b}: complemented graph, not quasi-complemented")
{
    const auto r = classify(antichain_with_zero(2));
    CHECK(r.in_class);
    CHECK(!r.has_ac);
    CHECK(r.is_meet_semilattice);
    CHECK(!r.is_lattice);
    CHECK(statements(r) == std::vector<bool>{false, false, false, false, false, true, true, true, true});
    CHECK(r.statements[0].fails_at == 0);
}

TEST_CASE("B2 satisfies everything")
{
    const Poset b2 = boolean_lattice(2);
    const auto r = classify(b2);
    CHECK(r.in_class);
    CHECK(r.has_ac);
    CHECK(statements(r) == std::vector<bool>(9, true));
    CHECK(s4_closure_condition(b2));
    CHECK(s5_minprime_condition(b2));
    CHECK(is_weakly_quasi_complemented(b2));
}

TEST_CASE("M3: quasi-complemented outside the class")
{
    const Poset m = m3();
    const auto r = classify(m);
    CHECK(!r.in_class);
    CHECK(r.is_lattice);
    CHECK(is_quasi_complemented(m));
    CHECK(!s2_biannihilator(m));
    // a^perp = {0,b,c}; every y in it leaves c or b in the intersection.
    CHECK(!s3_orthogonal_witness(m));
    CHECK(!r.statement(6));
}

TEST_CASE("chains")
{
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        const Poset c = chain(k);
        CHECK(is_quasi_complemented(c));
        CHECK(s2_biannihilator(c));
        CHECK(s3_orthogonal_witness(c));
        CHECK(satisfies_ac(c));
    }
}

TEST_CASE("the one-element poset has no second element to pair with")
{
    const auto r = classify(chain(1));
    CHECK(!r.statement(1));
    CHECK(r.statement(2));
    CHECK(r.statement(3));
    CHECK(!r.statement(8));
    CHECK(r.statement(9));
}

TEST_CASE("a.c. examples")
{
    CHECK(!satisfies_ac(antichain_with_zero(2)));
    CHECK(satisfies_ac(boolean_lattice(2)));
    CHECK(satisfies_ac(boolean_lattice(3)));
    CHECK(satisfies_ac(direct_product(chain(3), chain(2))));
}

TEST_CASE("statements need a zero")
{
    const Poset no_zero = build_poset(2, {}, RelationKind::covers);
    CHECK_THROWS_AS(classify(no_zero), NoZeroError);
    CHECK_THROWS_AS(is_quasi_complemented(no_zero), NoZeroError);
    CHECK_THROWS_AS(satisfies_ac(no_zero), NoZeroError);
}

TEST_CASE("witnesses re-verify")
{
    for (const Poset &p : {boolean_lattice(2), m3(), chain(4), boolean_lattice(3)}) {
        const OrderAnalysis a(p);
        const auto r = classify(a);
        for (int s = 1; s <= 5; ++s)
            for (auto [x, y] : r.statements[s - 1].witnesses)
                CHECK(statement_witness_holds(a, s, x, y));
    }
}

TEST_CASE("report JSON")
{
    const auto j = report_to_json(classify(antichain_with_zero(2)));
    CHECK(j.at("in_class") == true);
    CHECK(j.at("has_ac") == false);
    CHECK(j.at("s6") == true);
    CHECK(j.at("s3") == false);
    CHECK(j.at("n") == 3);
    CHECK(j.at("witnesses").at("s1").at("fails_at") == 0);
    CHECK(j.at("witnesses").at("s6").at("pairs").size() == 2);
}

TEST_CASE("statement evaluators agree with the brute-force oracle on every poset with zero up to 6 elements")
{
    for (const Poset &p : enumerate_posets(6, Dedup::canonical)) {
        if (!p.has_zero())
            continue;
        CAPTURE(p.name());
        const auto r = classify(p);
        const oracle::ZeroDivisorGraph g(p);
        CHECK(r.in_class == oracle::in_class(p));
        CHECK(r.has_ac == oracle::ac(p));
        CHECK(r.statement(1) == oracle::s1(p));
        CHECK(r.statement(2) == oracle::s2(p));
        CHECK(r.statement(3) == oracle::s3(p));
        CHECK(r.statement(4) == oracle::s4(p));
        CHECK(r.statement(5) == oracle::s5(p));
        CHECK(r.statement(6) == g.complemented());
        CHECK(r.statement(7) == g.uniquely_complemented());
        CHECK(r.statement(8) == oracle::weakly_qc(p));
        CHECK(r.statement(9));
    }
}
