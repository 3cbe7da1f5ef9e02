#include "support/oracle.hpp"

#include "zdp/errors.hpp"
#include "zdp/suite.hpp"

#include "doctest.h"

using namespace zdp;

namespace {

auto idx(Check c) -> std::size_t { return static_cast<std::size_t>(c); }

// Class members with a zero on 2..max_n elements, by brute force.
auto class_members(int max_n) -> long
{
    long count = 0;
    for (const Poset &p : enumerate_posets(max_n, Dedup::canonical))
        if (p.size() > 1 && p.has_zero() && oracle::in_class(p))
            ++count;
    return count;
}

} // namespace

TEST_CASE("every check passes up to four elements")
{
    SuiteConfig cfg;
    cfg.max_n = 4;
    const SuiteReport r = run_suite(cfg);
    CHECK(r.violation_count == 0);
    CHECK(r.posets_enumerated == 24);
    CHECK(r.posets_checked == 8);
    CHECK(r.skipped_trivial == 1);
    CHECK(r.skipped_no_zero == 15);
    for (const auto &t : r.tallies)
        CHECK(t.failed == 0);
    CHECK(r.tallies[idx(Check::main_s6_iff_s7)].passed == class_members(4));
    CHECK(r.tallies[idx(Check::graph_s6_iff_s7)].passed == 8);
}

TEST_CASE("threads do not change the report")
{
    SuiteConfig cfg;
    cfg.max_n = 5;
    cfg.samples = 6;
    cfg.sample_n = 7;
    cfg.seed = 11;
    const auto one = suite_report_to_json(run_suite(cfg)).dump();
    cfg.jobs = 3;
    const auto three = suite_report_to_json(run_suite(cfg)).dump();
    CHECK(one == three);
}

TEST_CASE("labeled runs agree with canonical ones on violations")
{
    SuiteConfig cfg;
    cfg.max_n = 4;
    cfg.dedup = Dedup::labeled;
    const SuiteReport r = run_suite(cfg);
    CHECK(r.posets_enumerated == 1 + 3 + 19 + 219);
    CHECK(r.violation_count == 0);
}

TEST_CASE("adjoining a zero checks every poset")
{
    SuiteConfig cfg;
    cfg.max_n = 4;
    cfg.adjoin_zero = true;
    const SuiteReport r = run_suite(cfg);
    CHECK(r.skipped_no_zero == 0);
    CHECK(r.posets_checked == 23);
    CHECK(r.violation_count == 0);
}

TEST_CASE("check names")
{
    CHECK(to_string(Check::main_s6_iff_s7) == "main.s6-s7");
    CHECK(to_string(Check::witness_reverify) == "witness.reverify");
    const auto spec = checks_from_names({"spec"});
    CHECK(spec.size() == 7);
    const auto mixed = checks_from_names({"main.s1-s5", "graph"});
    CHECK(mixed == std::vector<Check>{Check::main_s1_to_s5, Check::graph_s6_iff_s7, Check::graph_uc_literal});
    CHECK_THROWS_AS(checks_from_names({"nope"}), ParseError);
    CHECK_THROWS_AS(checks_from_names({"mai"}), ParseError);
    for (const auto &info : check_catalog())
        CHECK(checks_from_names({std::string(info.name)}) == std::vector<Check>{info.id});
}

TEST_CASE("restricting checks leaves the rest not applicable")
{
    SuiteConfig cfg;
    cfg.max_n = 4;
    cfg.checks = {Check::main_s1_to_s5};
    const SuiteReport r = run_suite(cfg);
    CHECK(r.tallies[idx(Check::main_s1_to_s5)].passed == class_members(4));
    CHECK(r.tallies[idx(Check::graph_s6_iff_s7)].passed == 0);
}

TEST_CASE("single posets")
{
    const SuiteConfig cfg;
    const PosetOutcome s = check_poset(antichain_with_zero(2), cfg);
    CHECK(s.failures.empty());
    CHECK(!s.mined[0]);
    CHECK(!s.mined[1]);
    // M3 sits outside the class yet meets both intersection conditions.
    const PosetOutcome m = check_poset(m3(), cfg);
    CHECK(m.failures.empty());
    CHECK(m.mined[static_cast<std::size_t>(Mined::finite_intersection_outside_class)]);
    CHECK(m.mined[static_cast<std::size_t>(Mined::min_intersection_outside_class)]);
    CHECK(m.status[idx(Check::main_s1_to_s5)] == PosetOutcome::Status::not_applicable);
    CHECK(m.status[idx(Check::graph_s6_iff_s7)] == PosetOutcome::Status::passed);
    CHECK_THROWS_AS(check_poset(build_poset(2, {}, RelationKind::covers), cfg), NoZeroError);
}

TEST_CASE("mined families are reported")
{
    SuiteConfig cfg;
    cfg.max_n = 5;
    const SuiteReport r = run_suite(cfg);
    CHECK(r.posets_checked == 24);
    CHECK(r.mined[0].count == 6);
    CHECK(r.mined[1].count == 6);
    const auto j = suite_report_to_json(r);
    CHECK(j.at("mined").size() == 2);
    CHECK(j.at("violations").empty());
}

TEST_CASE("configuration errors")
{
    SuiteConfig cfg;
    cfg.jobs = 0;
    CHECK_THROWS_AS(cfg.validate(), RangeError);
    cfg = SuiteConfig{};
    cfg.max_n = 9;
    CHECK_THROWS_AS(run_suite(cfg), BudgetError);
    cfg = SuiteConfig{};
    cfg.samples = 2;
    CHECK_THROWS_AS(cfg.validate(), RangeError);
}

TEST_CASE("semigroup sweep")
{
    const auto r = run_semigroup_sweep(4);
    CHECK(r.violations.empty());
    CHECK(r.tables > 0);
    CHECK(r.reduced > 0);
    CHECK(r.agreement_checks > 0);
    CHECK_THROWS_AS(run_semigroup_sweep(6), BudgetError);
}
