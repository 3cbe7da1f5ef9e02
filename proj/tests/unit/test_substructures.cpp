#include "support/oracle.hpp"

#include "zdp/enumeration.hpp"
#include "zdp/errors.hpp"
#include "zdp/substructures.hpp"

#include "doctest.h"

#include <algorithm>

using namespace zdp;

namespace {

auto masks(const SubstructureFamily &f) -> std::vector<oracle::Mask>
{
    std::vector<oracle::Mask> out;
    for (ElemSet s : f.members)
        out.push_back(s.bits());
    std::sort(out.begin(), out.end());
    return out;
}

auto sorted(std::vector<oracle::Mask> v) -> std::vector<oracle::Mask>
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("prime ideals of B2 are the atoms' principal ideals")
{
    const Poset b2 = boolean_lattice(2);
    const auto primes = enumerate(b2, FamilyKind::prime_ideal);
    CHECK(primes.members == std::vector<ElemSet>{ElemSet{0, 1}, ElemSet{0, 2}});
    CHECK(minimal_primes(b2).members == primes.members);
}

TEST_CASE("ideals of S")
{
    const Poset s = antichain_with_zero(2);
    const auto ideals = enumerate(s, FamilyKind::ideal);
    CHECK(ideals.members == std::vector<ElemSet>{ElemSet{0}, ElemSet{0, 1}, ElemSet{0, 1, 2}, ElemSet{0, 2}});
    CHECK(minimal_primes(s).members == std::vector<ElemSet>{ElemSet{0, 1}, ElemSet{0, 2}});
    CHECK(!is_prime_ideal(s, ElemSet{0}));
    CHECK(ideal_generated(s, ElemSet{1, 2}) == s.universe());
}

TEST_CASE("a chain has exactly one maximal filter")
{
    for (int k = 2; k <= 5; ++k) {
        const auto f = enumerate(chain(k), FamilyKind::maximal_filter);
        REQUIRE(f.size() == 1);
        CHECK(f.members[0] == principal_filter(chain(k), 1));
    }
}

TEST_CASE("principal ideals and filters")
{
    CHECK(principal_ideal(boolean_lattice(2), 3) == boolean_lattice(2).universe());
    CHECK(principal_ideal(m3(), 1) == ElemSet{0, 1});
    CHECK(principal_filter(antichain_with_zero(2), 0) == ElemSet{0, 1, 2});
    CHECK_THROWS_AS(principal_ideal(m3(), 7), RangeError);
}

TEST_CASE("class membership")
{
    CHECK(is_in_class_mfp_l(antichain_with_zero(2)));
    CHECK(!is_in_class_mfp_l(m3()));
    for (int k = 1; k <= 6; ++k)
        CHECK(is_in_class_mfp_l(chain(k)));
    CHECK_THROWS_AS(is_in_class_mfp_l(build_poset(2, {}, RelationKind::covers)), NoZeroError);
}

TEST_CASE("ideal lattice")
{
    const Poset ids = ideal_lattice(antichain_with_zero(2));
    CHECK(ids.size() == 4);
    CHECK(is_lattice(ids));
    CHECK(ids.covers().size() == 4);
    CHECK(canonical_code(ids) == canonical_code(boolean_lattice(2)));
    for (int k = 1; k <= 5; ++k)
        CHECK(canonical_code(ideal_lattice(chain(k))) == canonical_code(chain(k)));
}

TEST_CASE("family names round trip")
{
    for (auto kind : {FamilyKind::ideal, FamilyKind::maximal_l_filter, FamilyKind::minimal_prime_semi_ideal,
                      FamilyKind::maximal_u_ideal})
        CHECK(family_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(family_kind_from_string("tower"), ParseError);
}

TEST_CASE("families agree with the brute-force oracle on every poset with zero up to 6 elements")
{
    int checked = 0;
    for (const Poset &p : enumerate_posets(6, Dedup::canonical)) {
        if (!p.has_zero())
            continue;
        ++checked;
        CAPTURE(p.name());
        CHECK(masks(enumerate(p, FamilyKind::ideal)) ==
              oracle::all_subsets(p, [&](oracle::Mask s) { return oracle::is_ideal(p, s); }));
        CHECK(masks(enumerate(p, FamilyKind::filter)) ==
              oracle::all_subsets(p, [&](oracle::Mask s) { return oracle::is_filter(p, s); }));
        CHECK(masks(enumerate(p, FamilyKind::l_filter)) ==
              oracle::all_subsets(p, [&](oracle::Mask s) { return oracle::is_l_filter(p, s); }));
        CHECK(masks(enumerate(p, FamilyKind::prime_ideal)) == oracle::primes(p));
        CHECK(masks(enumerate(p, FamilyKind::prime_filter)) ==
              oracle::all_subsets(p, [&](oracle::Mask s) { return oracle::is_prime_filter(p, s); }));
        CHECK(masks(minimal_primes(p)) == sorted(oracle::minimal(oracle::primes(p))));
        CHECK(is_in_class_mfp_l(p) == oracle::in_class(p));
        CHECK(is_zero_distributive(p) == oracle::zero_distributive(p));
    }
    CHECK(checked == 88);
}
