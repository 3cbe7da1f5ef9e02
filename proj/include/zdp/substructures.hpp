#pragma once

#include "zdp/elem_set.hpp"
#include "zdp/poset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zdp {

enum class FamilyKind {
    ideal,
    filter,
    semi_ideal,
    semi_filter,
    u_ideal,
    l_filter,
    prime_ideal,
    prime_filter,
    minimal_prime_ideal,
    maximal_ideal,
    maximal_u_ideal,
    maximal_filter,
    maximal_l_filter,
    prime_semi_ideal,
    minimal_prime_semi_ideal,
};

auto to_string(FamilyKind kind) -> std::string_view;
/// Inverse of to_string; throws ParseError on unknown names.
auto family_kind_from_string(std::string_view name) -> FamilyKind;

/// All members of one kind for one poset, duplicate-free, sorted lexicographically.
struct SubstructureFamily {
    FamilyKind kind;
    std::vector<ElemSet> members;

    auto size() const -> std::size_t { return members.size(); }
    auto contains(ElemSet s) const -> bool;
};

// Recognizers, by direct definition. Ideals and filters are nonempty.
auto is_semi_ideal(const Poset &p, ElemSet s) -> bool;
auto is_semi_filter(const Poset &p, ElemSet s) -> bool;
auto is_ideal(const Poset &p, ElemSet s) -> bool;
auto is_filter(const Poset &p, ElemSet s) -> bool;
auto is_u_ideal(const Poset &p, ElemSet s) -> bool;
auto is_l_filter(const Poset &p, ElemSet s) -> bool;
/// Proper ideal with {x,y}^l ⊆ I implying x ∈ I or y ∈ I.
auto is_prime_ideal(const Poset &p, ElemSet s) -> bool;
/// Proper filter with {x,y}^u ⊆ F implying x ∈ F or y ∈ F.
auto is_prime_filter(const Poset &p, ElemSet s) -> bool;
auto is_prime_u_ideal(const Poset &p, ElemSet s) -> bool;
auto is_prime_semi_ideal(const Poset &p, ElemSet s) -> bool;

/// Every nonempty down-set, in lexicographic order.
auto down_sets(const Poset &p) -> std::vector<ElemSet>;

auto enumerate(const Poset &p, FamilyKind kind) -> SubstructureFamily;

auto principal_ideal(const Poset &p, int a) -> ElemSet;
auto principal_filter(const Poset &p, int a) -> ElemSet;

/// Least ideal containing a nonempty set (fixpoint of down-closure and {a,b}^{ul}).
auto ideal_generated(const Poset &p, ElemSet a) -> ElemSet;

/// Every maximal filter is prime and every maximal l-filter is a maximal filter.
auto is_in_class_mfp_l(const Poset &p) -> bool;

auto minimal_primes(const Poset &p) -> SubstructureFamily;

/// Intersection of all members; the empty family intersects to the universe.
auto intersection_of(const Poset &p, const std::vector<ElemSet> &sets) -> ElemSet;

/// Set-rendering of an element set using the poset's labels, e.g. "{0,a}".
auto format_set(const Poset &p, ElemSet s) -> std::string;

/**
 * Id(P) under inclusion. Element i of the result is the i-th member of
 * `enumerate(p, ideal)`; labels render the ideal's members.
 */
auto ideal_lattice(const Poset &p) -> Poset;

} // namespace zdp
