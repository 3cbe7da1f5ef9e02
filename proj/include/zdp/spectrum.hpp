#pragma once

#include "zdp/elem_set.hpp"
#include "zdp/poset.hpp"

#include <boost/dynamic_bitset.hpp>

#include <vector>

namespace zdp {

/// A set of spectrum points (prime ideals), indexed like SpectrumSpace::points.
using PointSet = boost::dynamic_bitset<>;

/**
 * Spec(P) with its Zariski topology, materialized.
 *
 * Closed sets are V(I) for every ideal I; V(P) = ∅ and V((0]) = Spec are
 * always among them. Opens are complements of closed sets.
 */
class SpectrumSpace {
public:
    explicit SpectrumSpace(const Poset &p);

    auto poset() const -> const Poset & { return poset_; }
    auto points() const -> const std::vector<ElemSet> & { return points_; }
    auto point_count() const -> int { return static_cast<int>(points_.size()); }
    auto closed_sets() const -> const std::vector<PointSet> & { return closed_; }
    auto open_sets() const -> const std::vector<PointSet> & { return open_; }
    /// Inclusion-minimal points, i.e. Min(P).
    auto min_points() const -> const PointSet & { return min_; }

    auto empty_set() const -> PointSet { return PointSet(points_.size()); }
    auto all_points() const -> PointSet { return ~empty_set(); }

    auto is_closed(const PointSet &x) const -> bool;
    auto is_open(const PointSet &x) const -> bool;

    // V(a), D(a), V'(a), D'(a) for an element; V(A) = {P : A ⊆ P} for a set.
    auto v_of(int a) const -> PointSet;
    auto d_of(int a) const -> PointSet;
    auto v_prime(int a) const -> PointSet;
    auto d_prime(int a) const -> PointSet;
    auto v_of_set(ElemSet a) const -> PointSet;
    auto v_prime_of_set(ElemSet a) const -> PointSet;

    /// V(⋂_{P∈X} P) for nonempty X; ∅ for empty X.
    auto closure(const PointSet &x) const -> PointSet;
    /// Intersection of all closed sets containing X.
    auto generic_closure(const PointSet &x) const -> PointSet;
    /// Union of all open sets contained in X.
    auto interior(const PointSet &x) const -> PointSet;

    /// Intersection of the members of X, as an element set (the universe when X is empty).
    auto intersection_of_points(const PointSet &x) const -> ElemSet;

private:
    Poset poset_;
    std::vector<ElemSet> points_;
    std::vector<PointSet> closed_;
    std::vector<PointSet> open_;
    PointSet min_;
};

auto spec(const Poset &p) -> SpectrumSpace;

struct InteriorOfV {
    /// Largest open set inside V(x).
    PointSet generic;
    /// Spec \ closure(D(x)); agrees with `generic` on class members.
    PointSet complement_of_closure_d;
};

auto interior_of_v(const SpectrumSpace &space, int x) -> InteriorOfV;

/**
 * Compactness of Min(P) under the subspace topology, checked against the
 * cover by basic opens D'(a). Every cover of a finite space is finite, so
 * this is always true here; the check extracts an explicit finite subcover.
 */
auto is_min_compact(const SpectrumSpace &space) -> bool;

/// Pairwise separation of distinct minimal points by disjoint relative opens.
auto is_min_hausdorff(const SpectrumSpace &space) -> bool;

/// ∅ and Spec are closed; closed sets are closed under pairwise union and intersection.
auto closed_set_axioms_hold(const SpectrumSpace &space) -> bool;

} // namespace zdp
