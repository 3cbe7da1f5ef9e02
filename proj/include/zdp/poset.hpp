#pragma once

#include "zdp/elem_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zdp {

enum class RelationKind { covers, le };

/**
 * A finite partial order on the indices 0..n-1.
 *
 * Stored as the principal down-set and up-set of every element, so the
 * relation matrix is available both by rows and by columns. Immutable once
 * built; all constructors go through the validating factory `build_poset`.
 */
class Poset {
public:
    auto size() const -> int { return n_; }
    auto le(int i, int j) const -> bool { return down_[j].contains(i); }
    auto lt(int i, int j) const -> bool { return i != j && le(i, j); }

    /// (a] and [a).
    auto down(int a) const -> ElemSet { return down_[a]; }
    auto up(int a) const -> ElemSet { return up_[a]; }

    auto universe() const -> ElemSet { return ElemSet::full(n_); }

    auto zero() const -> std::optional<int> { return zero_; }
    auto top() const -> std::optional<int> { return top_; }
    auto has_zero() const -> bool { return zero_.has_value(); }
    /// Index of the least element; throws NoZeroError when absent.
    auto require_zero() const -> int;

    auto name() const -> const std::string & { return name_; }
    auto labels() const -> const std::vector<std::string> & { return labels_; }
    auto label(int i) const -> const std::string & { return labels_[i]; }
    /// True when labels differ from the default "0".."n-1".
    auto has_custom_labels() const -> bool;

    auto with_name(std::string name) const -> Poset;
    auto with_labels(std::vector<std::string> labels) const -> Poset;

    /// Strict covering pairs (i, j), i covered by j, in lexicographic order.
    auto covers() const -> std::vector<std::pair<int, int>>;

    /// Same relation (labels and name are presentation only).
    friend auto operator==(const Poset &a, const Poset &b) -> bool
    {
        return a.n_ == b.n_ && a.down_ == b.down_;
    }

    void check_index(int i) const;
    void check_subset(ElemSet a) const;

private:
    friend auto build_poset(int, const std::vector<std::pair<int, int>> &, RelationKind) -> Poset;
    friend auto poset_from_downsets(std::vector<ElemSet>) -> Poset;

    int n_ = 0;
    std::vector<ElemSet> down_;
    std::vector<ElemSet> up_;
    std::optional<int> zero_;
    std::optional<int> top_;
    std::string name_;
    std::vector<std::string> labels_;
};

/// Validated poset from index pairs meaning i <= j (`le`) or i covered by j (`covers`).
auto build_poset(int n, const std::vector<std::pair<int, int>> &relations, RelationKind kind) -> Poset;

/// Poset whose element i has principal down-set downs[i]; validated like `le` input.
auto poset_from_downsets(std::vector<ElemSet> downs) -> Poset;

// Cones. The cone of the empty set is the whole universe.
auto upper_cone(const Poset &p, ElemSet a) -> ElemSet;
auto lower_cone(const Poset &p, ElemSet a) -> ElemSet;

/// A^⊥: elements y whose lower cone with every x in A is exactly {0}.
auto annihilator(const Poset &p, ElemSet a) -> ElemSet;
auto annihilator(const Poset &p, int x) -> ElemSet;

/// Greatest element of a set, if it has one.
auto maximum_of(const Poset &p, ElemSet a) -> std::optional<int>;
auto minimum_of(const Poset &p, ElemSet a) -> std::optional<int>;

auto pseudocomplement(const Poset &p, int x) -> std::optional<int>;
auto is_pseudocomplemented(const Poset &p) -> bool;
auto is_zero_distributive(const Poset &p) -> bool;

auto meet(const Poset &p, int a, int b) -> std::optional<int>;
auto join(const Poset &p, int a, int b) -> std::optional<int>;
auto is_meet_semilattice(const Poset &p) -> bool;
auto is_join_semilattice(const Poset &p) -> bool;
auto is_lattice(const Poset &p) -> bool;

auto dual(const Poset &p) -> Poset;
auto direct_product(const Poset &p, const Poset &q) -> Poset;
/// p with a fresh least element inserted at index 0 (other indices shift by one).
auto adjoin_zero(const Poset &p) -> Poset;

/// Relabels elements: result element i is p's element perm[i].
auto permute(const Poset &p, const std::vector<int> &perm) -> Poset;

// Named shapes.
auto chain(int k) -> Poset;
/// Subsets of a k-element set under inclusion.
auto boolean_lattice(int k) -> Poset;
/// A least element below k pairwise incomparable atoms.
auto antichain_with_zero(int k) -> Poset;
auto m3() -> Poset;

} // namespace zdp
