#include "zdp/poset.hpp"

#include "zdp/errors.hpp"

#include <algorithm>

namespace zdp {

namespace {

auto default_labels(int n) -> std::vector<std::string>
{
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(std::to_string(i));
    return out;
}

void check_size(int n)
{
    if (n < 1 || n > max_elements)
        throw SizeError("poset size must be in 1.." + std::to_string(max_elements) + ", got " + std::to_string(n));
}

} // namespace

auto Poset::require_zero() const -> int
{
    if (!zero_)
        throw NoZeroError();
    return *zero_;
}

auto Poset::has_custom_labels() const -> bool { return labels_ != default_labels(n_); }

auto Poset::with_name(std::string name) const -> Poset
{
    Poset p = *this;
    p.name_ = std::move(name);
    return p;
}

auto Poset::with_labels(std::vector<std::string> labels) const -> Poset
{
    if (static_cast<int>(labels.size()) != n_)
        throw RangeError("label count " + std::to_string(labels.size()) + " does not match poset size " +
                         std::to_string(n_));
    Poset p = *this;
    p.labels_ = std::move(labels);
    return p;
}

auto Poset::covers() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (!lt(i, j))
                continue;
            // i is covered by j when nothing lies strictly between them.
            ElemSet between = (up_[i] & down_[j]) - ElemSet{i, j};
            if (between.empty())
                out.emplace_back(i, j);
        }
    return out;
}

void Poset::check_index(int i) const
{
    if (i < 0 || i >= n_)
        throw RangeError("element index " + std::to_string(i) + " out of range for poset of size " +
                         std::to_string(n_));
}

void Poset::check_subset(ElemSet a) const
{
    if (!a.subset_of(universe()))
        throw RangeError("element set is not contained in the poset universe");
}

auto poset_from_downsets(std::vector<ElemSet> downs) -> Poset
{
    const int n = static_cast<int>(downs.size());
    check_size(n);
    const ElemSet all = ElemSet::full(n);
    for (int j = 0; j < n; ++j) {
        if (!downs[j].subset_of(all))
            throw RangeError("relation mentions an element outside 0.." + std::to_string(n - 1));
        downs[j].insert(j);
    }
    for (int j = 0; j < n; ++j)
        downs[j].for_each([&](int i) {
            if (i != j && downs[i].contains(j))
                throw CycleError("elements " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are mutually related");
            if (!downs[i].subset_of(downs[j]))
                throw TransitivityError("relation is not transitive through " + std::to_string(i) + " <= " +
                                        std::to_string(j));
        });

    Poset p;
    p.n_ = n;
    p.down_ = std::move(downs);
    p.up_.assign(n, ElemSet{});
    for (int j = 0; j < n; ++j)
        p.down_[j].for_each([&](int i) { p.up_[i].insert(j); });
    for (int i = 0; i < n; ++i) {
        if (p.up_[i] == all)
            p.zero_ = i;
        if (p.down_[i] == all)
            p.top_ = i;
    }
    p.labels_ = default_labels(n);
    return p;
}

auto build_poset(int n, const std::vector<std::pair<int, int>> &relations, RelationKind kind) -> Poset
{
    check_size(n);
    std::vector<ElemSet> downs(n);
    for (int i = 0; i < n; ++i)
        downs[i].insert(i);
    for (auto [i, j] : relations) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw RangeError("relation (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range for n=" +
                             std::to_string(n));
        downs[j].insert(i);
    }
    if (kind == RelationKind::covers) {
        // Warshall closure over rows: if k <= j then everything below k is below j.
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                if (downs[j].contains(k))
                    downs[j] |= downs[k];
    }
    return poset_from_downsets(std::move(downs));
}

auto upper_cone(const Poset &p, ElemSet a) -> ElemSet
{
    p.check_subset(a);
    ElemSet out = p.universe();
    a.for_each([&](int x) { out &= p.up(x); });
    return out;
}

auto lower_cone(const Poset &p, ElemSet a) -> ElemSet
{
    p.check_subset(a);
    ElemSet out = p.universe();
    a.for_each([&](int x) { out &= p.down(x); });
    return out;
}

auto annihilator(const Poset &p, int x) -> ElemSet
{
    const int z = p.require_zero();
    p.check_index(x);
    const ElemSet zero_only = ElemSet::singleton(z);
    ElemSet out;
    for (int y = 0; y < p.size(); ++y)
        if ((p.down(x) & p.down(y)) == zero_only)
            out.insert(y);
    return out;
}

auto annihilator(const Poset &p, ElemSet a) -> ElemSet
{
    p.require_zero();
    p.check_subset(a);
    ElemSet out = p.universe();
    a.for_each([&](int x) { out &= annihilator(p, x); });
    return out;
}

auto maximum_of(const Poset &p, ElemSet a) -> std::optional<int>
{
    std::optional<int> found;
    a.for_each([&](int m) {
        if (!found && a.subset_of(p.down(m)))
            found = m;
    });
    return found;
}

auto minimum_of(const Poset &p, ElemSet a) -> std::optional<int>
{
    std::optional<int> found;
    a.for_each([&](int m) {
        if (!found && a.subset_of(p.up(m)))
            found = m;
    });
    return found;
}

auto pseudocomplement(const Poset &p, int x) -> std::optional<int>
{
    return maximum_of(p, annihilator(p, x));
}

auto is_pseudocomplemented(const Poset &p) -> bool
{
    p.require_zero();
    for (int x = 0; x < p.size(); ++x)
        if (!pseudocomplement(p, x))
            return false;
    return true;
}

auto is_zero_distributive(const Poset &p) -> bool
{
    const int z = p.require_zero();
    const ElemSet zero_only = ElemSet::singleton(z);
    const int n = p.size();
    for (int x = 0; x < n; ++x) {
        const ElemSet ann = annihilator(p, x);
        bool ok = true;
        ann.for_each([&](int y) {
            ann.for_each([&](int zz) {
                if (!ok || zz < y)
                    return;
                ElemSet bound = ElemSet::singleton(x) | upper_cone(p, ElemSet{y, zz});
                if (lower_cone(p, bound) != zero_only)
                    ok = false;
            });
        });
        if (!ok)
            return false;
    }
    return true;
}

auto meet(const Poset &p, int a, int b) -> std::optional<int>
{
    p.check_index(a);
    p.check_index(b);
    return maximum_of(p, p.down(a) & p.down(b));
}

auto join(const Poset &p, int a, int b) -> std::optional<int>
{
    p.check_index(a);
    p.check_index(b);
    return minimum_of(p, p.up(a) & p.up(b));
}

auto is_meet_semilattice(const Poset &p) -> bool
{
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            if (!meet(p, a, b))
                return false;
    return true;
}

auto is_join_semilattice(const Poset &p) -> bool
{
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            if (!join(p, a, b))
                return false;
    return true;
}

auto is_lattice(const Poset &p) -> bool { return is_meet_semilattice(p) && is_join_semilattice(p); }

auto dual(const Poset &p) -> Poset
{
    std::vector<ElemSet> downs(p.size());
    for (int i = 0; i < p.size(); ++i)
        downs[i] = p.up(i);
    Poset d = poset_from_downsets(std::move(downs)).with_labels(p.labels());
    return p.name().empty() ? d : d.with_name("dual(" + p.name() + ")");
}

auto direct_product(const Poset &p, const Poset &q) -> Poset
{
    const int m = q.size();
    const int n = p.size() * m;
    if (n > max_elements)
        throw SizeError("direct product has " + std::to_string(n) + " elements, limit is " +
                        std::to_string(max_elements));
    std::vector<ElemSet> downs(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < q.size(); ++j) {
            ElemSet d;
            p.down(i).for_each([&](int a) { q.down(j).for_each([&](int b) { d.insert(a * m + b); }); });
            downs[i * m + j] = d;
            labels[i * m + j] = "(" + p.label(i) + "," + q.label(j) + ")";
        }
    Poset out = poset_from_downsets(std::move(downs)).with_labels(std::move(labels));
    if (!p.name().empty() && !q.name().empty())
        out = out.with_name(p.name() + "x" + q.name());
    return out;
}

auto adjoin_zero(const Poset &p) -> Poset
{
    const int n = p.size() + 1;
    if (n > max_elements)
        throw SizeError("adjoining a zero exceeds the element limit");
    std::vector<ElemSet> downs(n);
    downs[0] = ElemSet::singleton(0);
    for (int j = 0; j < p.size(); ++j)
        downs[j + 1] = ElemSet((p.down(j).bits() << 1) | 1U);
    std::vector<std::string> labels{"0"};
    for (const auto &l : p.labels())
        labels.push_back(l);
    while (std::count(labels.begin() + 1, labels.end(), labels[0]) > 0)
        labels[0] += "'";
    Poset out = poset_from_downsets(std::move(downs)).with_labels(std::move(labels));
    return p.name().empty() ? out : out.with_name(p.name() + "+0");
}

auto permute(const Poset &p, const std::vector<int> &perm) -> Poset
{
    const int n = p.size();
    if (static_cast<int>(perm.size()) != n)
        throw RangeError("permutation size does not match poset");
    std::vector<int> inverse(n, -1);
    for (int i = 0; i < n; ++i) {
        p.check_index(perm[i]);
        inverse[perm[i]] = i;
    }
    if (std::count(inverse.begin(), inverse.end(), -1) > 0)
        throw RangeError("not a permutation");
    std::vector<ElemSet> downs(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        p.down(perm[i]).for_each([&](int a) { downs[i].insert(inverse[a]); });
        labels[i] = p.label(perm[i]);
    }
    return poset_from_downsets(std::move(downs)).with_labels(std::move(labels)).with_name(p.name());
}

auto chain(int k) -> Poset
{
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < k; ++i)
        rel.emplace_back(i, i + 1);
    return build_poset(k, rel, RelationKind::covers).with_name("chain" + std::to_string(k));
}

auto boolean_lattice(int k) -> Poset
{
    if (k < 0 || k > 6)
        throw SizeError("boolean lattice rank must be in 0..6");
    const int n = 1 << k;
    std::vector<ElemSet> downs(n);
    std::vector<std::string> labels(n);
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t)
            if ((t & ~s) == 0)
                downs[s].insert(t);
        if (s == 0)
            labels[s] = "0";
        else if (s == n - 1)
            labels[s] = "1";
        else
            for (int b = 0; b < k; ++b)
                if (s & (1 << b))
                    labels[s] += static_cast<char>('a' + b);
    }
    return poset_from_downsets(std::move(downs)).with_labels(std::move(labels)).with_name("B" + std::to_string(k));
}

auto antichain_with_zero(int k) -> Poset
{
    if (k < 0 || k + 1 > max_elements)
        throw SizeError("antichain size out of range");
    std::vector<std::pair<int, int>> rel;
    std::vector<std::string> labels{"0"};
    for (int i = 1; i <= k; ++i) {
        rel.emplace_back(0, i);
        labels.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + i - 1)) : "a" + std::to_string(i));
    }
    return build_poset(k + 1, rel, RelationKind::covers)
        .with_labels(std::move(labels))
        .with_name("antichain0_" + std::to_string(k));
}

auto m3() -> Poset
{
    return build_poset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, RelationKind::covers)
        .with_labels({"0", "a", "b", "c", "1"})
        .with_name("M3");
}

} // namespace zdp
