#include "zdp/spectrum.hpp"

#include "zdp/errors.hpp"
#include "zdp/substructures.hpp"

#include <algorithm>

namespace zdp {

namespace {

void sort_unique(std::vector<PointSet> &v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

SpectrumSpace::SpectrumSpace(const Poset &p) : poset_(p)
{
    p.require_zero();
    points_ = enumerate(p, FamilyKind::prime_ideal).members;
    const std::size_t m = points_.size();

    min_ = PointSet(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < m && minimal; ++j)
            if (j != i && points_[j].subset_of(points_[i]))
                minimal = false;
        min_[i] = minimal;
    }

    for (ElemSet ideal : enumerate(p, FamilyKind::ideal).members)
        closed_.push_back(v_of_set(ideal));
    closed_.push_back(empty_set());
    sort_unique(closed_);
    for (const auto &c : closed_)
        open_.push_back(~c);
    sort_unique(open_);
}

auto SpectrumSpace::is_closed(const PointSet &x) const -> bool
{
    return std::binary_search(closed_.begin(), closed_.end(), x);
}

auto SpectrumSpace::is_open(const PointSet &x) const -> bool
{
    return std::binary_search(open_.begin(), open_.end(), x);
}

auto SpectrumSpace::v_of(int a) const -> PointSet
{
    poset_.check_index(a);
    return v_of_set(ElemSet::singleton(a));
}

auto SpectrumSpace::d_of(int a) const -> PointSet { return ~v_of(a); }
auto SpectrumSpace::v_prime(int a) const -> PointSet { return v_of(a) & min_; }
auto SpectrumSpace::d_prime(int a) const -> PointSet { return d_of(a) & min_; }

auto SpectrumSpace::v_of_set(ElemSet a) const -> PointSet
{
    poset_.check_subset(a);
    PointSet out(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
        out[i] = a.subset_of(points_[i]);
    return out;
}

auto SpectrumSpace::v_prime_of_set(ElemSet a) const -> PointSet { return v_of_set(a) & min_; }

auto SpectrumSpace::intersection_of_points(const PointSet &x) const -> ElemSet
{
    ElemSet out = poset_.universe();
    for (auto i = x.find_first(); i != PointSet::npos; i = x.find_next(i))
        out &= points_[i];
    return out;
}

auto SpectrumSpace::closure(const PointSet &x) const -> PointSet
{
    if (x.none())
        return empty_set();
    return v_of_set(intersection_of_points(x));
}

auto SpectrumSpace::generic_closure(const PointSet &x) const -> PointSet
{
    PointSet out = all_points();
    for (const auto &c : closed_)
        if (x.is_subset_of(c))
            out &= c;
    return out;
}

auto SpectrumSpace::interior(const PointSet &x) const -> PointSet
{
    PointSet out = empty_set();
    for (const auto &o : open_)
        if (o.is_subset_of(x))
            out |= o;
    return out;
}

auto spec(const Poset &p) -> SpectrumSpace { return SpectrumSpace(p); }

auto interior_of_v(const SpectrumSpace &space, int x) -> InteriorOfV
{
    return InteriorOfV{space.interior(space.v_of(x)), ~space.generic_closure(space.d_of(x))};
}

auto is_min_compact(const SpectrumSpace &space) -> bool
{
    const PointSet &min = space.min_points();
    PointSet covered = space.empty_set();
    int chosen = 0;
    for (auto m = min.find_first(); m != PointSet::npos; m = min.find_next(m)) {
        if (covered[m])
            continue;
        // A basic open D'(a) containing m: any a outside the prime m.
        const ElemSet outside = space.points()[m].complement(space.poset().size());
        if (outside.empty())
            return false;
        covered |= space.d_prime(outside.first());
        ++chosen;
    }
    return min.is_subset_of(covered) && chosen <= static_cast<int>(min.count());
}

auto is_min_hausdorff(const SpectrumSpace &space) -> bool
{
    const PointSet &min = space.min_points();
    // Smallest relative open neighbourhood of each minimal point.
    std::vector<PointSet> nbhd(space.point_count());
    for (auto m = min.find_first(); m != PointSet::npos; m = min.find_next(m)) {
        PointSet n = space.all_points();
        for (const auto &o : space.open_sets())
            if (o[m])
                n &= o;
        nbhd[m] = n & min;
    }
    for (auto a = min.find_first(); a != PointSet::npos; a = min.find_next(a))
        for (auto b = min.find_next(a); b != PointSet::npos; b = min.find_next(b))
            if ((nbhd[a] & nbhd[b]).any())
                return false;
    return true;
}

auto closed_set_axioms_hold(const SpectrumSpace &space) -> bool
{
    if (!space.is_closed(space.empty_set()) || !space.is_closed(space.all_points()))
        return false;
    const auto &closed = space.closed_sets();
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i + 1; j < closed.size(); ++j)
            if (!space.is_closed(closed[i] | closed[j]) || !space.is_closed(closed[i] & closed[j]))
                return false;
    return true;
}

} // namespace zdp
