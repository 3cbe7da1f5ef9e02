#include "zdp/substructures.hpp"

#include "zdp/errors.hpp"

#include <algorithm>
#include <array>

namespace zdp {

namespace {

constexpr std::array kind_names{
    std::pair{FamilyKind::ideal, "ideal"},
    std::pair{FamilyKind::filter, "filter"},
    std::pair{FamilyKind::semi_ideal, "semi_ideal"},
    std::pair{FamilyKind::semi_filter, "semi_filter"},
    std::pair{FamilyKind::u_ideal, "u_ideal"},
    std::pair{FamilyKind::l_filter, "l_filter"},
    std::pair{FamilyKind::prime_ideal, "prime_ideal"},
    std::pair{FamilyKind::prime_filter, "prime_filter"},
    std::pair{FamilyKind::minimal_prime_ideal, "minimal_prime_ideal"},
    std::pair{FamilyKind::maximal_ideal, "maximal_ideal"},
    std::pair{FamilyKind::maximal_u_ideal, "maximal_u_ideal"},
    std::pair{FamilyKind::maximal_filter, "maximal_filter"},
    std::pair{FamilyKind::maximal_l_filter, "maximal_l_filter"},
    std::pair{FamilyKind::prime_semi_ideal, "prime_semi_ideal"},
    std::pair{FamilyKind::minimal_prime_semi_ideal, "minimal_prime_semi_ideal"},
};

auto is_down_set(const Poset &p, ElemSet s) -> bool
{
    bool ok = true;
    s.for_each([&](int x) { ok = ok && p.down(x).subset_of(s); });
    return ok;
}

auto is_up_set(const Poset &p, ElemSet s) -> bool
{
    bool ok = true;
    s.for_each([&](int x) { ok = ok && p.up(x).subset_of(s); });
    return ok;
}

auto proper(const Poset &p, ElemSet s) -> bool { return !s.empty() && s != p.universe(); }

// For every pair x, y outside s the cone `cone({x,y})` must escape s.
template <typename Cone>
auto prime_condition(const Poset &p, ElemSet s, Cone cone) -> bool
{
    const ElemSet outside = s.complement(p.size());
    bool ok = true;
    outside.for_each([&](int x) {
        outside.for_each([&](int y) {
            if (ok && y >= x && cone(ElemSet{x, y}).subset_of(s))
                ok = false;
        });
    });
    return ok;
}

auto sorted_unique(std::vector<ElemSet> v) -> std::vector<ElemSet>
{
    std::sort(v.begin(), v.end(), LexLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

auto inclusion_minimal(const std::vector<ElemSet> &v) -> std::vector<ElemSet>
{
    std::vector<ElemSet> out;
    for (ElemSet a : v) {
        bool minimal = std::none_of(v.begin(), v.end(), [&](ElemSet b) { return b != a && b.subset_of(a); });
        if (minimal)
            out.push_back(a);
    }
    return out;
}

auto inclusion_maximal(const std::vector<ElemSet> &v) -> std::vector<ElemSet>
{
    std::vector<ElemSet> out;
    for (ElemSet a : v) {
        bool maximal = std::none_of(v.begin(), v.end(), [&](ElemSet b) { return b != a && a.subset_of(b); });
        if (maximal)
            out.push_back(a);
    }
    return out;
}

template <typename Pred>
auto filter_sets(const std::vector<ElemSet> &v, Pred pred) -> std::vector<ElemSet>
{
    std::vector<ElemSet> out;
    std::copy_if(v.begin(), v.end(), std::back_inserter(out), pred);
    return out;
}

auto complements(const Poset &p, const std::vector<ElemSet> &v) -> std::vector<ElemSet>
{
    std::vector<ElemSet> out;
    out.reserve(v.size());
    for (ElemSet s : v)
        out.push_back(s.complement(p.size()));
    return out;
}

// Elements sorted along a linear extension: strict order implies a strictly
// smaller principal down-set.
auto linear_extension(const Poset &p) -> std::vector<int>
{
    std::vector<int> order(p.size());
    for (int i = 0; i < p.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.down(a).size() < p.down(b).size(); });
    return order;
}

void collect_down_sets(const Poset &p, const std::vector<int> &order, std::size_t k, ElemSet cur,
                       std::vector<ElemSet> &out)
{
    if (k == order.size()) {
        if (!cur.empty())
            out.push_back(cur);
        return;
    }
    const int e = order[k];
    collect_down_sets(p, order, k + 1, cur, out);
    if ((p.down(e) - ElemSet::singleton(e)).subset_of(cur))
        collect_down_sets(p, order, k + 1, cur | ElemSet::singleton(e), out);
}

} // namespace

auto to_string(FamilyKind kind) -> std::string_view
{
    for (auto [k, name] : kind_names)
        if (k == kind)
            return name;
    return "unknown";
}

auto family_kind_from_string(std::string_view name) -> FamilyKind
{
    for (auto [k, n] : kind_names)
        if (n == name)
            return k;
    throw ParseError("unknown substructure kind '" + std::string(name) + "'");
}

auto SubstructureFamily::contains(ElemSet s) const -> bool
{
    return std::find(members.begin(), members.end(), s) != members.end();
}

auto is_semi_ideal(const Poset &p, ElemSet s) -> bool
{
    p.check_subset(s);
    return !s.empty() && is_down_set(p, s);
}

auto is_semi_filter(const Poset &p, ElemSet s) -> bool
{
    p.check_subset(s);
    return !s.empty() && is_up_set(p, s);
}

auto is_ideal(const Poset &p, ElemSet s) -> bool
{
    if (!is_semi_ideal(p, s))
        return false;
    bool ok = true;
    s.for_each([&](int a) {
        s.for_each([&](int b) {
            if (ok && b > a && !lower_cone(p, upper_cone(p, ElemSet{a, b})).subset_of(s))
                ok = false;
        });
    });
    return ok;
}

auto is_filter(const Poset &p, ElemSet s) -> bool
{
    if (!is_semi_filter(p, s))
        return false;
    bool ok = true;
    s.for_each([&](int a) {
        s.for_each([&](int b) {
            if (ok && b > a && !upper_cone(p, lower_cone(p, ElemSet{a, b})).subset_of(s))
                ok = false;
        });
    });
    return ok;
}

auto is_u_ideal(const Poset &p, ElemSet s) -> bool
{
    if (!is_ideal(p, s))
        return false;
    bool ok = true;
    s.for_each([&](int x) {
        s.for_each([&](int y) {
            if (ok && y > x && !upper_cone(p, ElemSet{x, y}).intersects(s))
                ok = false;
        });
    });
    return ok;
}

auto is_l_filter(const Poset &p, ElemSet s) -> bool
{
    if (!is_filter(p, s))
        return false;
    bool ok = true;
    s.for_each([&](int x) {
        s.for_each([&](int y) {
            if (ok && y > x && !lower_cone(p, ElemSet{x, y}).intersects(s))
                ok = false;
        });
    });
    return ok;
}

auto is_prime_ideal(const Poset &p, ElemSet s) -> bool
{
    return proper(p, s) && is_ideal(p, s) && prime_condition(p, s, [&](ElemSet a) { return lower_cone(p, a); });
}

auto is_prime_filter(const Poset &p, ElemSet s) -> bool
{
    return proper(p, s) && is_filter(p, s) && prime_condition(p, s, [&](ElemSet a) { return upper_cone(p, a); });
}

auto is_prime_u_ideal(const Poset &p, ElemSet s) -> bool { return is_prime_ideal(p, s) && is_u_ideal(p, s); }

auto is_prime_semi_ideal(const Poset &p, ElemSet s) -> bool
{
    return proper(p, s) && is_semi_ideal(p, s) &&
           prime_condition(p, s, [&](ElemSet a) { return lower_cone(p, a); });
}

auto down_sets(const Poset &p) -> std::vector<ElemSet>
{
    std::vector<ElemSet> out;
    collect_down_sets(p, linear_extension(p), 0, ElemSet{}, out);
    return sorted_unique(std::move(out));
}

auto enumerate(const Poset &p, FamilyKind kind) -> SubstructureFamily
{
    const auto downs = down_sets(p);
    const auto ideals = [&] { return filter_sets(downs, [&](ElemSet s) { return is_ideal(p, s); }); };
    const auto ups = [&] {
        auto u = complements(p, downs);
        u.push_back(p.universe());
        return filter_sets(sorted_unique(std::move(u)), [](ElemSet s) { return !s.empty(); });
    };
    const auto filters = [&] { return filter_sets(ups(), [&](ElemSet s) { return is_filter(p, s); }); };
    const auto proper_only = [&](std::vector<ElemSet> v) {
        return filter_sets(v, [&](ElemSet s) { return s != p.universe(); });
    };

    std::vector<ElemSet> members;
    switch (kind) {
    case FamilyKind::ideal:
        members = ideals();
        break;
    case FamilyKind::filter:
        members = filters();
        break;
    case FamilyKind::semi_ideal:
        members = downs;
        break;
    case FamilyKind::semi_filter:
        members = ups();
        break;
    case FamilyKind::u_ideal:
        members = filter_sets(ideals(), [&](ElemSet s) { return is_u_ideal(p, s); });
        break;
    case FamilyKind::l_filter:
        members = filter_sets(filters(), [&](ElemSet s) { return is_l_filter(p, s); });
        break;
    case FamilyKind::prime_ideal:
        members = filter_sets(ideals(), [&](ElemSet s) { return is_prime_ideal(p, s); });
        break;
    case FamilyKind::prime_filter:
        members = filter_sets(filters(), [&](ElemSet s) { return is_prime_filter(p, s); });
        break;
    case FamilyKind::minimal_prime_ideal:
        members = inclusion_minimal(enumerate(p, FamilyKind::prime_ideal).members);
        break;
    case FamilyKind::maximal_ideal:
        members = inclusion_maximal(proper_only(ideals()));
        break;
    case FamilyKind::maximal_u_ideal:
        members = inclusion_maximal(proper_only(enumerate(p, FamilyKind::u_ideal).members));
        break;
    case FamilyKind::maximal_filter:
        members = inclusion_maximal(proper_only(filters()));
        break;
    case FamilyKind::maximal_l_filter:
        members = inclusion_maximal(proper_only(enumerate(p, FamilyKind::l_filter).members));
        break;
    case FamilyKind::prime_semi_ideal:
        members = filter_sets(downs, [&](ElemSet s) { return is_prime_semi_ideal(p, s); });
        break;
    case FamilyKind::minimal_prime_semi_ideal:
        members = inclusion_minimal(enumerate(p, FamilyKind::prime_semi_ideal).members);
        break;
    }
    return SubstructureFamily{kind, sorted_unique(std::move(members))};
}

auto principal_ideal(const Poset &p, int a) -> ElemSet
{
    p.check_index(a);
    return p.down(a);
}

auto principal_filter(const Poset &p, int a) -> ElemSet
{
    p.check_index(a);
    return p.up(a);
}

auto ideal_generated(const Poset &p, ElemSet a) -> ElemSet
{
    p.check_subset(a);
    if (a.empty())
        throw RangeError("the ideal generated by the empty set is undefined");
    ElemSet cur;
    a.for_each([&](int x) { cur |= p.down(x); });
    for (;;) {
        ElemSet next = cur;
        cur.for_each([&](int x) {
            cur.for_each([&](int y) {
                if (y > x)
                    next |= lower_cone(p, upper_cone(p, ElemSet{x, y}));
            });
        });
        if (next == cur)
            return cur;
        cur = next;
    }
}

auto is_in_class_mfp_l(const Poset &p) -> bool
{
    p.require_zero();
    const auto maximal = enumerate(p, FamilyKind::maximal_filter);
    for (ElemSet f : maximal.members)
        if (!is_prime_filter(p, f))
            return false;
    for (ElemSet f : enumerate(p, FamilyKind::maximal_l_filter).members)
        if (!maximal.contains(f))
            return false;
    return true;
}

auto minimal_primes(const Poset &p) -> SubstructureFamily
{
    p.require_zero();
    return enumerate(p, FamilyKind::minimal_prime_ideal);
}

auto intersection_of(const Poset &p, const std::vector<ElemSet> &sets) -> ElemSet
{
    ElemSet out = p.universe();
    for (ElemSet s : sets)
        out &= s;
    return out;
}

auto format_set(const Poset &p, ElemSet s) -> std::string
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first)
            out += ",";
        out += p.label(i);
        first = false;
    });
    return out + "}";
}

auto ideal_lattice(const Poset &p) -> Poset
{
    const auto ideals = enumerate(p, FamilyKind::ideal).members;
    const int m = static_cast<int>(ideals.size());
    if (m > max_elements)
        throw SizeError("ideal lattice has " + std::to_string(m) + " elements, limit is " +
                        std::to_string(max_elements));
    std::vector<ElemSet> downs(m);
    std::vector<std::string> labels(m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i)
            if (ideals[i].subset_of(ideals[j]))
                downs[j].insert(i);
        labels[j] = format_set(p, ideals[j]);
    }
    Poset out = poset_from_downsets(std::move(downs)).with_labels(std::move(labels));
    return p.name().empty() ? out : out.with_name("Id(" + p.name() + ")");
}

} // namespace zdp
