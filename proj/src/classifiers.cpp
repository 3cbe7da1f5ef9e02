#include "zdp/classifiers.hpp"

#include "zdp/errors.hpp"
#include "zdp/substructures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zdp {

OrderAnalysis::OrderAnalysis(const Poset &p)
    : poset_(p), zero_(p.require_zero()), spectrum_(p), gamma_(gamma(p)), gamma_vertices_(gamma_vertices(p))
{
    const int n = p.size();
    ann_.resize(n);
    biann_.resize(n);
    for (int x = 0; x < n; ++x)
        ann_[x] = annihilator(p, x);
    for (int x = 0; x < n; ++x)
        biann_[x] = ann_of_set(ann_[x]);
}

auto OrderAnalysis::ann_of_set(ElemSet a) const -> ElemSet
{
    ElemSet out = poset_.universe();
    a.for_each([&](int x) { out &= ann_[x]; });
    return out;
}

namespace {

auto closure_of_d(const OrderAnalysis &a, int y) -> PointSet
{
    const auto &sp = a.spectrum();
    return sp.generic_closure(sp.d_of(y));
}

auto closure_of_int_v(const OrderAnalysis &a, int x) -> PointSet
{
    const auto &sp = a.spectrum();
    return sp.generic_closure(sp.interior(sp.v_of(x)));
}

// For every x, the first y with statement_witness_holds(s, x, y).
auto evaluate_pointwise(const OrderAnalysis &a, int s) -> StatementResult
{
    StatementResult r;
    const int n = a.poset().size();
    for (int x = 0; x < n; ++x) {
        std::optional<int> found;
        for (int y = 0; y < n && !found; ++y)
            if (statement_witness_holds(a, s, x, y))
                found = y;
        if (!found) {
            r.fails_at = x;
            r.witnesses.clear();
            return r;
        }
        r.witnesses.emplace_back(x, *found);
    }
    r.holds = true;
    return r;
}

auto evaluate_complemented(const OrderAnalysis &a, bool uniquely) -> StatementResult
{
    StatementResult r;
    const Graph &g = a.zero_divisor_graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto comps = complements_of(g, v);
        bool ok = !comps.empty();
        if (ok && uniquely)
            ok = std::all_of(comps.begin(), comps.end(),
                             [&](int c) { return g.neighbors(c) == g.neighbors(comps.front()); });
        if (!ok) {
            r.fails_at = a.gamma_vertex(v);
            r.witnesses.clear();
            return r;
        }
        r.witnesses.emplace_back(a.gamma_vertex(v), a.gamma_vertex(comps.front()));
    }
    r.holds = true;
    return r;
}

} // namespace

auto statement_witness_holds(const OrderAnalysis &a, int s, int x, int y) -> bool
{
    const Poset &p = a.poset();
    p.check_index(x);
    p.check_index(y);
    switch (s) {
    case 1:
        return y != x && a.ann(x).contains(y) &&
               a.ann_of_set(ideal_generated(p, ElemSet{x, y})) == a.zero_set();
    case 2:
        return a.ann(x) == a.biann(y);
    case 3:
        return a.ann(x).contains(y) && (a.ann(x) & a.ann(y)) == a.zero_set();
    case 4:
        return closure_of_int_v(a, x) == closure_of_d(a, y);
    case 5: {
        const auto &sp = a.spectrum();
        return sp.v_prime(y) == sp.v_prime_of_set(a.ann(x));
    }
    default:
        throw RangeError("pointwise statements are numbered 1..5");
    }
}

auto evaluate_s1(const OrderAnalysis &a) -> StatementResult { return evaluate_pointwise(a, 1); }
auto evaluate_s2(const OrderAnalysis &a) -> StatementResult { return evaluate_pointwise(a, 2); }
auto evaluate_s3(const OrderAnalysis &a) -> StatementResult { return evaluate_pointwise(a, 3); }
auto evaluate_s4(const OrderAnalysis &a) -> StatementResult { return evaluate_pointwise(a, 4); }
auto evaluate_s5(const OrderAnalysis &a) -> StatementResult { return evaluate_pointwise(a, 5); }
auto evaluate_s6(const OrderAnalysis &a) -> StatementResult { return evaluate_complemented(a, false); }
auto evaluate_s7(const OrderAnalysis &a) -> StatementResult { return evaluate_complemented(a, true); }

auto weakly_quasi_complemented_at(const OrderAnalysis &a, int x) -> bool
{
    const int n = a.poset().size();
    const ElemSet target = a.biann(x);
    // Any admissible family lies inside this candidate set, and adding members
    // only shrinks the intersection towards target.
    ElemSet meet = a.poset().universe();
    bool any = false;
    for (int y = 0; y < n; ++y)
        if (y != x && target.subset_of(a.ann(y))) {
            meet &= a.ann(y);
            any = true;
        }
    return any && meet == target;
}

auto evaluate_s8(const OrderAnalysis &a) -> StatementResult
{
    StatementResult r;
    for (int x = 0; x < a.poset().size(); ++x)
        if (!weakly_quasi_complemented_at(a, x)) {
            r.fails_at = x;
            return r;
        }
    r.holds = true;
    return r;
}

auto evaluate_s9(const OrderAnalysis &a) -> StatementResult
{
    StatementResult r;
    r.holds = is_min_compact(a.spectrum());
    return r;
}

auto is_quasi_complemented(const Poset &p) -> bool { return evaluate_s1(OrderAnalysis(p)).holds; }
auto s2_biannihilator(const Poset &p) -> bool { return evaluate_s2(OrderAnalysis(p)).holds; }
auto s3_orthogonal_witness(const Poset &p) -> bool { return evaluate_s3(OrderAnalysis(p)).holds; }
auto s4_closure_condition(const Poset &p) -> bool { return evaluate_s4(OrderAnalysis(p)).holds; }
auto s5_minprime_condition(const Poset &p) -> bool { return evaluate_s5(OrderAnalysis(p)).holds; }
auto is_weakly_quasi_complemented(const Poset &p) -> bool { return evaluate_s8(OrderAnalysis(p)).holds; }

auto satisfies_ac(const OrderAnalysis &a) -> bool
{
    const int n = a.poset().size();
    std::set<ElemSet::Word> anns;
    for (int z = 0; z < n; ++z)
        anns.insert(a.ann(z).bits());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (anns.count((a.ann(x) & a.ann(y)).bits()) == 0)
                return false;
    return true;
}

auto satisfies_ac(const Poset &p) -> bool { return satisfies_ac(OrderAnalysis(p)); }

auto classify(const OrderAnalysis &a) -> ClassificationReport
{
    const Poset &p = a.poset();
    ClassificationReport r;
    r.name = p.name();
    r.n = p.size();
    r.in_class = is_in_class_mfp_l(p);
    r.is_meet_semilattice = is_meet_semilattice(p);
    r.is_lattice = r.is_meet_semilattice && is_join_semilattice(p);
    r.has_ac = satisfies_ac(a);
    r.statements = {evaluate_s1(a), evaluate_s2(a), evaluate_s3(a), evaluate_s4(a), evaluate_s5(a),
                    evaluate_s6(a), evaluate_s7(a), evaluate_s8(a), evaluate_s9(a)};
    for (int k = 0; k < 9; ++k)
        r.s[k] = r.statements[k].holds;
    return r;
}

auto classify(const Poset &p) -> ClassificationReport { return classify(OrderAnalysis(p)); }

auto report_to_json(const ClassificationReport &r) -> nlohmann::json
{
    nlohmann::json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["in_class"] = r.in_class;
    j["is_lattice"] = r.is_lattice;
    j["is_meet_semilattice"] = r.is_meet_semilattice;
    j["has_ac"] = r.has_ac;
    nlohmann::json w = nlohmann::json::object();
    for (int k = 0; k < 9; ++k) {
        const std::string key = "s" + std::to_string(k + 1);
        j[key] = r.s[k];
        const auto &st = r.statements[k];
        if (st.fails_at)
            w[key] = {{"fails_at", *st.fails_at}};
        else if (!st.witnesses.empty()) {
            auto pairs = nlohmann::json::array();
            for (auto [x, y] : st.witnesses)
                pairs.push_back({x, y});
            w[key] = {{"pairs", pairs}};
        }
    }
    j["witnesses"] = w;
    return j;
}

auto format_report(const ClassificationReport &r, const Poset &p) -> std::string
{
    std::ostringstream os;
    const auto yn = [](bool b) { return b ? "true" : "false"; };
    os << "poset " << (r.name.empty() ? "(unnamed)" : r.name) << ", n=" << r.n << "\n";
    os << "  in_class=" << yn(r.in_class) << " lattice=" << yn(r.is_lattice)
       << " meet_semilattice=" << yn(r.is_meet_semilattice) << " ac=" << yn(r.has_ac) << "\n";
    static const char *const titles[9] = {
        "quasi-complemented",
        "x^perp = y^perp-perp",
        "y in x^perp with x^perp & y^perp = {0}",
        "cl(int V(x)) = cl(D(y))",
        "V'(y) = V'(x^perp)",
        "Gamma complemented",
        "Gamma uniquely complemented",
        "weakly quasi-complemented",
        "Min compact",
    };
    for (int k = 0; k < 9; ++k) {
        const auto &st = r.statements[k];
        os << "  S" << (k + 1) << " " << yn(r.s[k]) << "  (" << titles[k] << ")";
        if (st.fails_at)
            os << " fails at " << p.label(*st.fails_at);
        os << "\n";
    }
    return os.str();
}

} // namespace zdp
