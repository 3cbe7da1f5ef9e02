#include "zdp/suite.hpp"

#include "zdp/classifiers.hpp"
#include "zdp/errors.hpp"
#include "zdp/poset_json.hpp"
#include "zdp/semigroup.hpp"
#include "zdp/substructures.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace zdp {

namespace {

using Status = PosetOutcome::Status;

constexpr std::array<CheckInfo, check_count> catalog{{
    {Check::main_s1_to_s5, "main.s1-s5", "class members: S1, S2, S3, S4 and S5 agree"},
    {Check::main_s3_implies_s6, "main.s3-s6", "class members: S3 implies S6"},
    {Check::main_s6_iff_s7, "main.s6-s7", "class members: S6 iff S7"},
    {Check::main_s1_implies_s8, "main.s1-s8", "class members: S1 implies S8"},
    {Check::main_s9_implies_s8, "main.s9-s8", "class members: S9 implies S8"},
    {Check::main_ac_s1_to_s8, "main.ac-s1-s8", "class members with a.c.: S1 to S8 agree"},
    {Check::main_lattice_s1_to_s9, "main.lattice-s1-s9", "lattices in the class: S1 to S9 agree"},
    {Check::weakqc_ac_s8_implies_s1, "weakqc.ac-s8-s1", "class members with a.c.: S8 implies S1"},
    {Check::weakqc_class_s8, "weakqc.class-s8", "class members are weakly quasi-complemented"},
    {Check::weakqc_class_ac_s1, "weakqc.class-ac-s1", "class members with a.c. are quasi-complemented"},
    {Check::weakqc_brute_force, "weakqc.brute-force", "S8 evaluator agrees with the literal subset search"},
    {Check::graph_s6_iff_s7, "graph.s6-s7", "every poset with zero: Gamma complemented iff uniquely complemented"},
    {Check::graph_uc_literal, "graph.uc-literal", "neighbourhood and triple-quantifier forms of unique complementation agree"},
    {Check::ann_galois, "ann.galois", "annihilator Galois laws"},
    {Check::ann_finite_intersection, "ann.finite-intersection",
     "class members: (A^ul)^perp equals the intersection of the a^perp, |A| <= 3"},
    {Check::order_class_zero_distributive, "order.class-0dist", "class members are 0-distributive"},
    {Check::order_prime_duality, "order.prime-duality", "complements of prime ideals are prime filters and back"},
    {Check::spec_nonempty, "spec.nonempty", "class members have a prime ideal"},
    {Check::spec_minimal_prime_test, "spec.minimal-prime-test",
     "class members: a prime is minimal iff it contains exactly one of (x] and x^perp for each x"},
    {Check::spec_min_intersection, "spec.min-intersection", "class members: the minimal primes and all primes meet in {0}"},
    {Check::spec_interior_formula, "spec.interior-formula", "class members: int V(x) = Spec \\ cl D(x)"},
    {Check::spec_closure_formula, "spec.closure-formula", "cl X = V(meet of X) for nonempty X"},
    {Check::spec_closed_axioms, "spec.closed-axioms", "closed sets form a topology"},
    {Check::spec_min_semi_ideals, "spec.min-semi-ideals", "class members: minimal prime semi-ideals are the minimal primes"},
    {Check::bridge_meet_class_zero_distributive, "bridge.meet-class-0dist",
     "meet-semilattices: class membership iff 0-distributive"},
    {Check::bridge_zero_distributive_ideal_lattice, "bridge.0dist-ideal-lattice", "0-distributive iff Id(P) is pseudocomplemented"},
    {Check::bridge_pseudocomplemented_zero_distributive, "bridge.pc-0dist", "pseudocomplemented implies 0-distributive"},
    {Check::bridge_pseudocomplemented_qc, "bridge.pc-qc", "pseudocomplemented implies quasi-complemented"},
    {Check::bridge_lattice_qc_min_hausdorff, "bridge.lattice-qc-min",
     "0-distributive lattices: quasi-complemented iff Min is compact Hausdorff"},
    {Check::witness_reverify, "witness.reverify", "recorded witnesses and failure points re-verify"},
}};

constexpr std::array<std::string_view, mined_count> mined_names{
    "finite-intersection-outside-class",
    "min-intersection-outside-class",
};

auto bools(const ClassificationReport &r, int from, int to) -> std::string
{
    std::string out;
    for (int k = from; k <= to; ++k) {
        if (!out.empty())
            out += ' ';
        out += "S" + std::to_string(k) + "=" + (r.statement(k) ? "T" : "F");
    }
    return out;
}

auto all_equal(const ClassificationReport &r, int from, int to) -> bool
{
    for (int k = from + 1; k <= to; ++k)
        if (r.statement(k) != r.statement(from))
            return false;
    return true;
}

auto point_set_from_mask(std::size_t size, unsigned long mask) -> PointSet
{
    PointSet out(size);
    for (std::size_t i = 0; i < size; ++i)
        if ((mask >> i) & 1UL)
            out.set(i);
    return out;
}

// Literal reading of weak quasi-complementation at x: some nonempty set of
// elements other than x whose annihilators intersect to x^perp-perp.
auto weak_qc_literal(const OrderAnalysis &a, int x) -> bool
{
    const Poset &p = a.poset();
    std::vector<int> others;
    for (int y = 0; y < p.size(); ++y)
        if (y != x)
            others.push_back(y);
    const unsigned long subsets = 1UL << others.size();
    for (unsigned long mask = 1; mask < subsets; ++mask) {
        ElemSet meet = p.universe();
        for (std::size_t i = 0; i < others.size(); ++i)
            if ((mask >> i) & 1UL)
                meet &= a.ann(others[i]);
        if (meet == a.biann(x))
            return true;
    }
    return false;
}

class Recorder {
public:
    Recorder(const SuiteConfig &cfg, PosetOutcome &out) : cfg_(cfg), out_(out) {}

    auto wants(Check c) const -> bool { return cfg_.enabled(c); }

    void record(Check c, bool ok, const std::string &witness = {})
    {
        out_.status[static_cast<std::size_t>(c)] = ok ? Status::passed : Status::failed;
        if (!ok)
            out_.failures.emplace_back(c, witness);
    }

private:
    const SuiteConfig &cfg_;
    PosetOutcome &out_;
};

void check_statements(const OrderAnalysis &a, const ClassificationReport &r, Recorder &rec)
{
    const bool cls = r.in_class;
    if (cls) {
        if (rec.wants(Check::main_s1_to_s5))
            rec.record(Check::main_s1_to_s5, all_equal(r, 1, 5), bools(r, 1, 5));
        if (rec.wants(Check::main_s3_implies_s6))
            rec.record(Check::main_s3_implies_s6, !r.statement(3) || r.statement(6), bools(r, 3, 6));
        if (rec.wants(Check::main_s6_iff_s7))
            rec.record(Check::main_s6_iff_s7, r.statement(6) == r.statement(7), bools(r, 6, 7));
        if (rec.wants(Check::main_s1_implies_s8))
            rec.record(Check::main_s1_implies_s8, !r.statement(1) || r.statement(8), bools(r, 1, 8));
        if (rec.wants(Check::main_s9_implies_s8))
            rec.record(Check::main_s9_implies_s8, !r.statement(9) || r.statement(8), bools(r, 8, 9));
        if (rec.wants(Check::weakqc_class_s8))
            rec.record(Check::weakqc_class_s8, r.statement(8), bools(r, 8, 8));
    }
    if (cls && r.has_ac) {
        if (rec.wants(Check::main_ac_s1_to_s8))
            rec.record(Check::main_ac_s1_to_s8, all_equal(r, 1, 8), bools(r, 1, 8));
        if (rec.wants(Check::weakqc_ac_s8_implies_s1))
            rec.record(Check::weakqc_ac_s8_implies_s1, !r.statement(8) || r.statement(1), bools(r, 1, 8));
        if (rec.wants(Check::weakqc_class_ac_s1))
            rec.record(Check::weakqc_class_ac_s1, r.statement(1), bools(r, 1, 1));
    }
    if (cls && r.is_lattice && rec.wants(Check::main_lattice_s1_to_s9))
        rec.record(Check::main_lattice_s1_to_s9, all_equal(r, 1, 9), bools(r, 1, 9));
    if (rec.wants(Check::graph_s6_iff_s7))
        rec.record(Check::graph_s6_iff_s7, r.statement(6) == r.statement(7), bools(r, 6, 7));
    if (rec.wants(Check::graph_uc_literal)) {
        const Graph &g = a.zero_divisor_graph();
        const bool by_neighbourhood = is_uniquely_complemented(g);
        const bool literal = is_uniquely_complemented_literal(g);
        rec.record(Check::graph_uc_literal, by_neighbourhood == literal,
                   std::string("neighbourhood=") + (by_neighbourhood ? "T" : "F") + " literal=" + (literal ? "T" : "F"));
    }
}

void check_witnesses(const OrderAnalysis &a, const ClassificationReport &r, Recorder &rec)
{
    const Poset &p = a.poset();
    const Graph &g = a.zero_divisor_graph();
    std::vector<int> vertex_of(p.size(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        vertex_of[a.gamma_vertex(v)] = v;
    for (int s = 1; s <= 7; ++s) {
        const StatementResult &res = r.statements[s - 1];
        for (auto [x, y] : res.witnesses) {
            const bool ok = s <= 5 ? statement_witness_holds(a, s, x, y)
                                   : vertex_of[x] >= 0 && vertex_of[y] >= 0 &&
                                         is_complement_pair(g, vertex_of[x], vertex_of[y]);
            if (!ok) {
                rec.record(Check::witness_reverify, false,
                           "S" + std::to_string(s) + " witness (" + p.label(x) + "," + p.label(y) + ")");
                return;
            }
        }
        if (s <= 5 && res.fails_at) {
            for (int y = 0; y < p.size(); ++y)
                if (statement_witness_holds(a, s, *res.fails_at, y)) {
                    rec.record(Check::witness_reverify, false,
                               "S" + std::to_string(s) + " reported failing at " + p.label(*res.fails_at) +
                                   " but y=" + p.label(y) + " works");
                    return;
                }
        }
    }
    rec.record(Check::witness_reverify, true);
}

void check_annihilators(const OrderAnalysis &a, bool cls, const SuiteConfig &cfg, Recorder &rec, PosetOutcome &out)
{
    const Poset &p = a.poset();
    const int n = p.size();
    if (rec.wants(Check::ann_galois)) {
        std::string bad;
        if (a.ann(a.zero()) != p.universe())
            bad = "0^perp is not the whole poset";
        for (int x = 0; x < n && bad.empty(); ++x) {
            if (!a.ann(x).contains(a.zero()))
                bad = "0 missing from " + p.label(x) + "^perp";
            else if (!a.biann(x).contains(x))
                bad = p.label(x) + " not in its biannihilator";
            else if (a.ann_of_set(a.biann(x)) != a.ann(x))
                bad = "triple annihilator differs at " + p.label(x);
            for (int y = 0; y < n && bad.empty(); ++y)
                if (p.le(x, y) && !a.ann(y).subset_of(a.ann(x)))
                    bad = "antitonicity fails at " + p.label(x) + " <= " + p.label(y);
        }
        rec.record(Check::ann_galois, bad.empty(), bad);
    }
    const bool want_fi = rec.wants(Check::ann_finite_intersection);
    if (!want_fi && cls)
        return;
    // Outside the class the same test feeds the mined family.
    std::string bad;
    const auto test = [&](ElemSet s) {
        const ElemSet lhs = a.ann_of_set(lower_cone(p, upper_cone(p, s)));
        const ElemSet rhs = a.ann_of_set(s);
        if (lhs != rhs && bad.empty())
            bad = "A=" + format_set(p, s) + ": " + format_set(p, lhs) + " vs " + format_set(p, rhs);
    };
    const int k = cfg.intersection_subset_max;
    for (int i = 0; i < n && bad.empty(); ++i) {
        test(ElemSet::singleton(i));
        for (int j = i + 1; j < n && k >= 2 && bad.empty(); ++j) {
            test(ElemSet{i, j});
            for (int l = j + 1; l < n && k >= 3 && bad.empty(); ++l)
                test(ElemSet{i, j, l});
        }
    }
    if (cls && want_fi)
        rec.record(Check::ann_finite_intersection, bad.empty(), bad);
    if (!cls && !bad.empty())
        out.mined[static_cast<std::size_t>(Mined::finite_intersection_outside_class)] = true;
}

void check_spectrum(const OrderAnalysis &a, bool cls, Recorder &rec, PosetOutcome &out)
{
    const Poset &p = a.poset();
    const SpectrumSpace &space = a.spectrum();
    const int k = space.point_count();
    const ElemSet zero = a.zero_set();

    const ElemSet min_meet = space.intersection_of_points(space.min_points());
    if (!cls && min_meet != zero)
        out.mined[static_cast<std::size_t>(Mined::min_intersection_outside_class)] = true;

    if (cls) {
        if (rec.wants(Check::spec_nonempty))
            rec.record(Check::spec_nonempty, k > 0, "no prime ideals");
        if (rec.wants(Check::spec_min_intersection)) {
            const ElemSet all_meet = space.intersection_of_points(space.all_points());
            rec.record(Check::spec_min_intersection, min_meet == zero && all_meet == zero,
                       "meet of Min = " + format_set(p, min_meet) + ", meet of Spec = " + format_set(p, all_meet));
        }
        if (rec.wants(Check::spec_minimal_prime_test)) {
            std::string bad;
            for (int i = 0; i < k && bad.empty(); ++i) {
                const ElemSet prime = space.points()[i];
                bool exactly_one = true;
                for (int x = 0; x < p.size(); ++x)
                    if (p.down(x).subset_of(prime) == a.ann(x).subset_of(prime))
                        exactly_one = false;
                if (exactly_one != space.min_points()[i])
                    bad = "prime " + format_set(p, prime);
            }
            rec.record(Check::spec_minimal_prime_test, bad.empty(), bad);
        }
        if (rec.wants(Check::spec_interior_formula)) {
            std::string bad;
            for (int x = 0; x < p.size() && bad.empty(); ++x) {
                const auto iv = interior_of_v(space, x);
                if (iv.generic != iv.complement_of_closure_d)
                    bad = "x=" + p.label(x);
            }
            rec.record(Check::spec_interior_formula, bad.empty(), bad);
        }
        if (rec.wants(Check::spec_min_semi_ideals)) {
            const auto semi = enumerate(p, FamilyKind::minimal_prime_semi_ideal).members;
            const auto mins = minimal_primes(p).members;
            rec.record(Check::spec_min_semi_ideals, semi == mins,
                       std::to_string(semi.size()) + " minimal prime semi-ideals vs " + std::to_string(mins.size()) +
                           " minimal primes");
        }
    }
    if (rec.wants(Check::spec_closure_formula) && k > 0) {
        // Every nonempty subset while that stays small; otherwise all
        // singletons, pairs and the whole space.
        std::string bad;
        const auto test = [&](const PointSet &x) {
            if (bad.empty() && space.closure(x) != space.generic_closure(x))
                bad = "X with " + std::to_string(x.count()) + " points";
        };
        if (k <= 12) {
            for (unsigned long mask = 1; mask < (1UL << k); ++mask)
                test(point_set_from_mask(k, mask));
        } else {
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j)
                    test(point_set_from_mask(k, (1UL << i) | (1UL << j)));
            test(space.all_points());
        }
        rec.record(Check::spec_closure_formula, bad.empty(), bad);
    }
    if (rec.wants(Check::spec_closed_axioms))
        rec.record(Check::spec_closed_axioms, closed_set_axioms_hold(space), "closed sets not a topology");
}

void check_order(const OrderAnalysis &a, const ClassificationReport &r, const SuiteConfig &cfg, Recorder &rec)
{
    const Poset &p = a.poset();
    const bool zd = is_zero_distributive(p);
    const bool pc = is_pseudocomplemented(p);
    if (r.in_class && rec.wants(Check::order_class_zero_distributive))
        rec.record(Check::order_class_zero_distributive, zd, "in class but not 0-distributive");
    if (rec.wants(Check::order_prime_duality)) {
        std::string bad;
        for (ElemSet i : enumerate(p, FamilyKind::prime_ideal).members)
            if (bad.empty() && !is_prime_filter(p, i.complement(p.size())))
                bad = "prime ideal " + format_set(p, i) + " has a non-prime-filter complement";
        for (ElemSet f : enumerate(p, FamilyKind::prime_filter).members)
            if (bad.empty() && !is_prime_ideal(p, f.complement(p.size())))
                bad = "prime filter " + format_set(p, f) + " has a non-prime-ideal complement";
        rec.record(Check::order_prime_duality, bad.empty(), bad);
    }
    if (r.is_meet_semilattice && rec.wants(Check::bridge_meet_class_zero_distributive))
        rec.record(Check::bridge_meet_class_zero_distributive, r.in_class == zd,
                   std::string("in_class=") + (r.in_class ? "T" : "F") + " 0dist=" + (zd ? "T" : "F"));
    if (p.size() <= cfg.ideal_lattice_max_n && rec.wants(Check::bridge_zero_distributive_ideal_lattice)) {
        const bool id_pc = is_pseudocomplemented(ideal_lattice(p));
        rec.record(Check::bridge_zero_distributive_ideal_lattice, zd == id_pc,
                   std::string("0dist=") + (zd ? "T" : "F") + " Id(P) pseudocomplemented=" + (id_pc ? "T" : "F"));
    }
    if (pc && rec.wants(Check::bridge_pseudocomplemented_zero_distributive))
        rec.record(Check::bridge_pseudocomplemented_zero_distributive, zd, "pseudocomplemented, not 0-distributive");
    if (pc && rec.wants(Check::bridge_pseudocomplemented_qc))
        rec.record(Check::bridge_pseudocomplemented_qc, r.statement(1), "pseudocomplemented, not quasi-complemented");
    if (r.is_lattice && zd && rec.wants(Check::bridge_lattice_qc_min_hausdorff)) {
        const bool top = is_min_compact(a.spectrum()) && is_min_hausdorff(a.spectrum());
        rec.record(Check::bridge_lattice_qc_min_hausdorff, r.statement(1) == top,
                   std::string("S1=") + (r.statement(1) ? "T" : "F") + " Min compact Hausdorff=" + (top ? "T" : "F"));
    }
    if (p.size() <= cfg.brute_force_max_n && rec.wants(Check::weakqc_brute_force)) {
        std::string bad;
        for (int x = 0; x < p.size() && bad.empty(); ++x)
            if (weakly_quasi_complemented_at(a, x) != weak_qc_literal(a, x))
                bad = "x=" + p.label(x);
        rec.record(Check::weakqc_brute_force, bad.empty(), bad);
    }
}

struct Segment {
    std::size_t begin = 0;
    int n = 0;
    std::string prefix;
    std::vector<Poset> posets;
    std::vector<std::uint64_t> codes;

    auto size() const -> std::size_t { return codes.empty() ? posets.size() : codes.size(); }
    auto make(std::size_t i) const -> Poset
    {
        if (codes.empty())
            return posets[i];
        return poset_from_relation_code(n, codes[i]).with_name(prefix + std::to_string(i));
    }
};

struct Accumulator {
    long enumerated = 0;
    long checked = 0;
    long skipped_no_zero = 0;
    long skipped_trivial = 0;
    std::array<CheckTally, check_count> tallies{};
    long violation_count = 0;
    std::vector<std::pair<std::size_t, Violation>> violations;
    std::array<long, mined_count> mined_counts{};
    std::array<std::vector<std::pair<std::size_t, Poset>>, mined_count> mined;
};

void process(const Poset &raw, std::size_t seq, const SuiteConfig &cfg, Accumulator &acc)
{
    ++acc.enumerated;
    const Poset *target = &raw;
    Poset adjoined;
    if (!raw.has_zero()) {
        if (!cfg.adjoin_zero) {
            ++acc.skipped_no_zero;
            return;
        }
        adjoined = adjoin_zero(raw).with_name(raw.name() + "+0");
        target = &adjoined;
    }
    if (target->size() == 1) {
        ++acc.skipped_trivial;
        return;
    }
    ++acc.checked;
    const PosetOutcome out = check_poset(*target, cfg);
    for (std::size_t c = 0; c < check_count; ++c) {
        switch (out.status[c]) {
        case Status::passed: ++acc.tallies[c].passed; break;
        case Status::failed: ++acc.tallies[c].failed; break;
        case Status::not_applicable: ++acc.tallies[c].not_applicable; break;
        }
    }
    const auto limit = static_cast<std::size_t>(cfg.record_limit);
    for (const auto &[check, witness] : out.failures) {
        ++acc.violation_count;
        if (acc.violations.size() < limit)
            acc.violations.emplace_back(seq, Violation{check, *target, witness});
    }
    for (std::size_t m = 0; m < mined_count; ++m)
        if (out.mined[m]) {
            ++acc.mined_counts[m];
            if (acc.mined[m].size() < limit)
                acc.mined[m].emplace_back(seq, *target);
        }
}

auto build_segments(const SuiteConfig &cfg) -> std::vector<Segment>
{
    std::vector<Segment> segments;
    std::size_t next = 0;
    for (int n = 1; n <= cfg.max_n; ++n) {
        Segment s;
        s.begin = next;
        s.n = n;
        if (cfg.dedup == Dedup::canonical) {
            s.posets = posets_of_size(n, Dedup::canonical);
        } else {
            s.codes = labeled_relation_codes(n);
            s.prefix = "L" + std::to_string(n) + "_";
        }
        next += s.size();
        segments.push_back(std::move(s));
    }
    if (cfg.samples > 0) {
        Segment s;
        s.begin = next;
        s.n = cfg.sample_n;
        std::mt19937_64 rng(cfg.seed);
        for (int i = 0; i < cfg.samples; ++i)
            s.posets.push_back(sample_poset(cfg.sample_n, rng).with_name("R" + std::to_string(cfg.sample_n) + "_" +
                                                                         std::to_string(i)));
        segments.push_back(std::move(s));
    }
    return segments;
}

template <class T>
void keep_first(std::vector<std::pair<std::size_t, T>> &items, std::size_t limit)
{
    std::stable_sort(items.begin(), items.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    if (items.size() > limit)
        items.resize(limit);
}

auto tf(bool b) -> std::string { return b ? "T" : "F"; }

} // namespace

auto check_catalog() -> const std::array<CheckInfo, check_count> & { return catalog; }

auto to_string(Check c) -> std::string_view { return catalog[static_cast<std::size_t>(c)].name; }

auto to_string(Mined m) -> std::string_view { return mined_names[static_cast<std::size_t>(m)]; }

auto checks_from_names(const std::vector<std::string> &names) -> std::vector<Check>
{
    std::vector<Check> out;
    for (const std::string &name : names) {
        bool matched = false;
        for (const CheckInfo &info : catalog) {
            const bool group = info.name.size() > name.size() && info.name.substr(0, name.size()) == name &&
                               info.name[name.size()] == '.';
            if (info.name == name || group) {
                matched = true;
                if (std::find(out.begin(), out.end(), info.id) == out.end())
                    out.push_back(info.id);
            }
        }
        if (!matched)
            throw ParseError("unknown check '" + name + "'");
    }
    std::sort(out.begin(), out.end());
    return out;
}

void SuiteConfig::validate() const
{
    if (max_n < 1)
        throw RangeError("max_n must be >= 1");
    if (jobs < 1)
        throw RangeError("jobs must be >= 1");
    if (samples < 0)
        throw RangeError("samples must be >= 0");
    if (samples > 0 && (sample_n < 1 || sample_n > max_elements))
        throw RangeError("sample_n must be in 1.." + std::to_string(max_elements));
    if (record_limit < 0)
        throw RangeError("record_limit must be >= 0");
    const int limit = dedup == Dedup::canonical ? max_canonical_n : max_labeled_n;
    if (max_n > limit)
        throw BudgetError(std::string(to_string(dedup)) + " enumeration is limited to n <= " + std::to_string(limit));
}

auto SuiteConfig::enabled(Check c) const -> bool
{
    return checks.empty() || std::find(checks.begin(), checks.end(), c) != checks.end();
}

auto check_poset(const Poset &p, const SuiteConfig &cfg) -> PosetOutcome
{
    PosetOutcome out;
    Recorder rec(cfg, out);
    const OrderAnalysis a(p);
    const ClassificationReport r = classify(a);
    check_statements(a, r, rec);
    check_annihilators(a, r.in_class, cfg, rec, out);
    check_spectrum(a, r.in_class, rec, out);
    check_order(a, r, cfg, rec);
    if (rec.wants(Check::witness_reverify))
        check_witnesses(a, r, rec);
    return out;
}

auto run_suite(const SuiteConfig &cfg) -> SuiteReport
{
    cfg.validate();
    const std::vector<Segment> segments = build_segments(cfg);
    std::size_t total = 0;
    for (const Segment &s : segments)
        total += s.size();

    std::vector<Accumulator> accs(static_cast<std::size_t>(cfg.jobs));
    std::atomic<std::size_t> cursor{0};
    const auto worker = [&](Accumulator &acc) {
        std::size_t seg = 0;
        for (;;) {
            const std::size_t seq = cursor.fetch_add(1);
            if (seq >= total)
                return;
            while (seq >= segments[seg].begin + segments[seg].size())
                ++seg;
            process(segments[seg].make(seq - segments[seg].begin), seq, cfg, acc);
        }
    };
    if (cfg.jobs == 1) {
        worker(accs[0]);
    } else {
        std::vector<std::thread> pool;
        for (auto &acc : accs)
            pool.emplace_back(worker, std::ref(acc));
        for (auto &t : pool)
            t.join();
    }

    SuiteReport report;
    report.config = cfg;
    std::vector<std::pair<std::size_t, Violation>> violations;
    std::array<std::vector<std::pair<std::size_t, Poset>>, mined_count> mined;
    for (Accumulator &acc : accs) {
        report.posets_enumerated += acc.enumerated;
        report.posets_checked += acc.checked;
        report.skipped_no_zero += acc.skipped_no_zero;
        report.skipped_trivial += acc.skipped_trivial;
        report.violation_count += acc.violation_count;
        for (std::size_t c = 0; c < check_count; ++c) {
            report.tallies[c].passed += acc.tallies[c].passed;
            report.tallies[c].failed += acc.tallies[c].failed;
            report.tallies[c].not_applicable += acc.tallies[c].not_applicable;
        }
        std::move(acc.violations.begin(), acc.violations.end(), std::back_inserter(violations));
        for (std::size_t m = 0; m < mined_count; ++m) {
            report.mined[m].count += acc.mined_counts[m];
            std::move(acc.mined[m].begin(), acc.mined[m].end(), std::back_inserter(mined[m]));
        }
    }
    const auto limit = static_cast<std::size_t>(cfg.record_limit);
    keep_first(violations, limit);
    for (auto &[seq, v] : violations)
        report.violations.push_back(std::move(v));
    for (std::size_t m = 0; m < mined_count; ++m) {
        keep_first(mined[m], limit);
        for (auto &[seq, p] : mined[m])
            report.mined[m].examples.push_back(std::move(p));
    }
    return report;
}

auto suite_report_to_json(const SuiteReport &r) -> nlohmann::json
{
    nlohmann::json j;
    nlohmann::json cfg;
    cfg["max_n"] = r.config.max_n;
    cfg["dedup"] = std::string(to_string(r.config.dedup));
    cfg["seed"] = r.config.seed;
    cfg["samples"] = r.config.samples;
    cfg["sample_n"] = r.config.sample_n;
    cfg["adjoin_zero"] = r.config.adjoin_zero;
    nlohmann::json names = nlohmann::json::array();
    for (const CheckInfo &info : catalog)
        if (r.config.enabled(info.id))
            names.push_back(std::string(info.name));
    cfg["checks"] = names;
    j["config"] = cfg;
    j["posets_enumerated"] = r.posets_enumerated;
    j["posets_checked"] = r.posets_checked;
    j["skipped_no_zero"] = r.skipped_no_zero;
    j["skipped_trivial"] = r.skipped_trivial;
    nlohmann::json checks = nlohmann::json::object();
    for (const CheckInfo &info : catalog) {
        if (!r.config.enabled(info.id))
            continue;
        const CheckTally &t = r.tallies[static_cast<std::size_t>(info.id)];
        checks[std::string(info.name)] = {{"passed", t.passed}, {"failed", t.failed}, {"not_applicable", t.not_applicable}};
    }
    j["checks"] = checks;
    j["violation_count"] = r.violation_count;
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation &v : r.violations)
        violations.push_back({{"check", std::string(to_string(v.check))}, {"poset", poset_to_json(v.poset)}, {"witness", v.witness}});
    j["violations"] = violations;
    nlohmann::json mined = nlohmann::json::object();
    for (std::size_t m = 0; m < mined_count; ++m) {
        nlohmann::json examples = nlohmann::json::array();
        for (const Poset &p : r.mined[m].examples)
            examples.push_back(poset_to_json(p));
        mined[std::string(mined_names[m])] = {{"count", r.mined[m].count}, {"examples", examples}};
    }
    j["mined"] = mined;
    return j;
}

auto format_suite_report(const SuiteReport &r) -> std::string
{
    std::ostringstream os;
    os << "posets enumerated " << r.posets_enumerated << ", checked " << r.posets_checked << ", skipped (no zero) "
       << r.skipped_no_zero << ", skipped (one element) " << r.skipped_trivial << "\n";
    for (const CheckInfo &info : catalog) {
        if (!r.config.enabled(info.id))
            continue;
        const CheckTally &t = r.tallies[static_cast<std::size_t>(info.id)];
        os << "  " << (t.failed == 0 ? "ok  " : "FAIL") << " " << info.name << "  passed " << t.passed << ", failed "
           << t.failed << ", n/a " << t.not_applicable << "\n";
    }
    for (std::size_t m = 0; m < mined_count; ++m)
        os << "  mined " << mined_names[m] << ": " << r.mined[m].count << "\n";
    os << "violations " << r.violation_count << "\n";
    for (const Violation &v : r.violations)
        os << "  " << to_string(v.check) << " on " << serialize_poset(v.poset) << ": " << v.witness << "\n";
    return os.str();
}

auto run_semigroup_sweep(int max_n) -> SemigroupSweepReport
{
    if (max_n < 2 || max_n > 5)
        throw BudgetError("semigroup sweep supports 2 <= max_n <= 5");
    SemigroupSweepReport rep;
    for (int n = 2; n <= max_n; ++n) {
        for (const SemigroupTable &t : all_semigroups_with_identity(n)) {
            ++rep.tables;
            if (!sg_is_reduced(t))
                continue;
            ++rep.reduced;
            const std::string tag = semigroup_to_json(t).dump();
            const Graph g = sg_graph(t);
            Poset asc;
            try {
                asc = lagrange_roy_poset(t, TieBreak::ascending);
                const Poset desc = lagrange_roy_poset(t, TieBreak::descending);
                ++rep.graph_checks;
                if (!(gamma(asc) == g) || !(gamma(desc) == g))
                    rep.violations.push_back("Gamma(poset) != G(S) for " + tag);
            } catch (const NotMeetSemilatticeError &) {
                rep.violations.push_back("order is not a meet-semilattice for " + tag);
                continue;
            }
            const bool ac = sg_satisfies_ac(t);
            if (ac != satisfies_ac(asc))
                rep.violations.push_back("a.c. differs between table and poset for " + tag);
            if (!ac)
                continue;
            ++rep.with_ac;
            ++rep.agreement_checks;
            const ClassificationReport r = classify(asc);
            if (!is_zero_distributive(asc) || !r.in_class)
                rep.violations.push_back("a.c. table whose poset is not 0-distributive / in class: " + tag);
            const std::array<bool, 10> ten{r.statement(1), r.statement(2), r.statement(3), r.statement(4),
                                           r.statement(5), r.statement(6), r.statement(7), is_complemented(g),
                                           is_uniquely_complemented(g), r.statement(8)};
            if (std::adjacent_find(ten.begin(), ten.end(), std::not_equal_to<>()) != ten.end()) {
                std::string s;
                for (bool b : ten)
                    s += tf(b);
                rep.violations.push_back("statements disagree (" + s + ") for " + tag);
            }
        }
    }
    return rep;
}

} // namespace zdp
