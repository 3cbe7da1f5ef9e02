#include "zdp/semigroup.hpp"

#include "zdp/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace zdp {

namespace {

auto pair_str(int a, int b) -> std::string { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

} // namespace

auto sg_validate(const SemigroupTable &t) -> SemigroupDiagnostics
{
    SemigroupDiagnostics d;
    const int n = t.n;
    if (n < 1 || n > max_elements || static_cast<int>(t.mul.size()) != n) {
        d.shape_ok = false;
        d.messages.push_back("table must have n rows with 1 <= n <= " + std::to_string(max_elements));
        return d;
    }
    for (const auto &row : t.mul) {
        if (static_cast<int>(row.size()) != n) {
            d.shape_ok = false;
            d.messages.push_back("every row must have n entries");
            return d;
        }
        for (int v : row)
            if (v < 0 || v >= n) {
                d.shape_ok = false;
                d.messages.push_back("entry " + std::to_string(v) + " out of range");
                return d;
            }
    }
    if (t.zero < 0 || t.zero >= n || (t.one && (*t.one < 0 || *t.one >= n))) {
        d.shape_ok = false;
        d.messages.push_back("zero/one index out of range");
        return d;
    }
    for (int a = 0; a < n && d.commutative; ++a)
        for (int b = a + 1; b < n; ++b)
            if (t.times(a, b) != t.times(b, a)) {
                d.commutative = false;
                d.messages.push_back("not commutative at " + pair_str(a, b));
                break;
            }
    for (int a = 0; a < n && d.associative; ++a)
        for (int b = 0; b < n && d.associative; ++b)
            for (int c = 0; c < n; ++c)
                if (t.times(t.times(a, b), c) != t.times(a, t.times(b, c))) {
                    d.associative = false;
                    d.messages.push_back("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(c) + ")");
                    break;
                }
    for (int x = 0; x < n; ++x)
        if (t.times(t.zero, x) != t.zero || t.times(x, t.zero) != t.zero) {
            d.zero_absorbing = false;
            d.messages.push_back("zero does not absorb " + std::to_string(x));
            break;
        }
    if (t.one)
        for (int x = 0; x < n; ++x)
            if (t.times(*t.one, x) != x) {
                d.identity_ok = false;
                d.messages.push_back("declared identity fails at " + std::to_string(x));
                break;
            }
    return d;
}

void sg_require_valid(const SemigroupTable &t)
{
    const auto d = sg_validate(t);
    if (!d.shape_ok || !d.identity_ok)
        throw SemigroupError(d.messages.front());
    if (!d.commutative)
        throw CommError(d.messages.front());
    if (!d.associative)
        throw AssocError(d.messages.front());
    if (!d.zero_absorbing)
        throw AbsorbError(d.messages.front());
}

auto sg_is_reduced(const SemigroupTable &t) -> bool
{
    sg_require_valid(t);
    for (int a = 0; a < t.n; ++a) {
        if (a == t.zero)
            continue;
        int pw = a;
        for (int k = 2; k <= t.n; ++k) {
            pw = t.times(pw, a);
            if (pw == t.zero)
                return false;
        }
    }
    return true;
}

auto sg_ann(const SemigroupTable &t, int a) -> ElemSet
{
    if (a < 0 || a >= t.n)
        throw RangeError("semigroup element out of range");
    ElemSet out;
    for (int x = 0; x < t.n; ++x)
        if (t.times(x, a) == t.zero)
            out.insert(x);
    return out;
}

auto sg_satisfies_ac(const SemigroupTable &t) -> bool
{
    sg_require_valid(t);
    std::vector<ElemSet> anns;
    std::set<ElemSet::Word> all;
    for (int a = 0; a < t.n; ++a) {
        anns.push_back(sg_ann(t, a));
        all.insert(anns.back().bits());
    }
    for (int x = 0; x < t.n; ++x)
        for (int y = x + 1; y < t.n; ++y)
            if (all.count((anns[x] & anns[y]).bits()) == 0)
                return false;
    return true;
}

auto sg_graph(const SemigroupTable &t) -> Graph
{
    sg_require_valid(t);
    std::vector<int> verts;
    for (int x = 0; x < t.n; ++x)
        if (x != t.zero && (sg_ann(t, x) - ElemSet::singleton(t.zero)).size() > 0)
            verts.push_back(x);
    std::vector<std::string> labels;
    for (int v : verts)
        labels.push_back(std::to_string(v));
    Graph g(std::move(labels));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (t.times(verts[a], verts[b]) == t.zero)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

auto lagrange_roy_poset(const SemigroupTable &t, TieBreak order) -> Poset
{
    if (!sg_is_reduced(t))
        throw NotReducedError("semigroup has a nonzero nilpotent element");
    const int n = t.n;
    std::vector<ElemSet> anns(n);
    for (int a = 0; a < n; ++a)
        anns[a] = sg_ann(t, a);
    const auto precedes = [&](int r, int s) { return order == TieBreak::ascending ? r <= s : r >= s; };
    std::vector<ElemSet> downs(n);
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r) {
            const bool strictly = anns[s].subset_of(anns[r]) && anns[s] != anns[r];
            if (strictly || (anns[r] == anns[s] && precedes(r, s)))
                downs[s].insert(r);
        }
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a)
        labels.push_back(std::to_string(a));
    Poset p = poset_from_downsets(std::move(downs)).with_labels(std::move(labels)).with_name("LR(S)");
    if (!is_meet_semilattice(p))
        throw NotMeetSemilatticeError("ordered semigroup is not a meet-semilattice");
    return p;
}

auto zn_multiplicative(int n) -> SemigroupTable
{
    if (n < 1 || n > max_elements)
        throw RangeError("modulus out of range");
    SemigroupTable t;
    t.n = n;
    t.zero = 0;
    if (n > 1)
        t.one = 1;
    t.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t.mul[a][b] = (a * b) % n;
    return t;
}

auto all_semigroups_with_identity(int n) -> std::vector<SemigroupTable>
{
    if (n < 2 || n > 5)
        throw BudgetError("semigroup sweep supports 2 <= n <= 5");
    // Free entries: products among the elements 2..n-1, i <= j.
    std::vector<std::pair<int, int>> free;
    for (int i = 2; i < n; ++i)
        for (int j = i; j < n; ++j)
            free.emplace_back(i, j);
    std::vector<SemigroupTable> out;
    std::vector<int> assign(free.size(), 0);
    for (;;) {
        SemigroupTable t;
        t.n = n;
        t.zero = 0;
        t.one = 1;
        t.mul.assign(n, std::vector<int>(n, 0));
        for (int x = 0; x < n; ++x) {
            t.mul[1][x] = x;
            t.mul[x][1] = x;
        }
        t.mul[0][1] = t.mul[1][0] = 0;
        for (std::size_t k = 0; k < free.size(); ++k) {
            auto [i, j] = free[k];
            t.mul[i][j] = t.mul[j][i] = assign[k];
        }
        if (sg_validate(t).valid())
            out.push_back(std::move(t));
        std::size_t k = 0;
        while (k < assign.size() && ++assign[k] == n)
            assign[k++] = 0;
        if (k == assign.size())
            break;
    }
    return out;
}

auto semigroup_to_json(const SemigroupTable &t) -> nlohmann::json
{
    nlohmann::json j;
    j["n"] = t.n;
    j["mul"] = t.mul;
    j["zero"] = t.zero;
    if (t.one)
        j["one"] = *t.one;
    return j;
}

auto semigroup_from_json(const nlohmann::json &j) -> SemigroupTable
{
    try {
        SemigroupTable t;
        t.n = j.at("n").get<int>();
        t.mul = j.at("mul").get<std::vector<std::vector<int>>>();
        t.zero = j.at("zero").get<int>();
        if (j.contains("one") && !j.at("one").is_null())
            t.one = j.at("one").get<int>();
        return t;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed semigroup JSON: ") + e.what());
    }
}

auto load_semigroup_file(const std::string &path) -> SemigroupTable
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return semigroup_from_json(nlohmann::json::parse(ss.str()));
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace zdp
