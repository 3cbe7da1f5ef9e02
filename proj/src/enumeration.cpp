#include "zdp/enumeration.hpp"

#include "zdp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_set>

namespace zdp {

namespace {

// Down-sets (including the empty one) of a naturally labeled order given by
// principal down-sets; index order is a linear extension.
void natural_down_sets(const std::vector<ElemSet> &downs, std::size_t k, ElemSet cur, std::vector<ElemSet> &out)
{
    if (k == downs.size()) {
        out.push_back(cur);
        return;
    }
    natural_down_sets(downs, k + 1, cur, out);
    const int e = static_cast<int>(k);
    if ((downs[k] - ElemSet::singleton(e)).subset_of(cur))
        natural_down_sets(downs, k + 1, cur | ElemSet::singleton(e), out);
}

auto all_down_sets(const std::vector<ElemSet> &downs) -> std::vector<ElemSet>
{
    std::vector<ElemSet> out;
    natural_down_sets(downs, 0, ElemSet{}, out);
    return out;
}

auto extend(const std::vector<ElemSet> &downs, ElemSet below) -> std::vector<ElemSet>
{
    auto next = downs;
    next.push_back(below | ElemSet::singleton(static_cast<int>(downs.size())));
    return next;
}

void grow_natural(std::vector<ElemSet> &downs, int n, std::vector<Poset> &out)
{
    if (static_cast<int>(downs.size()) == n) {
        out.push_back(poset_from_downsets(downs));
        return;
    }
    for (ElemSet d : all_down_sets(downs)) {
        downs.push_back(d | ElemSet::singleton(static_cast<int>(downs.size())));
        grow_natural(downs, n, out);
        downs.pop_back();
    }
}

auto downsets_of(const Poset &p) -> std::vector<ElemSet>
{
    std::vector<ElemSet> d(p.size());
    for (int i = 0; i < p.size(); ++i)
        d[i] = p.down(i);
    return d;
}

// Branch and bound over labelings that respect the invariant cells. The code
// is built block by block: block p holds, for each earlier position i, the
// bits [perm[i] < perm[p]] and [perm[p] < perm[i]], so a partial labeling
// fixes a prefix of the final code.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Poset &p) : p_(p), n_(p.size())
    {
        using Key = std::tuple<int, int, int, int>;
        std::vector<Key> keys(n_);
        std::vector<int> lower_covers(n_, 0);
        std::vector<int> upper_covers(n_, 0);
        for (auto [a, b] : p.covers()) {
            ++upper_covers[a];
            ++lower_covers[b];
        }
        for (int i = 0; i < n_; ++i)
            keys[i] = Key{p.down(i).size(), p.up(i).size(), lower_covers[i], upper_covers[i]};
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
        cell_of_position_.resize(n_);
        cell_members_.clear();
        for (int pos = 0; pos < n_; ++pos) {
            if (pos == 0 || keys[order[pos]] != keys[order[pos - 1]])
                cell_members_.emplace_back();
            cell_members_.back().push_back(order[pos]);
            cell_of_position_[pos] = static_cast<int>(cell_members_.size()) - 1;
        }
        total_bits_ = n_ * (n_ - 1);
        perm_.assign(n_, -1);
        best_perm_.assign(n_, -1);
    }

    auto run() -> std::uint64_t
    {
        if (n_ == 1) {
            best_perm_ = {0};
            return 0;
        }
        search(0, 0, ElemSet{});
        return best_;
    }

    auto best_perm() const -> const std::vector<int> & { return best_perm_; }

private:
    void search(int pos, std::uint64_t prefix, ElemSet used)
    {
        if (pos == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }
        for (int e : cell_members_[cell_of_position_[pos]]) {
            if (used.contains(e))
                continue;
            std::uint64_t code = prefix;
            for (int i = 0; i < pos; ++i) {
                code = (code << 1) | static_cast<std::uint64_t>(p_.lt(perm_[i], e));
                code = (code << 1) | static_cast<std::uint64_t>(p_.lt(e, perm_[i]));
            }
            const int bits = (pos + 1) * pos;
            if (have_best_ && bits > 0 && code > (best_ >> (total_bits_ - bits)))
                continue;
            perm_[pos] = e;
            search(pos + 1, code, used | ElemSet::singleton(e));
        }
    }

    const Poset &p_;
    int n_;
    int total_bits_ = 0;
    std::vector<int> cell_of_position_;
    std::vector<std::vector<int>> cell_members_;
    std::vector<int> perm_;
    std::vector<int> best_perm_;
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

void require_canonical_range(const Poset &p)
{
    if (p.size() > max_canonical_n)
        throw BudgetError("canonical codes support at most " + std::to_string(max_canonical_n) + " elements");
}

void check_budget(int max_n, Dedup dedup)
{
    if (max_n < 1)
        throw RangeError("max_n must be >= 1");
    const int limit = dedup == Dedup::canonical ? max_canonical_n : max_labeled_n;
    if (max_n > limit)
        throw BudgetError(std::string(to_string(dedup)) + " enumeration is limited to n <= " + std::to_string(limit));
}

auto canonical_reps(int n) -> std::vector<Poset>
{
    std::vector<Poset> reps{poset_from_downsets({ElemSet::singleton(0)})};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<std::uint64_t, Poset>> next;
        for (const Poset &r : reps) {
            const auto downs = downsets_of(r);
            for (ElemSet d : all_down_sets(downs)) {
                Poset cand = poset_from_downsets(extend(downs, d));
                CanonicalSearch search(cand);
                const std::uint64_t code = search.run();
                if (seen.insert(code).second)
                    next.emplace_back(code, permute(cand, search.best_perm()));
            }
        }
        std::sort(next.begin(), next.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        reps.clear();
        for (auto &[code, p] : next)
            reps.push_back(std::move(p));
    }
    return reps;
}

} // namespace

auto to_string(Dedup d) -> std::string_view { return d == Dedup::labeled ? "labeled" : "canonical"; }

auto dedup_from_string(std::string_view s) -> Dedup
{
    if (s == "labeled")
        return Dedup::labeled;
    if (s == "canonical")
        return Dedup::canonical;
    throw ParseError("dedup must be 'labeled' or 'canonical'");
}

auto relation_code(const Poset &p) -> std::uint64_t
{
    if (p.size() > 8)
        throw SizeError("relation codes need n <= 8");
    std::uint64_t code = 0;
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.lt(i, j))
                code |= std::uint64_t{1} << (i * n + j);
    return code;
}

auto poset_from_relation_code(int n, std::uint64_t code) -> Poset
{
    if (n < 1 || n > 8)
        throw SizeError("relation codes need 1 <= n <= 8");
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((code >> (i * n + j)) & 1U)
                rel.emplace_back(i, j);
    return build_poset(n, rel, RelationKind::le);
}

auto canonical_code(const Poset &p) -> std::uint64_t
{
    require_canonical_range(p);
    return CanonicalSearch(p).run();
}

auto canonical_form(const Poset &p) -> Poset
{
    require_canonical_range(p);
    CanonicalSearch search(p);
    search.run();
    return permute(p, search.best_perm());
}

auto naturally_labeled_posets(int n) -> std::vector<Poset>
{
    if (n < 1 || n > max_labeled_n + 1)
        throw BudgetError("natural labeling enumeration supports 1 <= n <= 8");
    std::vector<Poset> out;
    std::vector<ElemSet> downs;
    grow_natural(downs, n, out);
    return out;
}

auto labeled_relation_codes(int n) -> std::vector<std::uint64_t>
{
    check_budget(n, Dedup::labeled);
    std::unordered_set<std::uint64_t> codes;
    std::vector<int> perm(n);
    for (const Poset &p : naturally_labeled_posets(n)) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            codes.insert(relation_code(permute(p, perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<std::uint64_t> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

auto posets_of_size(int n, Dedup dedup) -> std::vector<Poset>
{
    check_budget(n, dedup);
    if (dedup == Dedup::canonical) {
        auto reps = canonical_reps(n);
        for (std::size_t i = 0; i < reps.size(); ++i)
            reps[i] = reps[i].with_name("P" + std::to_string(n) + "_" + std::to_string(i));
        return reps;
    }
    const auto sorted = labeled_relation_codes(n);
    std::vector<Poset> out;
    out.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        out.push_back(poset_from_relation_code(n, sorted[i]).with_name("L" + std::to_string(n) + "_" + std::to_string(i)));
    return out;
}

auto enumerate_posets(int max_n, Dedup dedup) -> std::vector<Poset>
{
    std::vector<Poset> out;
    for_each_poset(max_n, dedup, [&](const Poset &p) { out.push_back(p); });
    return out;
}

void for_each_poset(int max_n, Dedup dedup, const std::function<void(const Poset &)> &fn)
{
    check_budget(max_n, dedup);
    for (int n = 1; n <= max_n; ++n) {
        if (dedup == Dedup::canonical) {
            for (const Poset &p : posets_of_size(n, dedup))
                fn(p);
            continue;
        }
        // Labeled families are large; materialize one poset at a time.
        const auto codes = labeled_relation_codes(n);
        for (std::size_t i = 0; i < codes.size(); ++i)
            fn(poset_from_relation_code(n, codes[i]).with_name("L" + std::to_string(n) + "_" + std::to_string(i)));
    }
}

auto sample_poset(int n, std::mt19937_64 &rng) -> Poset
{
    if (n < 1 || n > max_elements)
        throw RangeError("sample size out of range");
    std::vector<ElemSet> downs{ElemSet::singleton(0)};
    while (static_cast<int>(downs.size()) < n) {
        const auto options = all_down_sets(downs);
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        downs = extend(downs, options[pick(rng)]);
    }
    return poset_from_downsets(std::move(downs));
}

} // namespace zdp
