#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zdp {

/// Largest poset the library accepts; every ElemSet is one machine word.
inline constexpr int max_elements = 64;

/**
 * A subset of the elements {0..n-1} of some poset, stored as a bitmask.
 *
 * The set does not know its universe; operations that need one (complement,
 * full set) take the element count explicitly.
 */
class ElemSet {
public:
    using Word = std::uint64_t;

    constexpr ElemSet() = default;
    constexpr explicit ElemSet(Word bits) : bits_(bits) {}
    ElemSet(std::initializer_list<int> members)
    {
        for (int m : members)
            insert(m);
    }

    static constexpr auto full(int n) -> ElemSet
    {
        return ElemSet(n >= 64 ? ~Word{0} : ((Word{1} << n) - 1));
    }

    static constexpr auto singleton(int i) -> ElemSet { return ElemSet(Word{1} << i); }

    static auto from_indices(const std::vector<int> &indices) -> ElemSet
    {
        ElemSet s;
        for (int i : indices)
            s.insert(i);
        return s;
    }

    constexpr auto bits() const -> Word { return bits_; }
    constexpr auto contains(int i) const -> bool { return (bits_ >> i) & 1U; }
    constexpr auto empty() const -> bool { return bits_ == 0; }
    constexpr auto size() const -> int { return std::popcount(bits_); }

    constexpr void insert(int i) { bits_ |= Word{1} << i; }
    constexpr void erase(int i) { bits_ &= ~(Word{1} << i); }

    constexpr auto subset_of(ElemSet other) const -> bool { return (bits_ & ~other.bits_) == 0; }
    constexpr auto intersects(ElemSet other) const -> bool { return (bits_ & other.bits_) != 0; }

    /// Complement relative to {0..n-1}.
    constexpr auto complement(int n) const -> ElemSet { return ElemSet(~bits_ & full(n).bits_); }

    /// Lowest member; undefined on the empty set.
    constexpr auto first() const -> int { return std::countr_zero(bits_); }

    auto to_vector() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(size());
        for (Word b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    /// Calls f(i) for every member in increasing order.
    template <typename F>
    void for_each(F &&f) const
    {
        for (Word b = bits_; b != 0; b &= b - 1)
            f(std::countr_zero(b));
    }

    constexpr auto operator&=(ElemSet o) -> ElemSet &
    {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr auto operator|=(ElemSet o) -> ElemSet &
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr auto operator-=(ElemSet o) -> ElemSet &
    {
        bits_ &= ~o.bits_;
        return *this;
    }

    friend constexpr auto operator&(ElemSet a, ElemSet b) -> ElemSet { return ElemSet(a.bits_ & b.bits_); }
    friend constexpr auto operator|(ElemSet a, ElemSet b) -> ElemSet { return ElemSet(a.bits_ | b.bits_); }
    friend constexpr auto operator-(ElemSet a, ElemSet b) -> ElemSet { return ElemSet(a.bits_ & ~b.bits_); }
    friend constexpr auto operator==(ElemSet a, ElemSet b) -> bool = default;

private:
    Word bits_ = 0;
};

/// Lexicographic order on the sorted member lists ({0} < {0,1} < {0,2} < {1}).
inline auto lex_less(ElemSet a, ElemSet b) -> bool
{
    while (!a.empty() && !b.empty()) {
        int x = a.first();
        int y = b.first();
        if (x != y)
            return x < y;
        a.erase(x);
        b.erase(y);
    }
    return a.empty() && !b.empty();
}

struct LexLess {
    auto operator()(ElemSet a, ElemSet b) const -> bool { return lex_less(a, b); }
};

} // namespace zdp
