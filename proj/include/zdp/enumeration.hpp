#pragma once

#include "zdp/poset.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

namespace zdp {

enum class Dedup { labeled, canonical };

auto to_string(Dedup d) -> std::string_view;
auto dedup_from_string(std::string_view s) -> Dedup;

inline constexpr int max_canonical_n = 8;
inline constexpr int max_labeled_n = 7;

/// Row-major strict relation bits, bit (i*n + j) set iff i < j in the order.
auto relation_code(const Poset &p) -> std::uint64_t;
auto poset_from_relation_code(int n, std::uint64_t code) -> Poset;

/**
 * Isomorphism-invariant code: the least relation code over all relabelings
 * that list elements by a degree invariant. Two posets of size n <= 8 are
 * isomorphic iff their canonical codes agree.
 */
auto canonical_code(const Poset &p) -> std::uint64_t;
auto canonical_form(const Poset &p) -> Poset;

/// Posets on exactly n elements whose labels form a linear extension, each built
/// by adding element k as a new maximal element over a down-set of 0..k-1.
auto naturally_labeled_posets(int n) -> std::vector<Poset>;

/// Sorted relation codes of every labeled poset on exactly n elements.
auto labeled_relation_codes(int n) -> std::vector<std::uint64_t>;

/// All posets on exactly n elements, labeled or up to isomorphism, ordered by code.
auto posets_of_size(int n, Dedup dedup) -> std::vector<Poset>;

/// All posets on 1..max_n elements. Throws BudgetError beyond 8 (canonical) / 7 (labeled).
auto enumerate_posets(int max_n, Dedup dedup) -> std::vector<Poset>;
void for_each_poset(int max_n, Dedup dedup, const std::function<void(const Poset &)> &fn);

/// One walk down the insertion tree with a uniformly chosen down-set at each step.
auto sample_poset(int n, std::mt19937_64 &rng) -> Poset;

} // namespace zdp
