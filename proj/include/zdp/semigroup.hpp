#pragma once

#include "zdp/elem_set.hpp"
#include "zdp/graph.hpp"
#include "zdp/poset.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zdp {

/// A finite commutative semigroup with zero given by its multiplication table.
struct SemigroupTable {
    int n = 0;
    std::vector<std::vector<int>> mul;
    int zero = 0;
    std::optional<int> one;

    auto times(int a, int b) const -> int { return mul[a][b]; }
};

struct SemigroupDiagnostics {
    bool shape_ok = true;
    bool commutative = true;
    bool associative = true;
    bool zero_absorbing = true;
    bool identity_ok = true;
    std::vector<std::string> messages;

    auto valid() const -> bool { return shape_ok && commutative && associative && zero_absorbing && identity_ok; }
};

/// Every violated table invariant, with the first offending entries.
auto sg_validate(const SemigroupTable &t) -> SemigroupDiagnostics;
/// Throws CommError, AssocError, AbsorbError (or SemigroupError for shape problems).
void sg_require_valid(const SemigroupTable &t);

auto sg_is_reduced(const SemigroupTable &t) -> bool;
/// ann(a) = {x : xa = 0}.
auto sg_ann(const SemigroupTable &t, int a) -> ElemSet;
auto sg_satisfies_ac(const SemigroupTable &t) -> bool;

/// G(S): nonzero zero-divisors, adjacent when their product is 0.
auto sg_graph(const SemigroupTable &t) -> Graph;

enum class TieBreak { ascending, descending };

/**
 * r <= s iff ann(s) ⊊ ann(r), or ann(r) = ann(s) and r precedes s in the
 * chosen well-order on indices. Throws NotReducedError for a table with
 * nonzero nilpotents and NotMeetSemilatticeError if the result is not a
 * meet-semilattice.
 */
auto lagrange_roy_poset(const SemigroupTable &t, TieBreak order = TieBreak::ascending) -> Poset;

/// Multiplication table of Z_n.
auto zn_multiplicative(int n) -> SemigroupTable;

/// Every commutative associative table on {0..n-1} with zero 0 and identity 1 (n >= 2).
auto all_semigroups_with_identity(int n) -> std::vector<SemigroupTable>;

/// {"n": int, "mul": [[...]], "zero": int, "one": int?}
auto semigroup_to_json(const SemigroupTable &t) -> nlohmann::json;
auto semigroup_from_json(const nlohmann::json &j) -> SemigroupTable;
auto load_semigroup_file(const std::string &path) -> SemigroupTable;

} // namespace zdp
