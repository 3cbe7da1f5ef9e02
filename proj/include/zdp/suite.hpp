#pragma once

#include "zdp/enumeration.hpp"
#include "zdp/poset.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zdp {

/// Every property the suite asserts. Names are stable identifiers used by
/// `--checks` and in reports.
enum class Check {
    main_s1_to_s5,
    main_s3_implies_s6,
    main_s6_iff_s7,
    main_s1_implies_s8,
    main_s9_implies_s8,
    main_ac_s1_to_s8,
    main_lattice_s1_to_s9,
    weakqc_ac_s8_implies_s1,
    weakqc_class_s8,
    weakqc_class_ac_s1,
    weakqc_brute_force,
    graph_s6_iff_s7,
    graph_uc_literal,
    ann_galois,
    ann_finite_intersection,
    order_class_zero_distributive,
    order_prime_duality,
    spec_nonempty,
    spec_minimal_prime_test,
    spec_min_intersection,
    spec_interior_formula,
    spec_closure_formula,
    spec_closed_axioms,
    spec_min_semi_ideals,
    bridge_meet_class_zero_distributive,
    bridge_zero_distributive_ideal_lattice,
    bridge_pseudocomplemented_zero_distributive,
    bridge_pseudocomplemented_qc,
    bridge_lattice_qc_min_hausdorff,
    witness_reverify,
};

inline constexpr std::size_t check_count = static_cast<std::size_t>(Check::witness_reverify) + 1;

struct CheckInfo {
    Check id;
    std::string_view name;
    std::string_view description;
};

auto check_catalog() -> const std::array<CheckInfo, check_count> &;
auto to_string(Check c) -> std::string_view;
/// Exact names, or a group prefix such as "main" or "spec". Throws ParseError.
auto checks_from_names(const std::vector<std::string> &names) -> std::vector<Check>;

/// Example families the suite collects among posets outside the class.
enum class Mined {
    finite_intersection_outside_class,
    min_intersection_outside_class,
};

inline constexpr std::size_t mined_count = 2;
auto to_string(Mined m) -> std::string_view;

struct SuiteConfig {
    int max_n = 4;
    Dedup dedup = Dedup::canonical;
    int jobs = 1;
    std::uint64_t seed = 0;
    /// Extra posets drawn by `sample_poset` at size `sample_n` (0 disables).
    int samples = 0;
    int sample_n = 0;
    /// Empty means every check.
    std::vector<Check> checks;
    /// Posets without a least element get one adjoined instead of being skipped.
    bool adjoin_zero = false;
    /// Largest n for the Id(P) comparison; ideal lattices grow quickly.
    int ideal_lattice_max_n = 5;
    /// Largest n for the literal subset search behind weakqc.brute-force.
    int brute_force_max_n = 5;
    /// Largest subset size for ann.finite-intersection.
    int intersection_subset_max = 3;
    /// Cap on stored violations and on stored examples per mined family.
    int record_limit = 25;

    /// Throws RangeError / BudgetError.
    void validate() const;
    auto enabled(Check c) const -> bool;
};

/// How one poset fared on every check.
struct PosetOutcome {
    enum class Status : std::uint8_t { not_applicable, passed, failed };

    std::array<Status, check_count> status{};
    /// (check, witness text) for each failure.
    std::vector<std::pair<Check, std::string>> failures;
    std::array<bool, mined_count> mined{};
};

/**
 * Runs every enabled check on one poset with a least element. The suite
 * calls exactly this per poset, so a serialized violation reproduces by
 * parsing the poset and calling it again. Throws NoZeroError.
 */
auto check_poset(const Poset &p, const SuiteConfig &cfg) -> PosetOutcome;

struct CheckTally {
    long passed = 0;
    long failed = 0;
    long not_applicable = 0;
};

struct Violation {
    Check check;
    Poset poset;
    std::string witness;
};

struct MinedFamily {
    long count = 0;
    std::vector<Poset> examples;
};

struct SuiteReport {
    SuiteConfig config;
    long posets_enumerated = 0;
    long posets_checked = 0;
    long skipped_no_zero = 0;
    /// The one-element poset, where no second element exists to witness anything.
    long skipped_trivial = 0;
    std::array<CheckTally, check_count> tallies{};
    long violation_count = 0;
    /// The first `record_limit` violations in enumeration order.
    std::vector<Violation> violations;
    std::array<MinedFamily, mined_count> mined{};
};

auto run_suite(const SuiteConfig &cfg) -> SuiteReport;

/// Deterministic: no timings and no thread count.
auto suite_report_to_json(const SuiteReport &r) -> nlohmann::json;
auto format_suite_report(const SuiteReport &r) -> std::string;

/// Reduced identity semigroups on 2..max_n elements, checked against the
/// poset built from them.
struct SemigroupSweepReport {
    long tables = 0;
    long reduced = 0;
    long with_ac = 0;
    long graph_checks = 0;
    long agreement_checks = 0;
    std::vector<std::string> violations;
};

auto run_semigroup_sweep(int max_n) -> SemigroupSweepReport;

} // namespace zdp
