#pragma once

#include "zdp/graph.hpp"
#include "zdp/poset.hpp"
#include "zdp/spectrum.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zdp {

/**
 * Everything the statement evaluators read, computed once per poset:
 * single-element annihilators and biannihilators, the spectrum, and Γ(P).
 */
class OrderAnalysis {
public:
    /// Throws NoZeroError.
    explicit OrderAnalysis(const Poset &p);

    auto poset() const -> const Poset & { return poset_; }
    auto zero() const -> int { return zero_; }
    auto zero_set() const -> ElemSet { return ElemSet::singleton(zero_); }
    auto ann(int x) const -> ElemSet { return ann_[x]; }
    auto biann(int x) const -> ElemSet { return biann_[x]; }
    /// Annihilator of an arbitrary set, from the cached singletons.
    auto ann_of_set(ElemSet a) const -> ElemSet;
    auto spectrum() const -> const SpectrumSpace & { return spectrum_; }
    auto zero_divisor_graph() const -> const Graph & { return gamma_; }
    /// Poset index of each Γ vertex.
    auto gamma_vertex(int v) const -> int { return gamma_vertices_[v]; }

private:
    Poset poset_;
    int zero_;
    std::vector<ElemSet> ann_;
    std::vector<ElemSet> biann_;
    SpectrumSpace spectrum_;
    Graph gamma_;
    std::vector<int> gamma_vertices_;
};

/// Outcome of one statement; witnesses use poset indices.
struct StatementResult {
    bool holds = false;
    /// (x, y) per x for the pointwise statements S1-S5, (vertex, complement) for S6/S7.
    std::vector<std::pair<int, int>> witnesses;
    /// First element (or Γ vertex, as a poset index) where the statement fails.
    std::optional<int> fails_at;
};

/// Whether y witnesses statement `s` (1..5) at x.
auto statement_witness_holds(const OrderAnalysis &a, int s, int x, int y) -> bool;

// S1..S9 with witnesses.
auto evaluate_s1(const OrderAnalysis &a) -> StatementResult;
auto evaluate_s2(const OrderAnalysis &a) -> StatementResult;
auto evaluate_s3(const OrderAnalysis &a) -> StatementResult;
auto evaluate_s4(const OrderAnalysis &a) -> StatementResult;
auto evaluate_s5(const OrderAnalysis &a) -> StatementResult;
auto evaluate_s6(const OrderAnalysis &a) -> StatementResult;
auto evaluate_s7(const OrderAnalysis &a) -> StatementResult;
auto evaluate_s8(const OrderAnalysis &a) -> StatementResult;
auto evaluate_s9(const OrderAnalysis &a) -> StatementResult;

/// S8 at one element: x^⊥⊥ is the intersection of y^⊥ over the y ≠ x with y^⊥ ⊇ x^⊥⊥.
auto weakly_quasi_complemented_at(const OrderAnalysis &a, int x) -> bool;

auto is_quasi_complemented(const Poset &p) -> bool;
auto s2_biannihilator(const Poset &p) -> bool;
auto s3_orthogonal_witness(const Poset &p) -> bool;
auto s4_closure_condition(const Poset &p) -> bool;
auto s5_minprime_condition(const Poset &p) -> bool;
auto is_weakly_quasi_complemented(const Poset &p) -> bool;
auto satisfies_ac(const Poset &p) -> bool;
auto satisfies_ac(const OrderAnalysis &a) -> bool;

struct ClassificationReport {
    std::string name;
    int n = 0;
    bool in_class = false;
    bool is_lattice = false;
    bool is_meet_semilattice = false;
    bool has_ac = false;
    std::array<bool, 9> s{};
    std::array<StatementResult, 9> statements{};

    /// Statement k, 1-based.
    auto statement(int k) const -> bool { return s.at(k - 1); }
};

auto classify(const Poset &p) -> ClassificationReport;
auto classify(const OrderAnalysis &a) -> ClassificationReport;

auto report_to_json(const ClassificationReport &r) -> nlohmann::json;
auto format_report(const ClassificationReport &r, const Poset &p) -> std::string;

} // namespace zdp
