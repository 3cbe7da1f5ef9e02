#pragma once

#include "zdp/poset.hpp"

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <utility>
#include <vector>

namespace zdp {

/// Simple undirected graph on labeled vertices, adjacency rows as bitsets.
class Graph {
public:
    using Row = boost::dynamic_bitset<>;

    Graph() = default;
    explicit Graph(std::vector<std::string> labels);

    auto vertex_count() const -> int { return static_cast<int>(labels_.size()); }
    auto labels() const -> const std::vector<std::string> & { return labels_; }
    auto label(int v) const -> const std::string & { return labels_[v]; }
    /// Throws UnknownVertex.
    auto index_of(const std::string &label) const -> int;

    void add_edge(int a, int b);
    auto adjacent(int a, int b) const -> bool { return adj_[a][b]; }
    auto neighbors(int v) const -> const Row & { return adj_[v]; }
    auto degree(int v) const -> int { return static_cast<int>(adj_[v].count()); }
    auto edge_count() const -> int;
    /// Edges (i, j) with i < j in lexicographic index order.
    auto edges() const -> std::vector<std::pair<int, int>>;

    auto induced_subgraph(const std::vector<int> &vertices) const -> Graph;

    /// Equal as labeled graphs: same label set and the same edges between labels.
    friend auto operator==(const Graph &a, const Graph &b) -> bool;

private:
    std::vector<std::string> labels_;
    std::vector<Row> adj_;
};

/// Γ(P): nonzero zero-divisors, adjacent when their lower cone is {0}.
auto gamma(const Poset &p) -> Graph;
/// Poset indices of Γ(P)'s vertices, in vertex order.
auto gamma_vertices(const Poset &p) -> std::vector<int>;

/// a ⊥ b: adjacent with no common neighbour.
auto is_complement_pair(const Graph &g, int a, int b) -> bool;
auto is_complement_pair(const Graph &g, const std::string &a, const std::string &b) -> bool;

/// Complements of v, in vertex order.
auto complements_of(const Graph &g, int v) -> std::vector<int>;

auto is_complemented(const Graph &g) -> bool;
/// Complemented, and all complements of each vertex share one neighbourhood.
auto is_uniquely_complemented(const Graph &g) -> bool;
/// Same property read off the definition's quantifier over all triples a⊥b, a⊥c.
auto is_uniquely_complemented_literal(const Graph &g) -> bool;

auto graph_complement(const Graph &g) -> Graph;
/// Disjoint union plus every edge between the two sides. Clashing labels of
/// `h` get "'" appended until unique.
auto graph_join(const Graph &g, const Graph &h) -> Graph;
auto complete_graph(int t) -> Graph;

/// Undirected DOT; quoted labels, edges in lexicographic index order.
auto to_dot(const Graph &g, const std::string &name = "G") -> std::string;

} // namespace zdp
