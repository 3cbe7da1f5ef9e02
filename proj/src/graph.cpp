#include "zdp/graph.hpp"

#include "zdp/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zdp {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels))
{
    adj_.assign(labels_.size(), Row(labels_.size()));
}

auto Graph::index_of(const std::string &label) const -> int
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw UnknownVertex(label);
    return static_cast<int>(it - labels_.begin());
}

void Graph::add_edge(int a, int b)
{
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
        throw RangeError("edge endpoint out of range");
    if (a == b)
        throw RangeError("self-loops are not allowed");
    adj_[a][b] = true;
    adj_[b][a] = true;
}

auto Graph::edge_count() const -> int
{
    int total = 0;
    for (const auto &r : adj_)
        total += static_cast<int>(r.count());
    return total / 2;
}

auto Graph::edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < vertex_count(); ++i)
        for (auto j = adj_[i].find_next(i); j != Row::npos; j = adj_[i].find_next(j))
            out.emplace_back(i, static_cast<int>(j));
    return out;
}

auto Graph::induced_subgraph(const std::vector<int> &vertices) const -> Graph
{
    std::vector<std::string> labels;
    for (int v : vertices)
        labels.push_back(labels_.at(v));
    Graph out(std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

auto operator==(const Graph &a, const Graph &b) -> bool
{
    if (a.vertex_count() != b.vertex_count())
        return false;
    const std::set<std::string> la(a.labels_.begin(), a.labels_.end());
    const std::set<std::string> lb(b.labels_.begin(), b.labels_.end());
    if (la != lb || static_cast<int>(la.size()) != a.vertex_count())
        return false;
    const auto edge_labels = [](const Graph &g) {
        std::set<std::pair<std::string, std::string>> out;
        for (auto [i, j] : g.edges())
            out.insert(std::minmax(g.labels_[i], g.labels_[j]));
        return out;
    };
    return edge_labels(a) == edge_labels(b);
}

auto gamma_vertices(const Poset &p) -> std::vector<int>
{
    const int z = p.require_zero();
    std::vector<int> out;
    for (int x = 0; x < p.size(); ++x) {
        if (x == z)
            continue;
        if ((annihilator(p, x) - ElemSet::singleton(z)).size() > 0)
            out.push_back(x);
    }
    return out;
}

auto gamma(const Poset &p) -> Graph
{
    const auto verts = gamma_vertices(p);
    std::vector<std::string> labels;
    for (int v : verts)
        labels.push_back(p.label(v));
    Graph g(std::move(labels));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const ElemSet ann = annihilator(p, verts[i]);
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (ann.contains(verts[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

auto is_complement_pair(const Graph &g, int a, int b) -> bool
{
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
        throw RangeError("vertex index out of range");
    return a != b && g.adjacent(a, b) && !g.neighbors(a).intersects(g.neighbors(b));
}

auto is_complement_pair(const Graph &g, const std::string &a, const std::string &b) -> bool
{
    return is_complement_pair(g, g.index_of(a), g.index_of(b));
}

auto complements_of(const Graph &g, int v) -> std::vector<int>
{
    std::vector<int> out;
    const auto &row = g.neighbors(v);
    for (auto u = row.find_first(); u != Graph::Row::npos; u = row.find_next(u))
        if (is_complement_pair(g, v, static_cast<int>(u)))
            out.push_back(static_cast<int>(u));
    return out;
}

auto is_complemented(const Graph &g) -> bool
{
    for (int v = 0; v < g.vertex_count(); ++v)
        if (complements_of(g, v).empty())
            return false;
    return true;
}

auto is_uniquely_complemented(const Graph &g) -> bool
{
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto comps = complements_of(g, v);
        if (comps.empty())
            return false;
        for (int c : comps)
            if (g.neighbors(c) != g.neighbors(comps.front()))
                return false;
    }
    return true;
}

auto is_uniquely_complemented_literal(const Graph &g) -> bool
{
    if (!is_complemented(g))
        return false;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (b == a || c == a || b == c)
                    continue;
                if (!is_complement_pair(g, a, b) || !is_complement_pair(g, a, c))
                    continue;
                for (int x = 0; x < n; ++x)
                    if (g.adjacent(x, b) != g.adjacent(x, c))
                        return false;
            }
    return true;
}

auto graph_complement(const Graph &g) -> Graph
{
    Graph out(g.labels());
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (!g.adjacent(i, j))
                out.add_edge(i, j);
    return out;
}

auto graph_join(const Graph &g, const Graph &h) -> Graph
{
    std::vector<std::string> labels = g.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (std::string l : h.labels()) {
        while (used.count(l) > 0)
            l += "'";
        used.insert(l);
        labels.push_back(l);
    }
    const int off = g.vertex_count();
    Graph out(std::move(labels));
    for (auto [i, j] : g.edges())
        out.add_edge(i, j);
    for (auto [i, j] : h.edges())
        out.add_edge(off + i, off + j);
    for (int i = 0; i < off; ++i)
        for (int j = 0; j < h.vertex_count(); ++j)
            out.add_edge(i, off + j);
    return out;
}

auto complete_graph(int t) -> Graph
{
    if (t < 0)
        throw RangeError("complete graph size must be nonnegative");
    std::vector<std::string> labels;
    for (int i = 0; i < t; ++i)
        labels.push_back("k" + std::to_string(i));
    Graph out(std::move(labels));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            out.add_edge(i, j);
    return out;
}

namespace {

auto quoted(const std::string &s) -> std::string
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

auto to_dot(const Graph &g, const std::string &name) -> std::string
{
    std::ostringstream os;
    os << "graph " << quoted(name) << " {\n";
    for (const auto &l : g.labels())
        os << "  " << quoted(l) << ";\n";
    for (auto [i, j] : g.edges())
        os << "  " << quoted(g.label(i)) << " -- " << quoted(g.label(j)) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace zdp
