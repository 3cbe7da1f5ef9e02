#include "zdp/applications.hpp"

#include "zdp/errors.hpp"

#include <numeric>

namespace zdp {

namespace {

auto is_prime(int q) -> bool
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

auto power(long base, int exp) -> long
{
    long out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
        if (out > (1L << 40))
            return out;
    }
    return out;
}

// Coordinates of vector v (base-q digits, most significant first).
auto digits(long v, int q, int dim) -> std::vector<int>
{
    std::vector<int> out(dim);
    for (int i = dim - 1; i >= 0; --i) {
        out[i] = static_cast<int>(v % q);
        v /= q;
    }
    return out;
}

auto support_mask(long v, int q, int dim) -> unsigned long
{
    unsigned long mask = 0;
    const auto d = digits(v, q, dim);
    for (int i = 0; i < dim; ++i)
        if (d[i] != 0)
            mask |= 1UL << i;
    return mask;
}

auto vector_label(long v, int q, int dim) -> std::string
{
    std::string out;
    const auto d = digits(v, q, dim);
    for (int i = 0; i < dim; ++i) {
        if (q > 10 && i > 0)
            out += ",";
        out += std::to_string(d[i]);
    }
    return out;
}

} // namespace

void ArtinianFactorSpec::validate() const
{
    if (chain_lengths.empty())
        throw RangeError("an Artinian factor spec needs at least one factor");
    for (int k : chain_lengths)
        if (k < 1)
            throw RangeError("chain lengths must be >= 1");
}

auto artinian_ideal_lattice(const ArtinianFactorSpec &spec) -> Poset
{
    spec.validate();
    long size = 1;
    for (int k : spec.chain_lengths) {
        size *= k + 1;
        if (size > max_elements)
            throw SizeError("ideal lattice exceeds " + std::to_string(max_elements) + " elements");
    }
    Poset out = chain(spec.chain_lengths.front() + 1);
    for (std::size_t i = 1; i < spec.chain_lengths.size(); ++i)
        out = direct_product(out, chain(spec.chain_lengths[i] + 1));
    if (spec.chain_lengths.size() == 1) {
        std::vector<std::string> labels;
        for (const auto &l : out.labels())
            labels.push_back("(" + l + ")");
        out = out.with_labels(std::move(labels));
    } else {
        // Flatten nested "((a,b),c)" into "(a,b,c)".
        std::vector<std::string> labels;
        for (std::string l : out.labels()) {
            std::string flat;
            for (char c : l)
                if (c != '(' && c != ')')
                    flat += c;
            labels.push_back("(" + flat + ")");
        }
        out = out.with_labels(std::move(labels));
    }
    return out.with_name("Id(R)");
}

auto cig(const ArtinianFactorSpec &spec) -> Graph { return gamma(dual(artinian_ideal_lattice(spec))); }

auto cig_direct(const ArtinianFactorSpec &spec) -> Graph
{
    const Poset lattice = artinian_ideal_lattice(spec);
    const int ring = *lattice.top();
    // Jacobson radical: meet of the maximal proper ideals (the coatoms).
    ElemSet radical = lattice.universe();
    for (int i = 0; i < lattice.size(); ++i)
        if (i != ring && (lattice.up(i) - ElemSet{i, ring}).empty())
            radical &= lattice.down(i);
    std::vector<int> verts;
    for (int i = 0; i < lattice.size(); ++i)
        if (i != ring && !lattice.down(i).subset_of(radical))
            verts.push_back(i);
    std::vector<std::string> labels;
    for (int v : verts)
        labels.push_back(lattice.label(v));
    Graph g(std::move(labels));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (join(lattice, verts[a], verts[b]) == ring)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

auto cig_is_complemented(const ArtinianFactorSpec &spec) -> bool { return is_complemented(cig(spec)); }

auto cg_zn(int n) -> Graph
{
    if (n < 2)
        throw RangeError("cg_zn needs n >= 2");
    if (n > ug_vertex_limit)
        throw SizeError("modulus too large for an explicit comaximal graph");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    Graph g(std::move(labels));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (std::gcd(std::gcd(x, n), std::gcd(y, n)) == 1)
                g.add_edge(x, y);
    return g;
}

void VectorSpaceSpec::validate() const
{
    if (!is_prime(q))
        throw RangeError("field size must be prime, got " + std::to_string(q));
    if (dim < 1)
        throw RangeError("dimension must be >= 1");
    if (dim > 30 || power(q, dim) > ug_vertex_limit)
        throw SizeError("q^dim exceeds the explicit-graph limit of " + std::to_string(ug_vertex_limit));
}

auto ug_vector_space(const VectorSpaceSpec &spec) -> Graph
{
    spec.validate();
    const long total = power(spec.q, spec.dim);
    const unsigned long full = (1UL << spec.dim) - 1;
    std::vector<std::string> labels;
    std::vector<unsigned long> supports;
    for (long v = 1; v < total; ++v) {
        labels.push_back(vector_label(v, spec.q, spec.dim));
        supports.push_back(support_mask(v, spec.q, spec.dim));
    }
    Graph g(std::move(labels));
    for (std::size_t a = 0; a < supports.size(); ++a)
        for (std::size_t b = a + 1; b < supports.size(); ++b)
            if ((supports[a] | supports[b]) == full)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

auto ug_full_support_vertices(const VectorSpaceSpec &spec) -> std::vector<int>
{
    spec.validate();
    const long total = power(spec.q, spec.dim);
    const unsigned long full = (1UL << spec.dim) - 1;
    std::vector<int> out;
    for (long v = 1; v < total; ++v)
        if (support_mask(v, spec.q, spec.dim) == full)
            out.push_back(static_cast<int>(v - 1));
    return out;
}

} // namespace zdp
