#pragma once

#include "zdp/graph.hpp"
#include "zdp/poset.hpp"

#include <vector>

namespace zdp {

/// An Artinian ring by the shape of its ideal lattice: the i-th local factor
/// has an ideal chain with chain_lengths[i] + 1 elements.
struct ArtinianFactorSpec {
    std::vector<int> chain_lengths;

    /// Throws RangeError unless nonempty with every length >= 1.
    void validate() const;
};

/// Id(R) as the product of the factor chains; labels are coordinate tuples.
auto artinian_ideal_lattice(const ArtinianFactorSpec &spec) -> Poset;

/// Comaximal ideal graph, built as Γ of the dual ideal lattice.
auto cig(const ArtinianFactorSpec &spec) -> Graph;
/// The same graph read off its ring definition: proper ideals outside the
/// Jacobson radical, adjacent when their sum is the whole ring.
auto cig_direct(const ArtinianFactorSpec &spec) -> Graph;
auto cig_is_complemented(const ArtinianFactorSpec &spec) -> bool;

/// Comaximal graph of Z_n on all ring elements: x ~ y iff gcd(x, y, n) = 1.
auto cg_zn(int n) -> Graph;

struct VectorSpaceSpec {
    int q = 2;
    int dim = 1;

    void validate() const;
};

/// Largest q^dim accepted by ug_vector_space.
inline constexpr long ug_vertex_limit = 1L << 12;

/// Nonzero component union graph with respect to the standard basis.
auto ug_vector_space(const VectorSpaceSpec &spec) -> Graph;
/// Vertices of the UG graph whose support is the whole basis.
auto ug_full_support_vertices(const VectorSpaceSpec &spec) -> std::vector<int>;

} // namespace zdp
