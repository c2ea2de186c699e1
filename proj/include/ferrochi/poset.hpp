#pragma once

#include <vector>

#include "ferrochi/bigint.hpp"
#include "ferrochi/graph.hpp"
#include "ferrochi/poly.hpp"

namespace ferrochi {

// Finite ranked poset with a bottom element, given by an explicit <= matrix.
// total_rank is the exponent normalizer of the characteristic polynomial:
//   chi(t) = sum_x mu(bottom, x) t^(total_rank - rank(x)).
// Intersection posets set it to the arrangement rank (maximal codimension);
// bond lattices set it to |V| - 1, the rank of the ambient partition lattice,
// which matches the arrangement convention on connected graphs and keeps
// ch(G) = t * chi for disconnected ones.
class RankedPoset {
public:
    RankedPoset(std::vector<int> ranks, std::vector<std::vector<bool>> leq, int bottom, int total_rank);

    int size() const { return static_cast<int>(ranks_.size()); }
    int bottom() const { return bottom_; }
    int rank(int x) const { return ranks_.at(static_cast<size_t>(x)); }
    int total_rank() const { return total_rank_; }
    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

    // Moebius values mu(bottom, x) for every element.
    std::vector<BigInt> mobius_from_bottom() const;

    UniPoly characteristic_polynomial() const;

    // Exhaustive check of sum_{a <= z <= b} mu(a, z) == [a == b]; quadratic in
    // size per pair, for test-scale posets only.
    bool mobius_identity_holds() const;

private:
    std::vector<int> ranks_;
    std::vector<std::vector<bool>> leq_;
    int bottom_;
    int total_rank_;
};

// Set partition in canonical form: blocks sorted by least element, elements
// ascending inside each block.
using SetPartition = std::vector<std::vector<int>>;

SetPartition canonical_partition(std::vector<std::vector<int>> blocks);
bool partition_refines(const SetPartition& finer, const SetPartition& coarser, int n);

struct BondLattice {
    RankedPoset poset;
    std::vector<SetPartition> elements;  // aligned with poset indices
};

// All partitions of the vertex set whose blocks induce connected subgraphs,
// ordered by refinement and ranked by |V| - #blocks.  Throws BoundError above
// max_vertices (Bell-number growth).
BondLattice bond_lattice(const Graph& g, int max_vertices = 9);

inline UniPoly char_poly_poset(const RankedPoset& p) { return p.characteristic_polynomial(); }

}  // namespace ferrochi
