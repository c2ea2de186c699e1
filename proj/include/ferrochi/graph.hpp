#pragma once

#include <utility>
#include <vector>

#include "ferrochi/bipartite.hpp"
#include "ferrochi/poly.hpp"

namespace ferrochi {

// Plain graph on vertices 0..n-1 used by the bond-lattice and chromatic
// oracles.  Parallel edges are collapsed; a self-loop is remembered because
// it kills the chromatic polynomial.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized a < b, deduplicated
    bool has_loop = false;

    Graph() = default;
    Graph(int nverts, std::vector<std::pair<int, int>> e);

    int num_components() const;
    bool is_connected_subset(const std::vector<int>& vertices) const;
};

Graph graph_of(const BipartiteGraph& g);

// Chromatic polynomial by deletion and contraction on multigraph quotients.
// Contractions that produce a loop contribute zero.
UniPoly chromatic_deletion_contraction(const Graph& g);

}  // namespace ferrochi
