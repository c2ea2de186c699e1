#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ferrochi/intset.hpp"
#include "ferrochi/partition.hpp"

namespace ferrochi {

// Vertex label with an optional superscript: plain vertices print as "3",
// duplicated columns of a composition graph as "3^(2)".  superscript == 0
// means none.
struct VertexLabel {
    int value = 0;
    int superscript = 0;

    std::string to_string() const;

    friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
        return a.value == b.value && a.superscript == b.superscript;
    }
    friend bool operator<(const VertexLabel& a, const VertexLabel& b) {
        return a.value != b.value ? a.value < b.value : a.superscript < b.superscript;
    }
};

// Labeled bipartite graph on a row side and a column side.  Row/column order
// is fixed at construction and edges are stored as (row index, col index)
// pairs.
class BipartiteGraph {
public:
    BipartiteGraph(std::vector<VertexLabel> rows, std::vector<VertexLabel> cols);

    const std::vector<VertexLabel>& rows() const { return rows_; }
    const std::vector<VertexLabel>& cols() const { return cols_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_cols() const { return static_cast<int>(cols_.size()); }
    int num_vertices() const { return num_rows() + num_cols(); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    void add_edge(int row, int col);
    bool has_edge(int row, int col) const;
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    int row_degree(int row) const;
    int col_degree(int col) const;

    // Staircase edge condition with both corner edges present.
    bool is_ferrers() const;

    // Edge sets as label pairs, for printing and tests.
    std::vector<std::pair<VertexLabel, VertexLabel>> labeled_edges() const;

private:
    std::vector<VertexLabel> rows_, cols_;
    std::set<std::pair<int, int>> edges_;
};

// Graph on V with an edge {odd, even} whenever odd < even; columns are the
// odd elements, rows the even ones.
BipartiteGraph gamma_graph(const PositiveIntSet& v);

// The Ferrers graph of a composition: columns are duplicated odd labels
// (2i-1)^(l) for l <= nu_i, rows are 2, 4, ..., 2n, with an edge whenever
// the odd value is below the even one.  Rejects nu_1 = 0, which would lose
// the bottom-left corner edge.  Also returns lambda(nu).
std::pair<IntegerPartition, BipartiteGraph> graph_from_composition(const WeakComposition& nu);

// Isomorphism of labeled bipartite graphs as abstract graphs (labels ignored,
// sides may swap).  Degree-multiset refinement plus backtracking; intended
// for the small graphs exercised in tests.
bool bipartite_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

}  // namespace ferrochi
