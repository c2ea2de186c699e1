#include "ferrochi/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ferrochi {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

Graph::Graph(int nverts, std::vector<std::pair<int, int>> e) : n(nverts) {
    std::set<std::pair<int, int>> dedup;
    for (auto [a, b] : e) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw DomainError("edge endpoint out of range");
        if (a == b) {
            has_loop = true;
            continue;
        }
        if (a > b) std::swap(a, b);
        dedup.insert({a, b});
    }
    edges.assign(dedup.begin(), dedup.end());
}

int Graph::num_components() const {
    UnionFind uf(n);
    int comps = n;
    for (const auto& [a, b] : edges)
        if (uf.unite(a, b)) --comps;
    return comps;
}

bool Graph::is_connected_subset(const std::vector<int>& vertices) const {
    if (vertices.empty()) return false;
    std::vector<int> index(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < vertices.size(); ++i) index[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(vertices.size()));
    int comps = static_cast<int>(vertices.size());
    for (const auto& [a, b] : edges) {
        const int ia = index[static_cast<size_t>(a)], ib = index[static_cast<size_t>(b)];
        if (ia >= 0 && ib >= 0 && uf.unite(ia, ib)) --comps;
    }
    return comps == 1;
}

Graph graph_of(const BipartiteGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [r, c] : g.edges()) edges.push_back({r, g.num_rows() + c});
    return Graph(g.num_vertices(), std::move(edges));
}

UniPoly chromatic_deletion_contraction(const Graph& g) {
    if (g.has_loop) return UniPoly();
    if (g.edges.empty()) return UniPoly::variable().pow(g.n);
    // Delete/contract the last edge.
    Graph del = g;
    auto [a, b] = del.edges.back();
    del.edges.pop_back();

    std::vector<std::pair<int, int>> contracted;
    for (const auto& [x, y] : del.edges) {
        auto map = [&](int v) { return v == b ? a : (v > b ? v - 1 : v); };
        contracted.push_back({map(x), map(y)});
    }
    Graph con(g.n - 1, std::move(contracted));
    return chromatic_deletion_contraction(del) - chromatic_deletion_contraction(con);
}

}  // namespace ferrochi
