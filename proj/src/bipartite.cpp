#include "ferrochi/bipartite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ferrochi {

std::string VertexLabel::to_string() const {
    std::ostringstream os;
    os << value;
    if (superscript > 0) os << "^(" << superscript << ")";
    return os.str();
}

BipartiteGraph::BipartiteGraph(std::vector<VertexLabel> rows, std::vector<VertexLabel> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {}

void BipartiteGraph::add_edge(int row, int col) {
    if (row < 0 || row >= num_rows() || col < 0 || col >= num_cols())
        throw DomainError("edge endpoint out of range");
    edges_.insert({row, col});
}

bool BipartiteGraph::has_edge(int row, int col) const { return edges_.count({row, col}) > 0; }

int BipartiteGraph::row_degree(int row) const {
    int d = 0;
    for (const auto& [r, c] : edges_)
        if (r == row) ++d;
    return d;
}

int BipartiteGraph::col_degree(int col) const {
    int d = 0;
    for (const auto& [r, c] : edges_)
        if (c == col) ++d;
    return d;
}

bool BipartiteGraph::is_ferrers() const {
    if (num_rows() == 0 || num_cols() == 0) return false;
    if (!has_edge(0, 0)) return false;
    if (!has_edge(num_rows() - 1, num_cols() - 1)) return false;
    for (const auto& [r, c] : edges_)
        for (int r2 = r; r2 < num_rows(); ++r2)
            for (int c2 = 0; c2 <= c; ++c2)
                if (!has_edge(r2, c2)) return false;
    return true;
}

std::vector<std::pair<VertexLabel, VertexLabel>> BipartiteGraph::labeled_edges() const {
    std::vector<std::pair<VertexLabel, VertexLabel>> out;
    for (const auto& [r, c] : edges_)
        out.push_back({rows_[static_cast<size_t>(r)], cols_[static_cast<size_t>(c)]});
    return out;
}

BipartiteGraph gamma_graph(const PositiveIntSet& v) {
    const auto odds = v.odd_part();
    const auto evens = v.even_part();
    std::vector<VertexLabel> rows, cols;
    for (int e : evens) rows.push_back({e, 0});
    for (int o : odds) cols.push_back({o, 0});
    BipartiteGraph g(std::move(rows), std::move(cols));
    for (size_t r = 0; r < evens.size(); ++r)
        for (size_t c = 0; c < odds.size(); ++c)
            if (odds[c] < evens[r]) g.add_edge(static_cast<int>(r), static_cast<int>(c));
    return g;
}

std::pair<IntegerPartition, BipartiteGraph> graph_from_composition(const WeakComposition& nu) {
    if (nu.parts().front() < 1) throw DomainError("composition graph requires nu_1 >= 1");
    const int n = nu.length();
    std::vector<VertexLabel> rows, cols;
    for (int j = 1; j <= n; ++j) rows.push_back({2 * j, 0});
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= nu.parts()[static_cast<size_t>(i - 1)]; ++l) cols.push_back({2 * i - 1, l});
    BipartiteGraph g(std::move(rows), std::move(cols));
    for (int r = 0; r < g.num_rows(); ++r)
        for (int c = 0; c < g.num_cols(); ++c)
            if (g.cols()[static_cast<size_t>(c)].value < g.rows()[static_cast<size_t>(r)].value)
                g.add_edge(r, c);
    return {lambda_of_composition(nu), g};
}

namespace {

// Iteratively refined vertex colors: start from (side, degree), then hash in
// the sorted multiset of neighbor colors until stable.
std::vector<int> refine_colors(int nr, int nc, const std::set<std::pair<int, int>>& edges, bool swap_sides) {
    const int n = nr + nc;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [r, c] : edges) {
        adj[static_cast<size_t>(r)].push_back(nr + c);
        adj[static_cast<size_t>(nr + c)].push_back(r);
    }
    std::vector<int> color(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const bool row_side = i < nr;
        const int side = (row_side != swap_sides) ? 0 : 1;
        color[static_cast<size_t>(i)] = 2 * static_cast<int>(adj[static_cast<size_t>(i)].size()) + side;
    }
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next_ids;
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<int> nb;
            for (int j : adj[static_cast<size_t>(i)]) nb.push_back(color[static_cast<size_t>(j)]);
            std::sort(nb.begin(), nb.end());
            sig[static_cast<size_t>(i)] = {color[static_cast<size_t>(i)], std::move(nb)};
            next_ids.emplace(sig[static_cast<size_t>(i)], 0);
        }
        int id = 0;
        for (auto& [key, val] : next_ids) val = id++;
        std::vector<int> next(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) next[static_cast<size_t>(i)] = next_ids[sig[static_cast<size_t>(i)]];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool extend_mapping(int i, const std::vector<int>& ca, const std::vector<int>& cb,
                    const std::vector<std::vector<bool>>& adj_a, const std::vector<std::vector<bool>>& adj_b,
                    std::vector<int>& map_ab, std::vector<bool>& used_b) {
    const int n = static_cast<int>(ca.size());
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
        if (used_b[static_cast<size_t>(j)] || ca[static_cast<size_t>(i)] != cb[static_cast<size_t>(j)]) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k)
            if (adj_a[static_cast<size_t>(i)][static_cast<size_t>(k)] !=
                adj_b[static_cast<size_t>(j)][static_cast<size_t>(map_ab[static_cast<size_t>(k)])])
                ok = false;
        if (!ok) continue;
        map_ab[static_cast<size_t>(i)] = j;
        used_b[static_cast<size_t>(j)] = true;
        if (extend_mapping(i + 1, ca, cb, adj_a, adj_b, map_ab, used_b)) return true;
        used_b[static_cast<size_t>(j)] = false;
    }
    return false;
}

std::vector<std::vector<bool>> dense_adjacency(int nr, int nc, const std::set<std::pair<int, int>>& edges) {
    const int n = nr + nc;
    std::vector<std::vector<bool>> adj(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (const auto& [r, c] : edges) {
        adj[static_cast<size_t>(r)][static_cast<size_t>(nr + c)] = true;
        adj[static_cast<size_t>(nr + c)][static_cast<size_t>(r)] = true;
    }
    return adj;
}

bool isomorphic_with_orientation(const BipartiteGraph& a, const BipartiteGraph& b, bool swap_b) {
    auto ca = refine_colors(a.num_rows(), a.num_cols(), a.edges(), false);
    auto cb = refine_colors(b.num_rows(), b.num_cols(), b.edges(), swap_b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    auto adj_a = dense_adjacency(a.num_rows(), a.num_cols(), a.edges());
    auto adj_b = dense_adjacency(b.num_rows(), b.num_cols(), b.edges());
    std::vector<int> map_ab(ca.size(), -1);
    std::vector<bool> used_b(ca.size(), false);
    return extend_mapping(0, ca, cb, adj_a, adj_b, map_ab, used_b);
}

}  // namespace

bool bipartite_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    if (a.num_rows() == b.num_rows() && a.num_cols() == b.num_cols() &&
        isomorphic_with_orientation(a, b, false))
        return true;
    if (a.num_rows() == b.num_cols() && a.num_cols() == b.num_rows() &&
        isomorphic_with_orientation(a, b, true))
        return true;
    return false;
}

}  // namespace ferrochi
