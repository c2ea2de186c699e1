#include "ferrochi/dperm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ferrochi {

DPermutation::DPermutation(const PositiveIntSet& v, const std::map<int, int>& image) {
    if (static_cast<int>(image.size()) != v.size()) throw DomainError("image size mismatch");
    std::map<int, bool> used;
    for (int e : v.elements()) used[e] = false;
    for (int e : v.elements()) {
        if (used[e]) continue;
        std::vector<int> cycle;
        int cur = e;
        do {
            cycle.push_back(cur);
            used[cur] = true;
            auto it = image.find(cur);
            if (it == image.end()) throw DomainError("image is not a permutation of V");
            cur = it->second;
        } while (cur != e);
        // Rotate so the largest element leads.
        auto maxit = std::max_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), maxit, cycle.end());
        cycles_.push_back(std::move(cycle));
    }
    std::sort(cycles_.begin(), cycles_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    for (const auto& c : cycles_) {
        for (size_t i = 0; i < c.size(); ++i) {
            const int from = c[i], to = c[(i + 1) % c.size()];
            if (from % 2 == 1 && to < from) throw DomainError("not a D-permutation: sigma(odd) < odd");
            if (from % 2 == 0 && to > from) throw DomainError("not a D-permutation: sigma(even) > even");
        }
    }
}

int DPermutation::size() const {
    int s = 0;
    for (const auto& c : cycles_) s += static_cast<int>(c.size());
    return s;
}

int DPermutation::image(int i) const {
    for (const auto& c : cycles_)
        for (size_t k = 0; k < c.size(); ++k)
            if (c[k] == i) return c[(k + 1) % c.size()];
    throw DomainError("element not in permutation domain");
}

int DPermutation::even_fixed_point_count() const {
    int count = 0;
    for (const auto& c : cycles_)
        if (c.size() == 1 && c[0] % 2 == 0) ++count;
    return count;
}

SetPartition DPermutation::cycle_partition(const PositiveIntSet& v) const {
    std::map<int, int> pos;
    for (int i = 0; i < v.size(); ++i) pos[v.elements()[static_cast<size_t>(i)]] = i;
    std::vector<std::vector<int>> blocks;
    for (const auto& c : cycles_) {
        std::vector<int> b;
        for (int e : c) b.push_back(pos.at(e));
        blocks.push_back(std::move(b));
    }
    return canonical_partition(std::move(blocks));
}

std::string DPermutation::to_string() const {
    std::ostringstream os;
    for (const auto& c : cycles_) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

namespace {

void dperm_backtrack(const std::vector<int>& elems, size_t pos, std::vector<bool>& used,
                     std::map<int, int>& image, const PositiveIntSet& v,
                     std::vector<DPermutation>& out) {
    if (pos == elems.size()) {
        out.emplace_back(v, image);
        return;
    }
    const int e = elems[pos];
    for (size_t j = 0; j < elems.size(); ++j) {
        if (used[j]) continue;
        const int target = elems[j];
        if (e % 2 == 1 && target < e) continue;
        if (e % 2 == 0 && target > e) continue;
        used[j] = true;
        image[e] = target;
        dperm_backtrack(elems, pos + 1, used, image, v, out);
        used[j] = false;
    }
    image.erase(e);
}

}  // namespace

std::vector<DPermutation> enumerate_dperms(const PositiveIntSet& v, int bound) {
    if (v.size() > bound)
        throw BoundError("D-permutation enumeration limited to " + std::to_string(bound) + " elements");
    std::vector<DPermutation> out;
    if (v.empty()) {
        out.emplace_back(v, std::map<int, int>{});
        return out;
    }
    std::vector<bool> used(static_cast<size_t>(v.size()), false);
    std::map<int, int> image;
    dperm_backtrack(v.elements(), 0, used, image, v, out);
    std::sort(out.begin(), out.end());
    return out;
}

UniPoly char_poly_via_dperms(const PositiveIntSet& v, int bound) {
    UniPoly chi;
    for (const auto& sigma : enumerate_dperms(v, bound)) {
        const int c = sigma.cycle_count();
        chi += UniPoly::monomial(c - 1, (c % 2 == 0) ? 1 : -1);
    }
    if (v.size() % 2 == 1) chi = -chi;
    return chi;
}

UniPoly chromatic_via_dperms(const PositiveIntSet& v, int bound) {
    UniPoly ch;
    for (const auto& sigma : enumerate_dperms(v, bound)) {
        const int c = sigma.cycle_count();
        ch += UniPoly::monomial(c, (c % 2 == 0) ? 1 : -1);
    }
    if (v.size() % 2 == 1) ch = -ch;
    return ch;
}

std::map<std::pair<int, int>, BigInt> dperm_cycle_statistics(const PositiveIntSet& v, int bound) {
    std::map<std::pair<int, int>, BigInt> table;
    for (const auto& sigma : enumerate_dperms(v, bound)) {
        const int efp = sigma.even_fixed_point_count();
        const int other = sigma.cycle_count() - efp;
        table[{efp, other}] += 1;
    }
    return table;
}

QLabeledDPermutation::QLabeledDPermutation(DPermutation perm, int two_r, std::map<int, int> labels)
    : perm_(std::move(perm)), two_r_(two_r), labels_(std::move(labels)) {}

std::optional<int> QLabeledDPermutation::label_of(int entry) const {
    auto it = labels_.find(entry);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

namespace {

// Entries of the cycle that stay unlabeled, plus the forced label 0 on the
// cycle maximum.  Free entries take any of the q labels.
struct CycleLabelPlan {
    std::vector<int> forced_zero;
    std::vector<int> free_entries;
};

CycleLabelPlan plan_cycle_labels(const std::vector<int>& cycle, int two_r) {
    CycleLabelPlan plan;
    const bool has_top = std::find(cycle.begin(), cycle.end(), two_r) != cycle.end();
    if (!has_top) {
        // Canonical form leads with the maximum.
        plan.forced_zero.push_back(cycle.front());
        for (size_t i = 1; i < cycle.size(); ++i) plan.free_entries.push_back(cycle[i]);
        return plan;
    }
    // Cycle containing 2r: canonical form is (2r, w), so w is the stored
    // order after the head.  Right-to-left minima of w stay unlabeled.
    plan.forced_zero.push_back(two_r);
    std::vector<int> w(cycle.begin() + 1, cycle.end());
    std::vector<bool> is_min(w.size(), false);
    int running = -1;
    for (size_t i = w.size(); i-- > 0;) {
        if (running < 0 || w[i] < running) {
            is_min[i] = true;
            running = w[i];
        }
    }
    for (size_t i = 0; i < w.size(); ++i)
        if (!is_min[i]) plan.free_entries.push_back(w[i]);
    return plan;
}

}  // namespace

std::vector<QLabeledDPermutation> enumerate_qlabeled_dperms(const PositiveIntSet& v, int r, int q,
                                                            int bound) {
    if (q < 1) throw DomainError("label count q must be >= 1");
    if (!v.empty() && v.max() > 2 * r) throw DomainError("V must be contained in [2r]");
    std::vector<QLabeledDPermutation> out;
    for (const auto& sigma : enumerate_dperms(v, bound)) {
        std::map<int, int> base;
        std::vector<int> free_entries;
        for (const auto& cycle : sigma.cycles()) {
            const auto plan = plan_cycle_labels(cycle, 2 * r);
            for (int e : plan.forced_zero) base[e] = 0;
            free_entries.insert(free_entries.end(), plan.free_entries.begin(), plan.free_entries.end());
        }
        std::sort(free_entries.begin(), free_entries.end());
        // Odometer over label assignments for the free entries.
        std::vector<int> digits(free_entries.size(), 0);
        while (true) {
            std::map<int, int> labels = base;
            for (size_t i = 0; i < free_entries.size(); ++i) labels[free_entries[i]] = digits[i];
            out.emplace_back(sigma, 2 * r, std::move(labels));
            size_t i = 0;
            while (i < digits.size() && digits[i] == q - 1) digits[i++] = 0;
            if (i == digits.size()) break;
            ++digits[i];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct ForestShape {
    std::vector<std::pair<int, int>> edges;
    int components;
};

// Components rooted at their largest vertex must alternate: odd internal
// vertices below all descendants with even children, even internal vertices
// above all descendants with odd children.
bool is_id_forest(const std::vector<int>& verts, const std::vector<std::pair<int, int>>& edges) {
    std::map<int, std::vector<int>> adj;
    for (int v : verts) adj[v];
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<int, bool> visited;
    for (int v : verts) visited[v] = false;
    // Descending vertex order guarantees each component is met at its root.
    for (auto it = adj.rbegin(); it != adj.rend(); ++it) {
        const int root = it->first;
        if (visited[root]) continue;
        std::vector<std::pair<int, int>> stack{{root, 0}};
        std::map<int, int> parent{{root, 0}};
        std::vector<int> order;
        while (!stack.empty()) {
            auto [u, p] = stack.back();
            stack.pop_back();
            visited[u] = true;
            order.push_back(u);
            for (int w : adj[u])
                if (w != p) {
                    parent[w] = u;
                    stack.push_back({w, u});
                }
        }
        // Subtree extrema via reverse discovery order.
        std::map<int, int> sub_min, sub_max;
        for (int u : order) {
            sub_min[u] = u;
            sub_max[u] = u;
        }
        for (auto oit = order.rbegin(); oit != order.rend(); ++oit) {
            const int u = *oit;
            if (u == root) continue;
            sub_min[parent[u]] = std::min(sub_min[parent[u]], sub_min[u]);
            sub_max[parent[u]] = std::max(sub_max[parent[u]], sub_max[u]);
        }
        for (int u : order) {
            std::vector<int> children;
            for (int w : adj[u])
                if (u == root || w != parent[u]) children.push_back(w);
            if (children.empty()) continue;  // leaves are unconstrained
            if (u % 2 == 1) {
                if (sub_min[u] != u) return false;
                for (int w : children)
                    if (w % 2 != 0) return false;
            } else {
                if (sub_max[u] != u) return false;
                for (int w : children)
                    if (w % 2 != 1) return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<IDForest> enumerate_qlabeled_id_forests(const PositiveIntSet& v, int r, int q, int bound) {
    if (q < 1) throw DomainError("label count q must be >= 1");
    if (!v.empty() && v.max() > 2 * r) throw DomainError("V must be contained in [2r]");
    if (v.size() > bound)
        throw BoundError("ID forest enumeration limited to " + std::to_string(bound) + " elements");

    // Candidate edges are those of the odd-even graph on V.
    std::vector<std::pair<int, int>> candidates;
    for (int o : v.odd_part())
        for (int e : v.even_part())
            if (o < e) candidates.push_back({o, e});
    if (candidates.size() > 22) throw BoundError("too many candidate edges for forest enumeration");

    std::vector<ForestShape> shapes;
    for (size_t mask = 0; mask < (size_t{1} << candidates.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < candidates.size(); ++i)
            if (mask & (size_t{1} << i)) edges.push_back(candidates[i]);
        // Acyclicity.
        std::map<int, int> comp;
        for (int x : v.elements()) comp[x] = x;
        std::function<int(int)> find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        bool forest = true;
        int ncomp = v.size();
        for (const auto& [a, b] : edges) {
            const int ra = find(a), rb = find(b);
            if (ra == rb) {
                forest = false;
                break;
            }
            comp[ra] = rb;
            --ncomp;
        }
        if (!forest) continue;
        if (!is_id_forest(v.elements(), edges)) continue;
        shapes.push_back({edges, ncomp});
    }

    std::vector<IDForest> out;
    for (const auto& shape : shapes) {
        std::vector<std::pair<int, int>> labelable;
        for (const auto& e : shape.edges)
            if (e.first != 2 * r && e.second != 2 * r) labelable.push_back(e);
        std::vector<int> digits(labelable.size(), 0);
        while (true) {
            IDForest f;
            f.edges = shape.edges;
            f.component_count = shape.components;
            for (size_t i = 0; i < labelable.size(); ++i) f.labels[labelable[i]] = digits[i];
            out.push_back(std::move(f));
            size_t i = 0;
            while (i < digits.size() && digits[i] == q - 1) digits[i++] = 0;
            if (i == digits.size()) break;
            ++digits[i];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PositiveIntSet canonical_v_of_composition(const WeakComposition& nu) {
    return v_from_partition(lambda_of_composition(nu));
}

UniPoly dowling_char_via_enumeration(const WeakComposition& nu, int q, int bound) {
    const PositiveIntSet v = canonical_v_of_composition(nu);
    const int r = v.max() / 2;
    UniPoly chi;
    for (const auto& sigma : enumerate_qlabeled_dperms(v, r, q, bound)) {
        const int c = sigma.cycle_count();
        chi += UniPoly::monomial(c - 1, (c % 2 == 0) ? 1 : -1);
    }
    if (v.size() % 2 == 1) chi = -chi;
    return chi;
}

}  // namespace ferrochi
