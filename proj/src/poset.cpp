#include "ferrochi/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ferrochi/errors.hpp"

namespace ferrochi {

RankedPoset::RankedPoset(std::vector<int> ranks, std::vector<std::vector<bool>> leq, int bottom,
                         int total_rank)
    : ranks_(std::move(ranks)), leq_(std::move(leq)), bottom_(bottom), total_rank_(total_rank) {
    for (int x = 0; x < size(); ++x)
        if (!leq_[static_cast<size_t>(bottom_)][static_cast<size_t>(x)])
            throw DomainError("poset bottom element is not below every element");
}

std::vector<BigInt> RankedPoset::mobius_from_bottom() const {
    const int n = size();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank(a) < rank(b); });
    std::vector<BigInt> mu(static_cast<size_t>(n), 0);
    for (int x : order) {
        if (x == bottom_) {
            mu[static_cast<size_t>(x)] = 1;
            continue;
        }
        BigInt acc = 0;
        for (int z = 0; z < n; ++z)
            if (z != x && leq(z, x)) acc += mu[static_cast<size_t>(z)];
        mu[static_cast<size_t>(x)] = -acc;
    }
    return mu;
}

UniPoly RankedPoset::characteristic_polynomial() const {
    const auto mu = mobius_from_bottom();
    UniPoly chi;
    for (int x = 0; x < size(); ++x)
        chi += UniPoly::monomial(total_rank_ - rank(x), mu[static_cast<size_t>(x)]);
    return chi;
}

bool RankedPoset::mobius_identity_holds() const {
    const int n = size();
    for (int a = 0; a < n; ++a) {
        // mu(a, .) on the upper interval of a.
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return rank(x) < rank(y); });
        std::vector<BigInt> mu(static_cast<size_t>(n), 0);
        for (int x : order) {
            if (!leq(a, x)) continue;
            if (x == a) {
                mu[static_cast<size_t>(x)] = 1;
                continue;
            }
            BigInt acc = 0;
            for (int z = 0; z < n; ++z)
                if (z != x && leq(a, z) && leq(z, x)) acc += mu[static_cast<size_t>(z)];
            mu[static_cast<size_t>(x)] = -acc;
        }
        for (int b = 0; b < n; ++b) {
            if (!leq(a, b)) continue;
            BigInt total = 0;
            for (int z = 0; z < n; ++z)
                if (leq(a, z) && leq(z, b)) total += mu[static_cast<size_t>(z)];
            if (total != (a == b ? 1 : 0)) return false;
        }
    }
    return true;
}

SetPartition canonical_partition(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return blocks;
}

bool partition_refines(const SetPartition& finer, const SetPartition& coarser, int n) {
    std::vector<int> block_of(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < coarser.size(); ++i)
        for (int v : coarser[i]) block_of[static_cast<size_t>(v)] = static_cast<int>(i);
    for (const auto& b : finer) {
        const int target = block_of[static_cast<size_t>(b.front())];
        for (int v : b)
            if (block_of[static_cast<size_t>(v)] != target) return false;
    }
    return true;
}

BondLattice bond_lattice(const Graph& g, int max_vertices) {
    if (g.n > max_vertices) throw BoundError("bond lattice limited to " + std::to_string(max_vertices) + " vertices");
    if (g.n <= 0) throw DomainError("bond lattice requires at least one vertex");

    // Enumerate set partitions via restricted growth strings, keeping those
    // whose blocks all induce connected subgraphs.
    std::vector<SetPartition> kept;
    std::vector<int> rgs(static_cast<size_t>(g.n), 0);
    while (true) {
        int nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
        std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
        for (int v = 0; v < g.n; ++v) blocks[static_cast<size_t>(rgs[static_cast<size_t>(v)])].push_back(v);
        bool ok = true;
        for (const auto& b : blocks)
            if (b.size() > 1 && !g.is_connected_subset(b)) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(canonical_partition(std::move(blocks)));

        // Next restricted growth string.
        int i = g.n - 1;
        for (; i > 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[static_cast<size_t>(j)]);
            if (rgs[static_cast<size_t>(i)] <= prefix_max) break;
        }
        if (i == 0) break;
        ++rgs[static_cast<size_t>(i)];
        for (int j = i + 1; j < g.n; ++j) rgs[static_cast<size_t>(j)] = 0;
    }

    const int count = static_cast<int>(kept.size());
    std::vector<int> ranks(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) ranks[static_cast<size_t>(i)] = g.n - static_cast<int>(kept[static_cast<size_t>(i)].size());
    std::vector<std::vector<bool>> leq(static_cast<size_t>(count), std::vector<bool>(static_cast<size_t>(count), false));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            leq[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                ranks[static_cast<size_t>(a)] <= ranks[static_cast<size_t>(b)] &&
                partition_refines(kept[static_cast<size_t>(a)], kept[static_cast<size_t>(b)], g.n);

    int bottom = -1;
    for (int i = 0; i < count; ++i)
        if (ranks[static_cast<size_t>(i)] == 0) bottom = i;

    RankedPoset poset(std::move(ranks), std::move(leq), bottom, g.n - 1);
    return BondLattice{std::move(poset), std::move(kept)};
}

}  // namespace ferrochi
