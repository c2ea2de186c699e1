#include "ferrochi/arrangement.hpp"

#include <algorithm>
#include <map>

namespace ferrochi {

namespace {

// Coordinate bookkeeping shared by the arrangement builders.  Ambient space
// is R^(m+n+1).  The "v" chart orders coordinates (x_1..x_(n+1), y_i^(l));
// the "u" chart interleaves doubled odd labels with even ones, followed by
// one extra coordinate for the isolated vertex.
struct NuCoords {
    int n, m, dim;
    std::vector<std::vector<int>> u_odd;  // u_odd[i-1][l-1] -> index
    std::vector<int> u_even;              // u_even[j-1] -> index
    int u_extra;
    std::vector<std::vector<int>> v_y;  // v_y[i-1][l-1] -> index

    explicit NuCoords(const WeakComposition& nu) : n(nu.length()), m(nu.sum()), dim(m + n + 1) {
        int idx = 0;
        u_odd.resize(static_cast<size_t>(n));
        u_even.resize(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            for (int l = 1; l <= nu.parts()[static_cast<size_t>(i - 1)]; ++l)
                u_odd[static_cast<size_t>(i - 1)].push_back(idx++);
            u_even[static_cast<size_t>(i - 1)] = idx++;
        }
        u_extra = idx++;
        v_y.resize(static_cast<size_t>(n));
        int vidx = n + 1;
        for (int i = 1; i <= n; ++i)
            for (int l = 1; l <= nu.parts()[static_cast<size_t>(i - 1)]; ++l)
                v_y[static_cast<size_t>(i - 1)].push_back(vidx++);
    }

    int v_x(int i) const { return i - 1; }  // x_i, 1-based
};

}  // namespace

std::vector<RationalHyperplane> build_arrangement_nu(const WeakComposition& nu, int max_hyperplanes) {
    const NuCoords co(nu);
    int count = 0;
    for (int i = 1; i <= co.n; ++i) count += nu.parts()[static_cast<size_t>(i - 1)] * (co.n + 1 - i);
    if (count > max_hyperplanes)
        throw BoundError("arrangement would have " + std::to_string(count) + " hyperplanes (limit " +
                         std::to_string(max_hyperplanes) + ")");
    std::vector<RationalHyperplane> hs;
    for (int i = 1; i <= co.n; ++i)
        for (int j = i + 1; j <= co.n + 1; ++j)
            for (int l = 1; l <= nu.parts()[static_cast<size_t>(i - 1)]; ++l) {
                RatVector normal(static_cast<size_t>(co.dim), 0);
                normal[static_cast<size_t>(co.v_x(i))] = 1;
                normal[static_cast<size_t>(co.v_x(j))] = -1;
                normal[static_cast<size_t>(co.v_y[static_cast<size_t>(i - 1)][static_cast<size_t>(l - 1)])] = -1;
                hs.emplace_back(std::move(normal), BigRat(0));
            }
    return hs;
}

std::vector<RationalHyperplane> graphic_arrangement_nu(const WeakComposition& nu) {
    const NuCoords co(nu);
    std::vector<RationalHyperplane> hs;
    for (int i = 1; i <= co.n; ++i)
        for (int j = i; j <= co.n; ++j)
            for (int l = 1; l <= nu.parts()[static_cast<size_t>(i - 1)]; ++l) {
                RatVector normal(static_cast<size_t>(co.dim), 0);
                normal[static_cast<size_t>(co.u_odd[static_cast<size_t>(i - 1)][static_cast<size_t>(l - 1)])] = 1;
                normal[static_cast<size_t>(co.u_even[static_cast<size_t>(j - 1)])] = -1;
                hs.emplace_back(std::move(normal), BigRat(0));
            }
    return hs;
}

RankedPoset intersection_poset(const std::vector<RationalHyperplane>& hyperplanes, int max_hyperplanes) {
    if (static_cast<int>(hyperplanes.size()) > max_hyperplanes)
        throw BoundError("intersection poset limited to " + std::to_string(max_hyperplanes) + " hyperplanes");
    if (hyperplanes.empty()) throw DomainError("arrangement must contain a hyperplane");
    const int dim = hyperplanes[0].dimension();
    for (const auto& h : hyperplanes)
        if (h.dimension() != dim) throw DomainError("hyperplanes live in different dimensions");

    // Close the set of flats under intersecting with single hyperplanes.
    std::map<AffineFlat, int> seen;
    std::vector<AffineFlat> flats;
    const AffineFlat ambient(dim);
    seen.emplace(ambient, 0);
    flats.push_back(ambient);
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int fi : frontier)
            for (const auto& h : hyperplanes) {
                const AffineFlat flat = flats[static_cast<size_t>(fi)];
                auto cut = flat.intersect(h);
                if (!cut || *cut == flat) continue;
                if (seen.emplace(*cut, static_cast<int>(flats.size())).second) {
                    flats.push_back(*cut);
                    next.push_back(static_cast<int>(flats.size()) - 1);
                }
            }
        frontier = std::move(next);
    }

    std::sort(flats.begin(), flats.end(), [](const AffineFlat& a, const AffineFlat& b) {
        return a.codimension() != b.codimension() ? a.codimension() < b.codimension() : a < b;
    });

    const int count = static_cast<int>(flats.size());
    std::vector<int> ranks(static_cast<size_t>(count));
    int top = 0;
    for (int i = 0; i < count; ++i) {
        ranks[static_cast<size_t>(i)] = flats[static_cast<size_t>(i)].codimension();
        top = std::max(top, ranks[static_cast<size_t>(i)]);
    }
    std::vector<std::vector<bool>> leq(static_cast<size_t>(count),
                                       std::vector<bool>(static_cast<size_t>(count), false));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            leq[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                flats[static_cast<size_t>(a)].contains(flats[static_cast<size_t>(b)]);
    return RankedPoset(std::move(ranks), std::move(leq), 0, top);
}

UniPoly char_poly_arrangement(const std::vector<RationalHyperplane>& hyperplanes, int max_hyperplanes) {
    return intersection_poset(hyperplanes, max_hyperplanes).characteristic_polynomial();
}

BigInt region_count(const std::vector<RationalHyperplane>& hyperplanes, int max_hyperplanes) {
    const RankedPoset poset = intersection_poset(hyperplanes, max_hyperplanes);
    const UniPoly chi = poset.characteristic_polynomial();
    const BigInt value = chi.eval(BigInt(-1));
    return poset.total_rank() % 2 == 0 ? value : -value;
}

CoordinateMap coordinate_map_nu(const WeakComposition& nu) {
    const NuCoords co(nu);
    const size_t d = static_cast<size_t>(co.dim);
    CoordinateMap out;
    out.a.assign(d, RatVector(d, 0));
    out.a_inv.assign(d, RatVector(d, 0));

    // Forward map, one column per u basis vector.
    for (int i = 1; i <= co.n; ++i) {
        for (int l = 1; l <= nu.parts()[static_cast<size_t>(i - 1)]; ++l) {
            const size_t col = static_cast<size_t>(co.u_odd[static_cast<size_t>(i - 1)][static_cast<size_t>(l - 1)]);
            out.a[static_cast<size_t>(co.v_x(i))][col] = 1;
            out.a[static_cast<size_t>(co.v_y[static_cast<size_t>(i - 1)][static_cast<size_t>(l - 1)])][col] = -1;
        }
        out.a[static_cast<size_t>(co.v_x(i + 1))][static_cast<size_t>(co.u_even[static_cast<size_t>(i - 1)])] = 1;
    }
    out.a[static_cast<size_t>(co.v_x(1))][static_cast<size_t>(co.u_extra)] = 1;

    // Reverse map, one column per v basis vector.
    out.a_inv[static_cast<size_t>(co.u_extra)][static_cast<size_t>(co.v_x(1))] = 1;
    for (int i = 2; i <= co.n + 1; ++i)
        out.a_inv[static_cast<size_t>(co.u_even[static_cast<size_t>(i - 2)])][static_cast<size_t>(co.v_x(i))] = 1;
    for (int i = 1; i <= co.n; ++i)
        for (int l = 1; l <= nu.parts()[static_cast<size_t>(i - 1)]; ++l) {
            const size_t col = static_cast<size_t>(co.v_y[static_cast<size_t>(i - 1)][static_cast<size_t>(l - 1)]);
            const size_t odd = static_cast<size_t>(co.u_odd[static_cast<size_t>(i - 1)][static_cast<size_t>(l - 1)]);
            if (i == 1)
                out.a_inv[static_cast<size_t>(co.u_extra)][col] = 1;
            else
                out.a_inv[static_cast<size_t>(co.u_even[static_cast<size_t>(i - 2)])][col] = 1;
            out.a_inv[odd][col] = -1;
        }

    out.det = determinant(out.a);
    out.psi = transpose(out.a_inv);

    out.verified = mat_mul(out.a, out.a_inv) == identity_matrix(co.dim);
    if (!out.verified) {
        out.failure = "A * A_inv != identity";
        return out;
    }

    // psi carries each graphic hyperplane onto its homogenized partner
    // exactly when A maps the u-chart normal to the v-chart normal.
    for (int i = 1; i <= co.n && out.verified; ++i)
        for (int j = i; j <= co.n && out.verified; ++j)
            for (int l = 1; l <= nu.parts()[static_cast<size_t>(i - 1)] && out.verified; ++l) {
                RatVector k_normal(d, 0);
                k_normal[static_cast<size_t>(co.u_odd[static_cast<size_t>(i - 1)][static_cast<size_t>(l - 1)])] = 1;
                k_normal[static_cast<size_t>(co.u_even[static_cast<size_t>(j - 1)])] = -1;
                RatVector h_normal(d, 0);
                h_normal[static_cast<size_t>(co.v_x(i))] = 1;
                h_normal[static_cast<size_t>(co.v_x(j + 1))] = -1;
                h_normal[static_cast<size_t>(co.v_y[static_cast<size_t>(i - 1)][static_cast<size_t>(l - 1)])] = -1;
                if (mat_vec(out.a, k_normal) != h_normal) {
                    out.verified = false;
                    out.failure = "hyperplane (" + std::to_string(i) + "," + std::to_string(j) + ")^(" +
                                  std::to_string(l) + ") does not map";
                }
            }
    return out;
}

}  // namespace ferrochi
