#include "ferrochi/ratlinalg.hpp"

#include <algorithm>

namespace ferrochi {

RatMatrix rref(RatMatrix m) {
    if (m.empty()) return m;
    const size_t cols = m[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[pivot_row], m[sel]);
        const BigRat inv = m[pivot_row][col];
        for (size_t j = col; j < cols; ++j) m[pivot_row][j] /= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == pivot_row || m[r][col] == 0) continue;
            const BigRat f = m[r][col];
            for (size_t j = col; j < cols; ++j) m[r][j] -= f * m[pivot_row][j];
        }
        ++pivot_row;
    }
    // Drop zero rows.
    RatMatrix out;
    for (const auto& row : m)
        if (std::any_of(row.begin(), row.end(), [](const BigRat& x) { return x != 0; })) out.push_back(row);
    return out;
}

RatMatrix identity_matrix(int n) {
    RatMatrix m(static_cast<size_t>(n), RatVector(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix r(n, RatVector(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

RatVector mat_vec(const RatMatrix& a, const RatVector& v) {
    RatVector r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

BigRat determinant(RatMatrix m) {
    const size_t n = m.size();
    BigRat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const BigRat f = m[r][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& m) {
    const size_t n = m.size();
    RatMatrix aug(n, RatVector(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    aug = rref(std::move(aug));
    if (aug.size() != n) throw DomainError("matrix is singular");
    RatMatrix inv(n, RatVector(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

RatMatrix transpose(const RatMatrix& m) {
    if (m.empty()) return m;
    RatMatrix t(m[0].size(), RatVector(m.size(), 0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RationalHyperplane::RationalHyperplane(RatVector n, BigRat off) : normal(std::move(n)), offset(std::move(off)) {
    size_t first = 0;
    while (first < normal.size() && normal[first] == 0) ++first;
    if (first == normal.size()) throw DomainError("hyperplane normal must be nonzero");
    const BigRat lead = normal[first];
    if (lead != 1) {
        for (auto& x : normal) x /= lead;
        offset /= lead;
    }
}

std::optional<AffineFlat> AffineFlat::intersect(const RationalHyperplane& h) const {
    if (h.dimension() != ambient_) throw DomainError("hyperplane dimension mismatch");
    RatMatrix sys = rows_;
    RatVector row(h.normal);
    row.push_back(h.offset);
    sys.push_back(std::move(row));
    sys = rref(std::move(sys));
    // A pivot in the augmented column means 0 = 1: empty intersection.
    for (const auto& r : sys) {
        size_t lead = 0;
        while (lead < r.size() && r[lead] == 0) ++lead;
        if (lead + 1 == r.size()) return std::nullopt;
    }
    AffineFlat out(ambient_);
    out.rows_ = std::move(sys);
    return out;
}

bool AffineFlat::contains(const AffineFlat& other) const {
    if (other.ambient_ != ambient_) return false;
    if (other.codimension() < codimension()) return false;
    // Every constraint of *this must be implied by the other's system.
    RatMatrix sys = other.rows_;
    for (const auto& row : rows_) sys.push_back(row);
    return rref(std::move(sys)) == other.rows_;
}

bool AffineFlat::lies_on(const RationalHyperplane& h) const {
    RatVector row(h.normal);
    row.push_back(h.offset);
    RatMatrix sys = rows_;
    sys.push_back(std::move(row));
    return rref(std::move(sys)) == rows_;
}

}  // namespace ferrochi
