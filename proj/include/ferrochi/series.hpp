#pragma once

#include <vector>

#include "ferrochi/errors.hpp"
#include "ferrochi/poly.hpp"
#include "ferrochi/sixvar.hpp"

namespace ferrochi {

// Power series in u truncated at a caller-supplied order N: terms u^0..u^N are
// exact, everything above is discarded.  C is the coefficient ring (UniPoly
// for characteristic-polynomial series, SixVarPoly for the Lambda series).
template <typename C>
class PowerSeries {
public:
    explicit PowerSeries(int order) : order_(order), c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw DomainError("series order must be nonnegative");
    }

    static PowerSeries constant(int order, const C& c) {
        PowerSeries s(order);
        s.c_[0] = c;
        return s;
    }

    int order() const { return order_; }

    const C& coefficient(int j) const { return c_.at(static_cast<size_t>(j)); }
    void set_coefficient(int j, const C& v) { c_.at(static_cast<size_t>(j)) = v; }

    PowerSeries& operator+=(const PowerSeries& o) {
        check_order(o);
        for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }

    PowerSeries& operator-=(const PowerSeries& o) {
        check_order(o);
        for (size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
        return *this;
    }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.check_order(b);
        PowerSeries r(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.c_[static_cast<size_t>(i)] == C{}) continue;
            for (int j = 0; i + j <= a.order_; ++j)
                r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
        return r;
    }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    PowerSeries scaled(const C& c) const {
        PowerSeries r(order_);
        for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] * c;
        return r;
    }

    // Multiply by u^k.
    PowerSeries shifted(int k) const {
        PowerSeries r(order_);
        for (int j = 0; j + k <= order_; ++j)
            if (j + k >= 0) r.c_[static_cast<size_t>(j + k)] = c_[static_cast<size_t>(j)];
        return r;
    }

    // Multiplicative inverse, defined only when the u^0 term is the constant 1.
    PowerSeries reciprocal() const {
        if (!c_[0].is_one()) throw DomainError("series reciprocal requires constant term 1");
        PowerSeries r(order_);
        r.c_[0] = C(1);
        for (int j = 1; j <= order_; ++j) {
            C acc;
            for (int i = 1; i <= j; ++i) acc += c_[static_cast<size_t>(i)] * r.c_[static_cast<size_t>(j - i)];
            r.c_[static_cast<size_t>(j)] = -acc;
        }
        return r;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

private:
    void check_order(const PowerSeries& o) const {
        if (order_ != o.order_) throw DomainError("series order mismatch");
    }

    int order_;
    std::vector<C> c_;
};

using TruncatedSeries = PowerSeries<UniPoly>;
using SixVarSeries = PowerSeries<SixVarPoly>;

// One denominator factor c0 + c1*u of a ratio term.  Every formula in the
// library uses factors of the form 1 - f(t)*u; sum_of_ratios rejects factors
// whose constant term is not 1.
template <typename C>
struct SeriesFactor {
    C c0, c1;
};

template <typename C>
SeriesFactor<C> one_minus_u_times(const C& f) {
    return SeriesFactor<C>{C(1), -f};
}

// numerator * u^valuation / prod(factors)
template <typename C>
struct RatioTerm {
    int valuation = 0;
    C numerator;
    std::vector<SeriesFactor<C>> factors;
};

// Exact truncation of sum_n numerator_n u^{v_n} / prod_i (1 - f_{n,i} u).
// The caller supplies the finitely many terms with valuation <= order.
template <typename C>
PowerSeries<C> series_sum_of_ratios(const std::vector<RatioTerm<C>>& ratio_terms, int order) {
    PowerSeries<C> total(order);
    for (const auto& term : ratio_terms) {
        if (term.valuation > order) continue;
        auto s = PowerSeries<C>::constant(order, term.numerator).shifted(term.valuation);
        for (const auto& f : term.factors) {
            if (!f.c0.is_one()) throw DomainError("denominator factor must have constant term 1");
            PowerSeries<C> lin(order);
            lin.set_coefficient(0, f.c0);
            if (order >= 1) lin.set_coefficient(1, f.c1);
            s *= lin.reciprocal();
        }
        total += s;
    }
    return total;
}

}  // namespace ferrochi
