#pragma once

#include <map>
#include <vector>

#include "ferrochi/bigint.hpp"
#include "ferrochi/errors.hpp"

namespace ferrochi {

// Sparse univariate polynomial in t with exact coefficients.  The map never
// stores a zero coefficient, so equality is map equality and serialization is
// canonical.  Coeff is BigInt for the library's public results and BigRat for
// rational intermediates.
template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) { if (c != 0) coeffs_[0] = c; }
    Polynomial(const Coeff& c) { if (c != 0) coeffs_[0] = c; }

    static Polynomial variable() { return monomial(1, Coeff(1)); }

    static Polynomial monomial(int exponent, const Coeff& c) {
        Polynomial p;
        if (c != 0) p.coeffs_[exponent] = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
    }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    Coeff coeff(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Coeff(0) : it->second;
    }

    const std::map<int, Coeff>& terms() const { return coeffs_; }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Coeff& c) const {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [e, co] : coeffs_) r.coeffs_[e] = co * c;
        return r;
    }

    Polynomial pow(int n) const {
        Polynomial r(1);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    Coeff eval(const Coeff& x) const {
        // Horner over the sparse representation.
        Coeff acc = 0;
        int last = -1;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (last >= 0)
                for (int i = it->first; i < last; ++i) acc *= x;
            acc += it->second;
            last = it->first;
        }
        if (last > 0)
            for (int i = 0; i < last; ++i) acc *= x;
        return acc;
    }

    // Exact division by (divisor), throwing if a remainder survives.
    Polynomial divide_exact(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw DomainError("division by zero polynomial");
        Polynomial rem = *this, quot;
        const int dd = divisor.degree();
        const Coeff& lead = divisor.coeffs_.rbegin()->second;
        while (!rem.is_zero() && rem.degree() >= dd) {
            const Coeff c = rem.coeffs_.rbegin()->second;
            if (!divides(lead, c)) throw DomainError("polynomial division is not exact");
            const int e = rem.degree() - dd;
            const Coeff q = c / lead;
            quot.add_term(e, q);
            rem -= divisor * monomial(e, q);
        }
        if (!rem.is_zero()) throw DomainError("polynomial division left a remainder");
        return quot;
    }

    // Coefficient vector c0..cd, empty for the zero polynomial.
    std::vector<Coeff> dense_coeffs() const {
        std::vector<Coeff> out(static_cast<size_t>(degree() + 1), Coeff(0));
        for (const auto& [e, c] : coeffs_) out[static_cast<size_t>(e)] = c;
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.coeffs_ < b.coeffs_; }

private:
    static bool divides(const Coeff& d, const Coeff& c) {
        if constexpr (std::is_same_v<Coeff, BigInt>)
            return c % d == 0;
        else
            return true;
    }

    void add_term(int e, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::map<int, Coeff> coeffs_;
};

using UniPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<BigRat>;

inline RatPoly to_rational(const UniPoly& p) {
    RatPoly r;
    for (const auto& [e, c] : p.terms()) r += RatPoly::monomial(e, BigRat(c));
    return r;
}

// Integer content of a rational polynomial, or throws when any coefficient
// has a nontrivial denominator.
inline UniPoly to_integral(const RatPoly& p) {
    UniPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (!is_integral(c)) throw IntegralityError("rational polynomial did not clear to integers");
        r += UniPoly::monomial(e, rat_num(c));
    }
    return r;
}

// base * (base - step) * ... * (base - (n-1)*step); the empty product is 1.
template <typename Coeff>
Polynomial<Coeff> falling_factorial(const Polynomial<Coeff>& base, int n, int step = 1) {
    Polynomial<Coeff> r(1);
    for (int j = 0; j < n; ++j) r *= base - Polynomial<Coeff>(Coeff(j) * step);
    return r;
}

// base * (base + 1) * ... * (base + (n-1)).
template <typename Coeff>
Polynomial<Coeff> rising_factorial(const Polynomial<Coeff>& base, int n) {
    Polynomial<Coeff> r(1);
    for (int j = 0; j < n; ++j) r *= base + Polynomial<Coeff>(Coeff(j));
    return r;
}

}  // namespace ferrochi
