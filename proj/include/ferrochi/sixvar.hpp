#pragma once

#include <array>
#include <map>
#include <string>

#include "ferrochi/bigint.hpp"
#include "ferrochi/poly.hpp"

namespace ferrochi {

// Exact polynomial in the six staircase-statistic variables, in this fixed
// order: x, y, z, xb, yb, zb.  Terms map an exponent 6-tuple to a nonzero
// integer coefficient; the map's lexicographic key order is also the
// serialization order.
class SixVarPoly {
public:
    static constexpr size_t kVars = 6;
    using Exponents = std::array<int, kVars>;

    SixVarPoly() = default;
    SixVarPoly(int c) { if (c != 0) terms_[Exponents{}] = c; }
    SixVarPoly(const BigInt& c) { if (c != 0) terms_[Exponents{}] = c; }

    // index: 0 = x, 1 = y, 2 = z, 3 = xb, 4 = yb, 5 = zb
    static SixVarPoly variable(int index);
    static SixVarPoly monomial(const Exponents& e, const BigInt& c);

    static SixVarPoly x() { return variable(0); }
    static SixVarPoly y() { return variable(1); }
    static SixVarPoly z() { return variable(2); }
    static SixVarPoly xb() { return variable(3); }
    static SixVarPoly yb() { return variable(4); }
    static SixVarPoly zb() { return variable(5); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exponents{} && terms_.begin()->second == 1;
    }
    int total_degree() const;

    const std::map<Exponents, BigInt>& terms() const { return terms_; }

    SixVarPoly& operator+=(const SixVarPoly& o);
    SixVarPoly& operator-=(const SixVarPoly& o);
    friend SixVarPoly operator+(SixVarPoly a, const SixVarPoly& b) { return a += b; }
    friend SixVarPoly operator-(SixVarPoly a, const SixVarPoly& b) { return a -= b; }
    SixVarPoly operator-() const;
    friend SixVarPoly operator*(const SixVarPoly& a, const SixVarPoly& b);
    SixVarPoly& operator*=(const SixVarPoly& o) { return *this = *this * o; }
    SixVarPoly pow(int n) const;

    friend bool operator==(const SixVarPoly& a, const SixVarPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SixVarPoly& a, const SixVarPoly& b) { return !(a == b); }

    // Exact substitution of one value per variable.  Value must be a ring
    // (UniPoly, RatPoly, or SixVarPoly itself for variable shifts).
    template <typename Value>
    Value eval(const std::array<Value, kVars>& at) const {
        Value acc;
        for (const auto& [e, c] : terms_) {
            Value term = Value(c);
            for (size_t v = 0; v < kVars; ++v)
                for (int i = 0; i < e[v]; ++i) term *= at[v];
            acc += term;
        }
        return acc;
    }

    BigInt eval_all_ones() const;

private:
    void add_term(const Exponents& e, const BigInt& c);

    std::map<Exponents, BigInt> terms_;
};

// Substitutes x -> x+1 and xb -> xb+1, the shift appearing in the staircase
// recurrence; other variables are fixed.
SixVarPoly sixvar_shift(const SixVarPoly& p);

// Same shift iterated j times (x -> x+j, xb -> xb+j).
SixVarPoly sixvar_shift(const SixVarPoly& p, int j);

template <typename Value>
Value sixvar_eval(const SixVarPoly& p, const std::array<Value, SixVarPoly::kVars>& at) {
    return p.eval(at);
}

}  // namespace ferrochi
