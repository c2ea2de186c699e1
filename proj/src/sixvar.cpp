#include "ferrochi/sixvar.hpp"

#include <algorithm>
#include <numeric>

namespace ferrochi {

SixVarPoly SixVarPoly::variable(int index) {
    Exponents e{};
    e[static_cast<size_t>(index)] = 1;
    return monomial(e, 1);
}

SixVarPoly SixVarPoly::monomial(const Exponents& e, const BigInt& c) {
    SixVarPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

int SixVarPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void SixVarPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SixVarPoly& SixVarPoly::operator+=(const SixVarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SixVarPoly& SixVarPoly::operator-=(const SixVarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SixVarPoly SixVarPoly::operator-() const {
    SixVarPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

SixVarPoly operator*(const SixVarPoly& a, const SixVarPoly& b) {
    SixVarPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            SixVarPoly::Exponents e;
            for (size_t v = 0; v < SixVarPoly::kVars; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    return r;
}

SixVarPoly SixVarPoly::pow(int n) const {
    SixVarPoly r(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

BigInt SixVarPoly::eval_all_ones() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

SixVarPoly sixvar_shift(const SixVarPoly& p) { return sixvar_shift(p, 1); }

SixVarPoly sixvar_shift(const SixVarPoly& p, int j) {
    std::array<SixVarPoly, SixVarPoly::kVars> at = {
        SixVarPoly::x() + SixVarPoly(j), SixVarPoly::y(),  SixVarPoly::z(),
        SixVarPoly::xb() + SixVarPoly(j), SixVarPoly::yb(), SixVarPoly::zb()};
    return p.eval(at);
}

}  // namespace ferrochi
