#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ferrochi/intset.hpp"
#include "ferrochi/poly.hpp"
#include "ferrochi/sixvar.hpp"

namespace ferrochi {

inline constexpr int kDefaultStaircaseBound = 18;

// Domain of a generalized staircase: a set S with even maximum, together with
// its derived rows.  S' drops the maximum and every odd element above the
// second-largest even element (empty when S has a single even element);
// S'' iterates the same step.  Two distinct "ell" counts appear downstream
// and must not be conflated:
//   ell_recurrence: odd elements of S' \ S''   (drives the Lambda recurrence)
//   ell_top:        odd elements above the second-largest even element of S,
//                   i.e. all odds when S has a single even (drives the
//                   Dowling evaluation formula).
class StaircaseSet {
public:
    explicit StaircaseSet(PositiveIntSet s);

    const PositiveIntSet& set() const { return s_; }
    PositiveIntSet s_prime() const { return s_.top_row_removed(); }
    PositiveIntSet s_double_prime() const;
    int ell_recurrence() const;
    int ell_top() const;

private:
    PositiveIntSet s_;
};

// Excedent surjection from S onto its even elements, stored as values aligned
// with the sorted elements of S.
class SurjectiveStaircase {
public:
    SurjectiveStaircase(PositiveIntSet domain, std::vector<int> values);

    const PositiveIntSet& domain() const { return domain_; }
    const std::vector<int>& values() const { return values_; }
    int value_at(int element) const;

    std::string to_string() const;

    friend bool operator==(const SurjectiveStaircase& a, const SurjectiveStaircase& b) {
        return a.domain_ == b.domain_ && a.values_ == b.values_;
    }
    friend bool operator<(const SurjectiveStaircase& a, const SurjectiveStaircase& b) {
        if (a.domain_ != b.domain_) return a.domain_ < b.domain_;
        return a.values_ < b.values_;
    }

private:
    PositiveIntSet domain_;
    std::vector<int> values_;
};

// The six statistics, counted over elements of S' only.  An element of
// S \ S' never counts as a maximum or (sur)fixed point.
struct StaircaseStats {
    int mo = 0;  // odd maxima          -> x
    int fd = 0;  // doubled fixed       -> y
    int si = 0;  // isolated surfixed   -> z
    int me = 0;  // even maxima         -> xb
    int fi = 0;  // isolated fixed      -> yb
    int sd = 0;  // doubled surfixed    -> zb

    SixVarPoly weight() const;

    friend bool operator==(const StaircaseStats& a, const StaircaseStats& b) {
        return a.mo == b.mo && a.fd == b.fd && a.si == b.si && a.me == b.me && a.fi == b.fi && a.sd == b.sd;
    }
};

std::vector<SurjectiveStaircase> enumerate_staircases(const StaircaseSet& s,
                                                      int bound = kDefaultStaircaseBound);

StaircaseStats staircase_stats(const SurjectiveStaircase& f);

// Lambda by direct enumeration: the sum of monomial weights over all
// staircases of S.
SixVarPoly lambda_enum(const StaircaseSet& s, int bound = kDefaultStaircaseBound);

// Lambda by the recurrence
//   Lambda_S = (y+xb)(x+zb)^ell Lambda_S'(x+1, xb+1)
//            + [x^ell (yb - y - xb) + ell x^(ell-1) xb (z - zb)] Lambda_S'
// with ell = ell_recurrence and base case Lambda = 1 at |S'| = 0.  The second
// bracket is the expanded form of x^(ell-1)[x(yb-y) + ell xb(z-zb) - x xb];
// at ell = 0 the ell * x^(ell-1) summand vanishes, which keeps the exponent
// nonnegative.
SixVarPoly lambda_rec(const StaircaseSet& s);

// V united with the canonical top row R_k = {max+1, max+3, ..., max+2k-1,
// max+2k}: k odd elements above max V and one even element above those.
StaircaseSet augment_with_rk(const PositiveIntSet& v, int k);

// Checks the top-row transfer map: every staircase of S arises exactly once
// as F-hat_X for F a staircase of S' and X a proper subset of the preimage of
// max S' under F (elements of X and of S \ S' are redirected to max S).
// Returns the first failure as a printable description, or nullopt on
// success.  S with empty S' is vacuously fine.
std::optional<std::string> top_row_bijection_failure(const StaircaseSet& s,
                                                     int bound = kDefaultStaircaseBound);

inline bool verify_top_row_bijection(const StaircaseSet& s, int bound = kDefaultStaircaseBound) {
    return !top_row_bijection_failure(s, bound).has_value();
}

// Cycle generating identity: sum over D-permutations of V of t^(cycles)
// equals Lambda of V union R_k evaluated at (t, t, 1, 0, t, 1).  Both sides
// are produced by enumeration.
bool lemma66_check(const PositiveIntSet& v, int k, int bound = kDefaultStaircaseBound);

}  // namespace ferrochi
