#pragma once

#include <vector>

#include "ferrochi/bigint.hpp"
#include "ferrochi/partition.hpp"
#include "ferrochi/poly.hpp"
#include "ferrochi/series.hpp"
#include "ferrochi/staircase.hpp"

namespace ferrochi {

// Canonical staircase-shape set: odds 1, 3, ..., 2nk-1 with evens
// 2k, 4k, ..., 2nk; its partition type is (nk, (n-1)k, ..., k).
PositiveIntSet staircase_family_set(int n, int k);

// Canonical rectangle-shape set: odds 1, 3, ..., 2k-1 with evens
// 2k, 2k+2, ..., 2(k+n-1); its partition type is (k^n) and its odd-even
// graph is the complete bipartite graph K_{n,k}.
PositiveIntSet rectangle_family_set(int n, int k);

// chi of the staircase family: the u^n coefficient (n = 1..N) is the bond
// lattice characteristic polynomial for the n-step k-staircase, assembled as
//   sum_n (t-1)_(n-1) ((t-1)_n)^k u^n / prod_{i=1..n} (1 - i (t-i)^k u).
TruncatedSeries gf_k_staircase(int k, int order);

// Chromatic variant: numerator (t)_n ((t-1)_n)^k over the same denominators.
TruncatedSeries gf_k_staircase_chromatic(int k, int order);

// Chromatic polynomial of K_{n,k} at u^n:
//   sum_n (t)_n [(t-n)^k + (n-1)(t-(n-1))^(k-1)] u^n / prod_{i=0..n-1} (1 - i u).
TruncatedSeries gf_complete_bipartite(int k, int order);

// Dowling analog of the staircase series, order m >= 1; coefficient of
// u^(n-1) is the order-m characteristic polynomial for the n-step family:
//   sum_n (t-1)_(n-1,m) ((t-1)_(n,m))^k u^(n-1)
//        / prod_{i=0..n-1} (1 - (im+1)(t-(im+1))^k u),
// with (x)_(n,m) = x(x-m)...(x-(n-1)m).  At m = 1 this is gf_k_staircase
// shifted down one power of u.
TruncatedSeries gf_dowling_k_staircase(int k, int m, int order);

// Dowling analog of the complete bipartite series; the u^0 coefficient is
// (t-1)^k and for n >= 2 the u^(n-1) coefficient is
//   (t-1)_(n-1,m) [(t-1-m(n-1))^k + (m(n-2)+1)(t-1-m(n-2))^(k-1)]
//        / prod_{i=0..n-2} (1 - (mi+1) u).
TruncatedSeries gf_dowling_complete_bipartite(int k, int m, int order);

// Lambda of the n-step staircase family at u^(n-1), symbolically:
//   sum_n (y+xb)^((n-1)) ((x+zb)^((n-1)))^k u^(n-1)
//     / prod_{i=0..n-1} (1 - (x+i)^(k-1)[(x+i)(yb-y) + k(xb+i)(z-zb)
//                                        - (x+i)(xb+i)] u),
// with a^((n)) the rising factorial.  Guarded by a small maximum order.
SixVarSeries gf_lambda_fixed_step(int k, int order);

// Lambda of the rectangle family at u^(n-1): explicit 1 at u^0, then
//   sum_{n>=2} (y+xb)^((n-2)) Lambda_2(x+(n-2), xb+(n-2)) u^(n-1)
//     / prod_{i=0..n-2} (1 - (yb - y - (xb+i)) u),
// where Lambda_2 = (y+xb)(x+zb)^k + x^(k-1)[x(yb-y) - k xb(zb-z) - x xb].
SixVarSeries gf_lambda_complete_bipartite(int k, int order);

// The width-two-row base polynomial Lambda_2 above, shifted by j in x and xb.
SixVarPoly lambda_rectangle_base(int k, int j);

// Closed-form characteristic polynomial of the order-q Dowling arrangement of
// a composition, evaluated through Lambda of the canonical vertex set:
//   (-1)^(|V|-1) (1-t)^ell q^(|V|-ell-1)
//       Lambda_V((1-t)/q, (1-t)/q, 1, 0, -t/q, 1)
// with ell = ell_top of V.  The rational intermediate must clear to integer
// coefficients; failure to do so raises IntegralityError.
UniPoly dowling_char_formula(const WeakComposition& nu, int q);

// Same evaluation for an explicit staircase-set V.
UniPoly dowling_char_formula_for_set(const PositiveIntSet& v, int q);

// Genocchi-type sequences: values for n = 1..N of the evaluations of the
// staircase-family chi at t = 0 resp. t = -1, normalized positive:
//   g: sum_n (n-1)! (n!)^k u^n / prod_{i=1..n} (1 + i^(k+1) u)
//   h: sum_n n! ((n+1)!)^k u^n / prod_{i=1..n} (1 + i (i+1)^k u)
std::vector<BigInt> gf_genocchi(int k, int order);
std::vector<BigInt> gf_median_genocchi(int k, int order);

// Power-of-two decomposition of the median value h_{n,k}: entry j counts the
// D-permutations on the (n-1)-step staircase set with exactly j cycles that
// are not even fixed points, and sum_j count_j 2^(j+k) = h_{n,k} (asserted).
std::vector<std::pair<int, BigInt>> median_genocchi_decomposition(int n, int k);

}  // namespace ferrochi
