// Closed-form local pro-isomorphic zeta functions of the lattices L(m,n)
// and the rational-function identities they satisfy.
#pragma once

#include "prozeta/numbers.hpp"
#include "prozeta/rational_fn.hpp"

#include <vector>

namespace prozeta {

// Exponent data: X_i = q^{A_i} t^{B_i} for 1 <= i <= n-1, with the
// boundary values A_0, B_0, A_n, B_n obtained from the same formulas
// (empty sum at i = 0) and tied to the tilde parameters by
// (m-1) Atilde0 = A_0, (m-1) Btilde0 = B_0, m Atilden = A_n, m Btilden = B_n.
struct ZetaParameters {
    int m = 0, n = 0;
    std::vector<Int> A;  // A[0..n]
    std::vector<Int> B;  // B[0..n]
    Int Atilde0, Btilde0, Atilden, Btilden;
    Int fe_a, fe_b;  // functional-equation pair
};

// coefficient C_i(m,n) of e_i in the closed form of log_q theta1
Int theta1_coefficient(int m, int n, int i);

ZetaParameters zeta_parameters(int m, int n);

// Bruhat cone sum in closed form:
//   sum_w q^{-l(w)} prod X_i^{nu_i(w)} / [ prod (1-X_i) (1-Xtilde0)(1-Xtilden) ]
RationalFnQT local_zeta(int m, int n);

// numerator of local_zeta before the rational function is canonicalised
LaurentPoly local_zeta_numerator(int m, int n);

// the Hirsch-length 2m+3 closed form (n = 2 family)
RationalFnQT dstar_zeta(int m);

// the GL_n Weyl-sum/product identity with q^{-t} read as the variable t:
//   sum_w q^{-l(w)} prod_{i in I(w)} q^{i(n-i)} t^i / prod_{i=1}^n (1 - q^{i(n-i)} t^i)
//     = 1 / prod_{i=1}^n (1 - q^{i-1} t)
bool gl_weyl_product_identity(int n);

// (i) local_zeta(1,n) equals both product expressions for the Grenham
// lattices, and (ii) the GL_n Weyl-sum/product identity holds. 2 <= n <= 7.
bool grenham_identity_check(int n);

struct FnEqResult {
    bool holds = false;  // extraction succeeded and matches the closed forms
    int sign = 0;        // extracted sign
    Int a, b;            // extracted symmetry factor q^{a + b s}
};

// apply q -> q^{-1}, t -> t^{-1} factor-wise, extract the exact symmetry
// monomial and compare with the closed-form pair (a, b)
FnEqResult functional_equation_check(int m, int n);

}  // namespace prozeta
