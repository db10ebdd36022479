// The algebraic automorphism group of L(m,n): reductive points (A, lambda)
// acting through symmetric-power blocks and unipotent points (b, D1, D2)
// acting block upper-unitriangularly. Matrices act on row vectors from the
// right throughout.
#pragma once

#include "prozeta/lattice.hpp"
#include "prozeta/matrix.hpp"
#include "prozeta/multi_index.hpp"

#include <map>

namespace prozeta {

struct ReductivePoint {
    RatMatrix A;  // n x n, invertible
    Rat lambda;   // nonzero
};

struct UnipotentPoint {
    // one parameter per weight-(2m-1) index; missing keys read as 0
    std::map<MultiIndex, Rat> b;
    RatMatrix D1;  // r1 x n
    RatMatrix D2;  // r2 x n
};

// (m-1)-th symmetric power of the contragredient action of A (inverse
// transpose on the xi basis), in the canonical monomial order. r1 x r1.
RatMatrix sym_power_rho1(const RatMatrix& A, int m, int n);

// m-th symmetric power of the natural action of A on the z basis, written
// in the factorial-scaled dual basis (1/prod f_j!) z^f. This is the basis
// that keeps the lattice's structure constants intact. r2 x r2.
RatMatrix sym_power_rho2(const RatMatrix& A, int m, int n);

// diag(lambda rho1(A), lambda^{-1} rho2(A), A)
RatMatrix embed_reductive(const ReductivePoint& h, int m, int n);

// block unitriangular with C derived from b via c_{e,f} = b_{e+f}
RatMatrix embed_unipotent(const UnipotentPoint& u, int m, int n);

enum class AutCheck { kAutomorphism, kNotAutomorphism, kSingular };

// bracket(u M, v M) == bracket(u, v) M on all basis pairs, exact arithmetic
AutCheck check_automorphism(const LieLattice& L, const RatMatrix& M);
bool is_automorphism(const LieLattice& L, const RatMatrix& M);

// split M into its block-diagonal part H and U = H^{-1} M (blocks r1,r2,n)
void block_refactor(const RatMatrix& M, int m, int n, RatMatrix& H, RatMatrix& U);

// U is unit upper block-triangular and its C block is constant on the
// fibers of (e,f) -> e+f
bool satisfies_unipotent_pattern(const RatMatrix& U, int m, int n);

}  // namespace prozeta
