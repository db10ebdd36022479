// First-principles evaluation of the local zeta function as a sum over
// cocharacter cone points, with the theta weights computed from their
// definitions. Entirely independent of the closed form in zeta.hpp; the
// two routes are compared coefficient by coefficient.
#pragma once

#include "prozeta/numbers.hpp"
#include "prozeta/rational_fn.hpp"

#include <cstdint>
#include <vector>

namespace prozeta {

// exponent tuple (e_0, e_1, ..., e_n) of a cocharacter
struct ConePoint {
    std::vector<std::int64_t> e;

    std::int64_t operator[](int i) const { return e[static_cast<size_t>(i)]; }
    int rank() const { return static_cast<int>(e.size()) - 1; }
};

struct TorusValuations {
    std::vector<Int> va;  // valuations of a_1..a_n; non-increasing on cone points
    Int vlambda;
};

TorusValuations torus_valuations(int m, int n, const ConePoint& e);

// t exponent of the point: valuation of det(rho(xi(pi))). Computed from the
// three displayed e-coefficients and recomputed from the lambda/a valuations;
// the two must agree.
Int det_valuation(int m, int n, const ConePoint& e);

// log_q theta1 by direct enumeration: sum over g of
// min{ v(lambda^{-1} prod a_i^{f_i}) : f <= g componentwise }.
// No lexicographic shortcut; every dominated f is inspected.
Int theta1_direct(int m, int n, const ConePoint& e);

// closed form sum_i C_i(m,n) e_i + binom(2m+n-2, n-1) e_n
Int theta1_closed(int m, int n, const ConePoint& e);

// (r1 + r2) * sum v(a_i); also evaluated via the displayed e-coefficients,
// the two must agree
Int theta2(int m, int n, const ConePoint& e);

// the coefficient of e_0 in log_q theta1 before simplification (the paper's
// R(m,n), which collapses to zero)
Int theta1_e0_coefficient(int m, int n);

// all cone points with det valuation <= max_t_degree, for the descent
// constraints e_i >= nu_i (pass an all-false vector for the full cone)
std::vector<ConePoint> enumerate_cone_points(int m, int n, int max_t_degree,
                                             const std::vector<bool>& nu);

// Bruhat cone sum truncated at t degree K, using theta1_direct.
// Throws std::length_error when the bounding box exceeds term_budget points.
TruncatedSeries cone_series(int m, int n, int max_t_degree,
                            std::int64_t term_budget = 5'000'000);

// cone_series(m,n,K) == series_expand(local_zeta(m,n), K), exact
bool oracle_compare(int m, int n, int max_t_degree);

}  // namespace prozeta
