// Abscissae of convergence, the exceptional parameter set, the appendix
// polynomials that decide it, and the cluster-point scan data.
#pragma once

#include "prozeta/numbers.hpp"

#include <string>
#include <vector>

namespace prozeta {

enum class AbscissaRegime { kM1, kC0, kCN };

std::string regime_name(AbscissaRegime r);

struct AbscissaReport {
    int m = 0, n = 0;
    Rat alpha;
    AbscissaRegime regime = AbscissaRegime::kM1;
    Rat beta;
    bool in_exceptional_set = false;
};

// alpha = (A_1+1)/B_1 for m = 1; otherwise the larger of (Atilde0+1)/Btilde0
// and (Atilden+1)/Btilden, the first winning exactly on the exceptional set.
// Membership is decided by the direct inequality and cross-checked against
// the explicit set; disagreement throws.
AbscissaReport abscissa(int m, int n);

// max A_i/B_i over 1 <= i <= n-1 (meromorphic continuation bound)
Rat beta(int m, int n);

// ({2,3} x N>=3) u ({4} x {4..38}) u ({5} x {5..9})
bool in_exceptional_set_explicit(int m, int n);

// Increment structure behind the abscissa branch: constant y_i, positive
// x_1, strictly growing increments d_i (the final one degenerates to 0
// exactly at m = 2), and interior max strictly below the endpoint max.
bool convexity_check(int m, int n);

struct IntPolynomial {
    std::vector<Int> coeffs;  // ascending degree, no trailing zeros

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Int evaluate(const Int& x) const;
    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial operator+(const IntPolynomial&) const;
    IntPolynomial operator*(const IntPolynomial&) const;
    IntPolynomial scaled(const Int& c) const;
    std::string to_text(const std::string& var = "t") const;
};

// prod (t+i) for i in lo..hi (empty range gives 1)
IntPolynomial rising_product(int lo, int hi);

IntPolynomial f_m_polynomial(int m);
IntPolynomial g_m_polynomial(int m);
IntPolynomial h_m_polynomial(int m);

// f_m = g_m + (prod_{i=0}^{m-2} (t+i)) h_m, plus the coefficient facts used
// for m >= 7 (non-negative f_m coefficients, g_m's t-coefficient value)
bool gm_hm_check(int m);

// sign of f_m(n) agrees with exceptional-set membership and with the sign
// of the rational F(m,n), for all 2 <= n <= n_max
bool fm_consistency(int m, int n_max);

// the rational F(m,n) built from its binomial definition
Rat capital_f(int m, int n);

struct LimitReport {
    Int limit;                   // 2n + 2^{n-1}
    Rat max_abs_error_at_m_max;  // |alpha(m_max, n) - limit|
    bool errors_decreasing = false;  // along sampled m (powers of two)
};
LimitReport limit_check(int n, int m_max);

struct ScanRow {
    int m = 0, n = 0;
    Rat alpha;
    AbscissaRegime regime = AbscissaRegime::kM1;
};

// all alpha(m,n) within [lo, hi] for 2 <= m <= m_max, 2 <= n <= n_max,
// m-major order
std::vector<ScanRow> scan_abscissae(int m_max, int n_max, const Rat& lo, const Rat& hi);

// header m,n,alpha_num,alpha_den,alpha_decimal,regime
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace prozeta
