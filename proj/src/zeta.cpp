#include "prozeta/zeta.hpp"

#include "prozeta/weyl.hpp"

#include <optional>
#include <stdexcept>

namespace prozeta {

Int theta1_coefficient(int m, int n, int i) {
    // integer split of sum_{j<=i} (1 + (m-1)(i-j+1)/(n-j+1)) binom(m+j-2,m-1) binom(m+n-j-1,m-1);
    // the second sum carries the rational part with binom(m+n-k-1,m-2)
    Int s = 0;
    for (int j = 1; j <= i; ++j)
        s += binomial(m + j - 2, m - 1) * binomial(m + n - j - 1, m - 1);
    for (int k = 1; k <= i; ++k)
        s += Int(i - k + 1) * binomial(m + k - 2, m - 1) * binomial(m + n - k - 1, m - 2);
    return s;
}

ZetaParameters zeta_parameters(int m, int n) {
    if (m < 1) throw std::invalid_argument("zeta_parameters requires m >= 1");
    if (n < 2) throw std::invalid_argument("zeta_parameters requires n >= 2");
    ZetaParameters P;
    P.m = m;
    P.n = n;
    const Int r1b = binomial(m + n - 2, m - 1);
    const Int r2b = binomial(m + n - 1, m);
    P.A.resize(static_cast<size_t>(n) + 1);
    P.B.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        P.A[static_cast<size_t>(i)] = Int(i) * (n - i) + (r1b + r2b) * ((m - 1) * n + i) +
                                      theta1_coefficient(m, n, i);
        P.B[static_cast<size_t>(i)] = -Int(m) * (m - 1) * binomial(m + n - 2, m) +
                                      (1 + r1b) * ((m - 1) * n + i);
    }
    P.Atilde0 = Int(n) * (r1b + r2b);
    P.Btilde0 = r1b + n;
    P.Atilden = P.Atilde0 + binomial(2 * m + n - 2, 2 * m - 1);
    P.Btilden = r2b + n;
    // boundary values computed twice: i-indexed formulas vs tilde relations
    if ((m - 1) * P.Atilde0 != P.A[0] || (m - 1) * P.Btilde0 != P.B[0] ||
        m * P.Atilden != P.A[static_cast<size_t>(n)] ||
        m * P.Btilden != P.B[static_cast<size_t>(n)])
        throw std::logic_error("parameter relations violated");
    P.fe_a = binomial(n, 2) + 2 * Int(n) * (r1b + r2b) + binomial(2 * m + n - 2, 2 * m - 1);
    P.fe_b = Int(2 * m - 1) * binomial(m + n - 2, m) - 2 * Int(n) * (1 + r1b);
    return P;
}

namespace {
void check_rank(int m, int n) {
    if (m < 1) throw std::invalid_argument("requires m >= 1");
    if (n < 2 || n > kMaxWeylRank) throw std::invalid_argument("requires 2 <= n <= 9");
}
}  // namespace

LaurentPoly local_zeta_numerator(int m, int n) {
    check_rank(m, n);
    ZetaParameters P = zeta_parameters(m, n);
    LaurentPoly num;
    for (const auto& w : weyl_elements(n)) {
        std::int64_t qe = -w.length, te = 0;
        for (int i = 1; i <= n - 1; ++i) {
            if (!w.nu(i)) continue;
            qe += to_int64(P.A[static_cast<size_t>(i)]);
            te += to_int64(P.B[static_cast<size_t>(i)]);
        }
        num.add_term({qe, te}, 1);
    }
    return num;
}

RationalFnQT local_zeta(int m, int n) {
    check_rank(m, n);
    ZetaParameters P = zeta_parameters(m, n);
    std::vector<DenFactor> den;
    for (int i = 1; i <= n - 1; ++i)
        den.push_back({to_int64(P.A[static_cast<size_t>(i)]), to_int64(P.B[static_cast<size_t>(i)])});
    den.push_back({to_int64(P.Atilde0), to_int64(P.Btilde0)});
    den.push_back({to_int64(P.Atilden), to_int64(P.Btilden)});
    return RationalFnQT(local_zeta_numerator(m, n), std::move(den));
}

RationalFnQT dstar_zeta(int m) {
    if (m < 1) throw std::invalid_argument("dstar_zeta requires m >= 1");
    const Int num_q = (Int(9) * m * m + m - 2) / 2;
    const Int big_t = Int(m) * m + 2 * m - 1;
    const Int den_q = Int(m) * (9 * m + 1) / 2;
    LaurentPoly num = LaurentPoly::one() +
                      LaurentPoly::monomial(to_int64(num_q), to_int64(big_t));
    std::vector<DenFactor> den{{to_int64(den_q), to_int64(big_t)},
                               {4 * std::int64_t{m} + 2, std::int64_t{m} + 2},
                               {6 * std::int64_t{m} + 2, std::int64_t{m} + 3}};
    return RationalFnQT(std::move(num), std::move(den));
}

bool gl_weyl_product_identity(int n) {
    if (n < 2 || n > 7) throw std::invalid_argument("gl_weyl_product_identity supports 2 <= n <= 7");
    LaurentPoly gl_num;
    for (const auto& w : weyl_elements(n)) {
        std::int64_t qe = -w.length, te = 0;
        for (int i = 1; i <= n - 1; ++i) {
            if (!w.nu(i)) continue;
            qe += std::int64_t{i} * (n - i);
            te += i;
        }
        gl_num.add_term({qe, te}, 1);
    }
    std::vector<DenFactor> gl_den;
    for (int i = 1; i <= n; ++i) gl_den.push_back({std::int64_t{i} * (n - i), i});
    RationalFnQT lhs(gl_num, gl_den);
    std::vector<DenFactor> rhs_den;
    for (int i = 1; i <= n; ++i) rhs_den.push_back({std::int64_t{i} - 1, 1});
    RationalFnQT rhs(LaurentPoly::one(), rhs_den);
    return rational_equal(lhs, rhs);
}

bool grenham_identity_check(int n) {
    if (n < 2 || n > 7) throw std::invalid_argument("grenham_identity_check supports 2 <= n <= 7");
    const auto W = weyl_elements(n);

    // first display: Weyl numerator with exponents i(2n+2-i) - 2is
    LaurentPoly num1;
    for (const auto& w : W) {
        std::int64_t qe = -w.length, te = 0;
        for (int i = 1; i <= n - 1; ++i) {
            if (!w.nu(i)) continue;
            qe += std::int64_t{i} * (2 * n + 2 - i);
            te += 2 * std::int64_t{i};
        }
        num1.add_term({qe, te}, 1);
    }
    std::vector<DenFactor> den1{{std::int64_t{n} * (n + 1), std::int64_t{n} + 1}};
    for (int i = 1; i <= n; ++i) den1.push_back({std::int64_t{i} * (2 * n + 2 - i), 2 * std::int64_t{i}});
    RationalFnQT first(num1, den1);

    // second display: fully split product
    std::vector<DenFactor> den2{{std::int64_t{n} * (n + 1), std::int64_t{n} + 1}};
    for (int i = 1; i <= n; ++i) den2.push_back({std::int64_t{n} + 1 + i, 2});
    RationalFnQT second(LaurentPoly::one(), den2);

    RationalFnQT zeta = local_zeta(1, n);
    if (!rational_equal(zeta, first) || !rational_equal(zeta, second)) return false;

    return gl_weyl_product_identity(n);
}

namespace {
// g == c * q^dq t^dt * f for a constant c: extract (c, dq, dt)
std::optional<std::tuple<Int, std::int64_t, std::int64_t>> monomial_quotient(
    const LaurentPoly& g, const LaurentPoly& f) {
    if (f.is_zero() || g.is_zero() || g.term_count() != f.term_count()) return std::nullopt;
    const auto& gmax = *g.terms().rbegin();
    const auto& fmax = *f.terms().rbegin();
    if (gmax.second % fmax.second != 0) return std::nullopt;
    Int c = gmax.second / fmax.second;
    std::int64_t dq = gmax.first.q - fmax.first.q;
    std::int64_t dt = gmax.first.t - fmax.first.t;
    if (f.times_monomial(dq, dt, c) != g) return std::nullopt;
    return std::make_tuple(c, dq, dt);
}
}  // namespace

FnEqResult functional_equation_check(int m, int n) {
    check_rank(m, n);
    FnEqResult r;
    RationalFnQT zeta = local_zeta(m, n);
    RationalFnQT inverted = zeta.substitute_inverse();
    if (inverted.denominator_factors() != zeta.denominator_factors()) return r;
    auto quotient = monomial_quotient(inverted.numerator(), zeta.numerator());
    if (!quotient) return r;
    const auto& [c, dq, dt] = *quotient;
    if (c != 1 && c != -1) return r;
    r.sign = (c == 1) ? 1 : -1;
    // the symmetry factor q^{a+bs} is the monomial q^a t^{-b}
    r.a = dq;
    r.b = -dt;
    ZetaParameters P = zeta_parameters(m, n);
    const int expected_sign = (n % 2 == 1) ? 1 : -1;  // (-1)^{n-1}
    r.holds = (r.sign == expected_sign) && (r.a == P.fe_a) && (r.b == P.fe_b);
    return r;
}

}  // namespace prozeta
