#include "prozeta/analysis.hpp"

#include "prozeta/zeta.hpp"

#include <stdexcept>

namespace prozeta {

std::string regime_name(AbscissaRegime r) {
    switch (r) {
        case AbscissaRegime::kM1: return "M1";
        case AbscissaRegime::kC0: return "C0";
        case AbscissaRegime::kCN: return "CN";
    }
    throw std::logic_error("unknown regime");
}

bool in_exceptional_set_explicit(int m, int n) {
    if ((m == 2 || m == 3) && n >= 3) return true;
    if (m == 4 && n >= 4 && n <= 38) return true;
    if (m == 5 && n >= 5 && n <= 9) return true;
    return false;
}

Rat beta(int m, int n) {
    ZetaParameters P = zeta_parameters(m, n);
    Rat best;
    for (int i = 1; i <= n - 1; ++i) {
        Rat r(P.A[static_cast<size_t>(i)], P.B[static_cast<size_t>(i)]);
        if (i == 1 || r > best) best = r;
    }
    return best;
}

AbscissaReport abscissa(int m, int n) {
    ZetaParameters P = zeta_parameters(m, n);
    AbscissaReport rep;
    rep.m = m;
    rep.n = n;
    rep.beta = beta(m, n);
    if (m == 1) {
        rep.regime = AbscissaRegime::kM1;
        rep.alpha = Rat(P.A[1] + 1, P.B[1]);
        rep.in_exceptional_set = false;
    } else {
        const Rat r0(P.Atilde0 + 1, P.Btilde0);
        const Rat rn(P.Atilden + 1, P.Btilden);
        const bool direct = r0 > rn;  // the Atilde0 branch wins on the exceptional set
        if (direct != in_exceptional_set_explicit(m, n))
            throw std::logic_error("exceptional-set membership routes disagree");
        rep.in_exceptional_set = direct;
        rep.regime = direct ? AbscissaRegime::kC0 : AbscissaRegime::kCN;
        rep.alpha = direct ? r0 : rn;
    }
    if (!(rep.beta < rep.alpha)) throw std::logic_error("beta >= alpha");
    return rep;
}

bool convexity_check(int m, int n) {
    if (m < 2) throw std::invalid_argument("convexity_check requires m >= 2");
    ZetaParameters P = zeta_parameters(m, n);
    const Int y_expected = 1 + binomial(m + n - 2, m - 1);
    std::vector<Int> x;
    for (int i = 1; i <= n; ++i) {
        if (P.B[static_cast<size_t>(i)] - P.B[static_cast<size_t>(i - 1)] != y_expected)
            return false;
        x.push_back(P.A[static_cast<size_t>(i)] - P.A[static_cast<size_t>(i - 1)]);
    }
    if (!(x[0] > 0)) return false;
    for (size_t i = 1; i < x.size(); ++i) {
        const Int d = x[i] - x[i - 1];
        // the last increment collapses to zero exactly at m = 2
        if (i + 1 < x.size()) {
            if (!(d > 0)) return false;
        } else if (m == 2) {
            if (d != 0) return false;
        } else {
            if (!(d > 0)) return false;
        }
    }
    Rat interior_max;
    for (int i = 1; i <= n - 1; ++i) {
        Rat r(P.A[static_cast<size_t>(i)] + 1, P.B[static_cast<size_t>(i)]);
        if (i == 1 || r > interior_max) interior_max = r;
    }
    Rat end0(P.Atilde0 + 1, P.Btilde0), endn(P.Atilden + 1, P.Btilden);
    return interior_max < (end0 > endn ? end0 : endn);
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

namespace {
void trim(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r;
    r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), Int(0));
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    trim(r.coeffs);
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    IntPolynomial r;
    if (coeffs.empty() || o.coeffs.empty()) return r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    trim(r.coeffs);
    return r;
}

IntPolynomial IntPolynomial::scaled(const Int& c) const {
    IntPolynomial r = *this;
    for (auto& v : r.coeffs) v *= c;
    trim(r.coeffs);
    return r;
}

std::string IntPolynomial::to_text(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::string s;
    bool leading = true;
    for (int d = degree(); d >= 0; --d) {
        const Int& c = coeffs[static_cast<size_t>(d)];
        if (c == 0) continue;
        Int a = c;
        if (leading) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1 || d == 0) s += a.str();
        if (d >= 1) {
            if (a != 1) s += " ";
            s += var;
            if (d >= 2) s += "^" + std::to_string(d);
        }
        leading = false;
    }
    return s.empty() ? "0" : s;
}

IntPolynomial rising_product(int lo, int hi) {
    IntPolynomial p;
    p.coeffs = {Int(1)};
    for (int i = lo; i <= hi; ++i) {
        IntPolynomial factor;
        factor.coeffs = {Int(i), Int(1)};
        p = p * factor;
    }
    return p;
}

IntPolynomial f_m_polynomial(int m) {
    if (m < 2) throw std::invalid_argument("f_m_polynomial requires m >= 2");
    IntPolynomial t;
    t.coeffs = {Int(0), Int(1)};
    IntPolynomial tm1;  // t - 1
    tm1.coeffs = {Int(-1), Int(1)};

    IntPolynomial inner1 = rising_product(1, m - 2);
    IntPolynomial plus_fact = inner1 + IntPolynomial{{factorial(m - 1)}};
    IntPolynomial term1 = (t * rising_product(m - 1, 2 * m - 2) * plus_fact).scaled(m);

    Int c = 1;
    for (int i = m + 1; i <= 2 * m - 1; ++i) c *= i;
    IntPolynomial t2;
    t2.coeffs = {Int(0), Int(0), Int(1)};
    IntPolynomial shift;  // t + 2m - 1
    shift.coeffs = {Int(2 * m - 1), Int(1)};
    IntPolynomial inner2 = t2 * shift * inner1 + IntPolynomial{{factorial(m)}};
    IntPolynomial term2 = (tm1 * inner2).scaled(c);

    return term1 + term2.scaled(-1);
}

IntPolynomial g_m_polynomial(int m) {
    if (m < 2) throw std::invalid_argument("g_m_polynomial requires m >= 2");
    IntPolynomial t;
    t.coeffs = {Int(0), Int(1)};
    IntPolynomial tm1;
    tm1.coeffs = {Int(-1), Int(1)};
    return (t * rising_product(m - 1, 2 * m - 2)).scaled(factorial(m)) +
           tm1.scaled(-factorial(2 * m - 1));
}

IntPolynomial h_m_polynomial(int m) {
    if (m < 2) throw std::invalid_argument("h_m_polynomial requires m >= 2");
    IntPolynomial t;
    t.coeffs = {Int(0), Int(1)};
    IntPolynomial tm1;
    tm1.coeffs = {Int(-1), Int(1)};
    IntPolynomial shift;
    shift.coeffs = {Int(2 * m - 1), Int(1)};
    const Int c = factorial(2 * m - 1) / factorial(m);
    return rising_product(m - 1, 2 * m - 2).scaled(m) + (tm1 * t * shift).scaled(-c);
}

bool gm_hm_check(int m) {
    if (m < 2) throw std::invalid_argument("gm_hm_check requires m >= 2");
    IntPolynomial lhs = f_m_polynomial(m);
    IntPolynomial rhs = g_m_polynomial(m) + rising_product(0, m - 2) * h_m_polynomial(m);
    if (!(lhs == rhs)) return false;
    if (m >= 7) {
        for (const auto& c : lhs.coeffs)
            if (c < 0) return false;
        const IntPolynomial g = g_m_polynomial(m);
        if (g.degree() < 1) return false;
        if (g.coeffs[1] != (Int(m) * m - 3 * m + 1) * factorial(2 * m - 2)) return false;
    }
    return true;
}

Rat capital_f(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("capital_f requires m, n >= 2");
    Rat first(binomial(2 * m + n - 2, 2 * m - 1), binomial(m + n - 2, m));
    Rat inner = Rat(Int(n) * (n - 1), m) + 2 * n;
    Rat second = (Rat(binomial(m + n - 2, m - 1)) * inner + 1) /
                 Rat(binomial(m + n - 2, m - 1) + n);
    return first - second;
}

bool fm_consistency(int m, int n_max) {
    if (m < 2) throw std::invalid_argument("fm_consistency requires m >= 2");
    const IntPolynomial f = f_m_polynomial(m);
    for (int n = 2; n <= n_max; ++n) {
        const Int value = f.evaluate(n);
        const bool in_set = in_exceptional_set_explicit(m, n);
        if (in_set != (value < 0)) return false;
        if (!in_set && !(value > 0)) return false;  // strictness: zero never occurs
        const Rat F = capital_f(m, n);
        if ((F > 0) != (value > 0) || (F < 0) != (value < 0)) return false;
    }
    return true;
}

LimitReport limit_check(int n, int m_max) {
    if (n < 2) throw std::invalid_argument("limit_check requires n >= 2");
    if (m_max < 10) throw std::invalid_argument("limit_check requires m_max >= 10");
    LimitReport rep;
    rep.limit = 2 * Int(n) + pow_int(2, static_cast<unsigned long>(n - 1));
    auto err = [&](int m) {
        Rat e = abscissa(m, n).alpha - Rat(rep.limit);
        return e < 0 ? Rat(-e) : e;
    };
    rep.max_abs_error_at_m_max = err(m_max);
    // sampled eventual monotonicity: powers of two up to m_max, then m_max
    std::vector<int> samples;
    for (int s = 16; s < m_max; s *= 2) samples.push_back(s);
    samples.push_back(m_max);
    rep.errors_decreasing = true;
    Rat prev;
    for (size_t i = 0; i < samples.size(); ++i) {
        Rat e = err(samples[i]);
        if (i > 0 && !(e < prev)) rep.errors_decreasing = false;
        prev = e;
    }
    return rep;
}

std::vector<ScanRow> scan_abscissae(int m_max, int n_max, const Rat& lo, const Rat& hi) {
    if (m_max < 2 || n_max < 2) throw std::invalid_argument("scan bounds must be >= 2");
    std::vector<ScanRow> rows;
    for (int m = 2; m <= m_max; ++m)
        for (int n = 2; n <= n_max; ++n) {
            AbscissaReport rep = abscissa(m, n);
            if (rep.alpha < lo || rep.alpha > hi) continue;
            rows.push_back({m, n, rep.alpha, rep.regime});
        }
    return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string s = "m,n,alpha_num,alpha_den,alpha_decimal,regime\n";
    for (const auto& r : rows) {
        s += std::to_string(r.m) + "," + std::to_string(r.n) + ",";
        s += boost::multiprecision::numerator(r.alpha).str() + ",";
        s += boost::multiprecision::denominator(r.alpha).str() + ",";
        s += decimal_string(r.alpha) + "," + regime_name(r.regime) + "\n";
    }
    return s;
}

}  // namespace prozeta
