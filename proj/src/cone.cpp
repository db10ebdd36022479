#include "prozeta/cone.hpp"

#include "prozeta/multi_index.hpp"
#include "prozeta/weyl.hpp"
#include "prozeta/zeta.hpp"

#include <stdexcept>

namespace prozeta {

namespace {
void check_point(int m, int n, const ConePoint& e) {
    if (m < 1 || n < 2) throw std::invalid_argument("requires m >= 1, n >= 2");
    if (e.rank() != n) throw std::invalid_argument("cone point must have n+1 entries");
    for (auto v : e.e)
        if (v < 0) throw std::invalid_argument("cone point entries must be non-negative");
}

// the three displayed det-valuation coefficients: e_0, e_i (1<=i<=n-1), e_n
std::vector<Int> det_coefficients(int m, int n) {
    std::vector<Int> co(static_cast<size_t>(n) + 1);
    co[0] = binomial(m + n - 2, m - 1) + n;
    for (int i = 1; i <= n - 1; ++i)
        co[static_cast<size_t>(i)] = -Int(m) * (m - 1) * binomial(m + n - 2, m) +
                                     (1 + binomial(m + n - 2, m - 1)) * ((m - 1) * n + i);
    co[static_cast<size_t>(n)] = binomial(m + n - 1, m) + n;
    return co;
}
}  // namespace

TorusValuations torus_valuations(int m, int n, const ConePoint& e) {
    check_point(m, n, e);
    TorusValuations tv;
    tv.va.resize(static_cast<size_t>(n));
    std::int64_t total = 0;  // e_1 + ... + e_{n-1}
    for (int l = 1; l <= n - 1; ++l) total += e[l];
    std::int64_t prefix = 0;  // e_1 + ... + e_{i-1}
    for (int i = 1; i <= n; ++i) {
        tv.va[static_cast<size_t>(i - 1)] =
            Int(m - 1) * prefix + Int(m) * (total - prefix) + e[0] + e[n];
        if (i <= n - 1) prefix += e[i];
    }
    tv.vlambda = Int(m) * (m - 1) * total + Int(m) * e[0] + Int(m - 1) * e[n];
    return tv;
}

Int det_valuation(int m, int n, const ConePoint& e) {
    check_point(m, n, e);
    const auto co = det_coefficients(m, n);
    Int v = 0;
    for (int i = 0; i <= n; ++i) v += co[static_cast<size_t>(i)] * e[i];
    // independent route through the torus valuations
    TorusValuations tv = torus_valuations(m, n, e);
    Int sum_va = 0;
    for (const auto& x : tv.va) sum_va += x;
    Int v2 = -binomial(m + n - 2, n - 2) * tv.vlambda + (1 + binomial(m + n - 2, n - 1)) * sum_va;
    if (v != v2) throw std::logic_error("det valuation routes disagree");
    return v;
}

Int theta1_direct(int m, int n, const ConePoint& e) {
    check_point(m, n, e);
    TorusValuations tv = torus_valuations(m, n, e);
    const auto F = multi_indices(n, m);
    const auto G = multi_indices(n, 2 * m - 1);
    Int total = 0;
    for (const auto& g : G) {
        bool found = false;
        Int best = 0;
        for (const auto& f : F) {
            if (!f.dominated_by(g)) continue;
            Int v = -tv.vlambda;
            for (int i = 0; i < n; ++i)
                if (f[i] != 0) v += Int(f[i]) * tv.va[static_cast<size_t>(i)];
            if (!found || v < best) { best = v; found = true; }
        }
        if (!found) throw std::logic_error("no dominated f for g");  // impossible: weights m <= 2m-1
        total += best;
    }
    return total;
}

Int theta1_closed(int m, int n, const ConePoint& e) {
    check_point(m, n, e);
    Int v = 0;
    for (int i = 1; i <= n - 1; ++i) v += theta1_coefficient(m, n, i) * e[i];
    v += binomial(2 * m + n - 2, n - 1) * e[n];
    return v;
}

Int theta2(int m, int n, const ConePoint& e) {
    check_point(m, n, e);
    TorusValuations tv = torus_valuations(m, n, e);
    Int sum_va = 0;
    for (const auto& x : tv.va) sum_va += x;
    const Int r1 = binomial(m + n - 2, n - 1);
    const Int r2 = binomial(m + n - 1, n - 1);
    Int v = (r1 + r2) * sum_va;
    // displayed e-coefficient form
    Int v2 = 0;
    for (int l = 1; l <= n - 1; ++l) v2 += Int((m - 1) * n + l) * e[l];
    v2 += Int(n) * (e[0] + e[n]);
    v2 *= binomial(m + n - 2, m - 1) + binomial(m + n - 1, m);
    if (v != v2) throw std::logic_error("theta2 routes disagree");
    return v;
}

Int theta1_e0_coefficient(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("requires m, n >= 1");
    Int s = 0;
    for (int i = 1; i <= n; ++i) {
        s += binomial(m + i - 2, i - 1) * binomial(m + n - i - 1, n - i);
        for (int k = 1; k <= i; ++k)
            s += binomial(m + k - 2, k - 1) * binomial(m + n - k - 1, n - k + 1);
    }
    return s - Int(m) * binomial(2 * m + n - 2, n - 1);
}

std::vector<ConePoint> enumerate_cone_points(int m, int n, int max_t_degree,
                                             const std::vector<bool>& nu) {
    if (max_t_degree < 0) throw std::invalid_argument("negative truncation degree");
    if (static_cast<int>(nu.size()) != n - 1)
        throw std::invalid_argument("descent vector must have n-1 entries");
    const auto co_int = det_coefficients(m, n);
    std::vector<std::int64_t> co;
    for (const auto& c : co_int) {
        if (c < 1) throw std::logic_error("det-valuation coefficient below 1");
        co.push_back(to_int64(c));
    }
    std::vector<ConePoint> out;
    ConePoint cur;
    cur.e.assign(static_cast<size_t>(n) + 1, 0);
    // depth-first over coordinates with the remaining t budget
    auto rec = [&](auto&& self, int idx, std::int64_t remaining) -> void {
        if (idx == n + 1) {
            out.push_back(cur);
            return;
        }
        std::int64_t lo = (idx >= 1 && idx <= n - 1 && nu[static_cast<size_t>(idx - 1)]) ? 1 : 0;
        for (std::int64_t v = lo; v * co[static_cast<size_t>(idx)] <= remaining; ++v) {
            cur.e[static_cast<size_t>(idx)] = v;
            self(self, idx + 1, remaining - v * co[static_cast<size_t>(idx)]);
        }
        cur.e[static_cast<size_t>(idx)] = 0;
    };
    rec(rec, 0, max_t_degree);
    return out;
}

TruncatedSeries cone_series(int m, int n, int max_t_degree, std::int64_t term_budget) {
    if (m < 1) throw std::invalid_argument("requires m >= 1");
    if (n < 2 || n > 6) throw std::invalid_argument("cone_series supports 2 <= n <= 6");
    if (max_t_degree < 0) throw std::invalid_argument("negative truncation degree");

    const auto co_int = det_coefficients(m, n);
    std::int64_t box = 1;
    for (const auto& c : co_int) {
        std::int64_t side = max_t_degree / to_int64(c) + 1;
        if (box > term_budget / side + 1) throw std::length_error("cone enumeration exceeds term budget");
        box *= side;
    }
    if (box > term_budget) throw std::length_error("cone enumeration exceeds term budget");

    const auto W = weyl_elements(n);
    TruncatedSeries s;
    s.max_t_degree = max_t_degree;
    s.coeffs.assign(static_cast<size_t>(max_t_degree) + 1, {});

    std::vector<bool> free_cone(static_cast<size_t>(n - 1), false);
    for (const auto& pt : enumerate_cone_points(m, n, max_t_degree, free_cone)) {
        const Int tval = det_valuation(m, n, pt);
        // q exponent: <beta_0, xi> + log_q theta1 + log_q theta2
        Int qe = theta1_direct(m, n, pt) + theta2(m, n, pt);
        for (int i = 1; i <= n - 1; ++i) qe += Int(i) * (n - i) * pt[i];
        const std::int64_t tv64 = to_int64(tval);
        for (const auto& w : W) {
            bool inside = true;
            for (int i = 1; i <= n - 1 && inside; ++i)
                if (w.nu(i) && pt[i] < 1) inside = false;
            if (!inside) continue;
            auto& slot = s.coeffs[static_cast<size_t>(tv64)][to_int64(qe) - w.length];
            slot += 1;
        }
    }
    return s;
}

bool oracle_compare(int m, int n, int max_t_degree) {
    TruncatedSeries direct = cone_series(m, n, max_t_degree);
    TruncatedSeries closed = local_zeta(m, n).series_expand(max_t_degree);
    return direct == closed;
}

}  // namespace prozeta
