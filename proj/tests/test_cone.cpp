#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prozeta/cone.hpp"
#include "prozeta/weyl.hpp"
#include "prozeta/zeta.hpp"

using namespace prozeta;

namespace {
ConePoint pt(std::vector<std::int64_t> e) { return ConePoint{std::move(e)}; }

// all points with entry sum <= total (not det-valuation bounded)
void sum_bounded_points(int coords, int total, std::vector<std::int64_t>& cur,
                        std::vector<ConePoint>& out) {
    if (static_cast<int>(cur.size()) == coords) {
        out.push_back(ConePoint{cur});
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        sum_bounded_points(coords, total - v, cur, out);
        cur.pop_back();
    }
}
}  // namespace

TEST_CASE("torus valuations from the exponent formulas") {
    TorusValuations a = torus_valuations(1, 2, pt({0, 1, 0}));
    CHECK(a.va == std::vector<Int>{1, 0});
    CHECK(a.vlambda == 0);

    TorusValuations b = torus_valuations(3, 4, pt({0, 0, 0, 0, 0}));
    CHECK(b.va == std::vector<Int>(4, Int(0)));
    CHECK(b.vlambda == 0);

    TorusValuations c = torus_valuations(2, 2, pt({1, 0, 0}));
    CHECK(c.va == std::vector<Int>{1, 1});
    CHECK(c.vlambda == 2);

    CHECK_THROWS_AS(torus_valuations(2, 2, pt({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(torus_valuations(2, 2, pt({1, -1, 0})), std::invalid_argument);
}

TEST_CASE("valuations are non-increasing across the diagonal") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            std::vector<ConePoint> pts;
            std::vector<std::int64_t> cur;
            sum_bounded_points(n + 1, 4, cur, pts);
            for (const auto& e : pts) {
                TorusValuations tv = torus_valuations(m, n, e);
                for (size_t i = 1; i < tv.va.size(); ++i) CHECK(tv.va[i - 1] >= tv.va[i]);
            }
        }
}

TEST_CASE("determinant valuation via both routes") {
    CHECK(det_valuation(1, 2, pt({0, 1, 0})) == 2);   // B_1
    CHECK(det_valuation(2, 2, pt({0, 0, 1})) == 5);   // Btilde_n
    CHECK(det_valuation(3, 3, pt({0, 0, 0, 0})) == 0);

    // coefficients of the linear form agree with the exponent data
    ZetaParameters P = zeta_parameters(2, 3);
    for (int i = 0; i <= 3; ++i) {
        std::vector<std::int64_t> e(4, 0);
        e[static_cast<size_t>(i)] = 1;
        Int expected = (i == 0)   ? P.Btilde0
                       : (i == 3) ? P.Btilden
                                  : P.B[static_cast<size_t>(i)];
        CHECK(det_valuation(2, 3, pt(e)) == expected);
    }
}

TEST_CASE("theta1 by direct enumeration") {
    CHECK(theta1_direct(1, 2, pt({0, 1, 0})) == 1);
    CHECK(theta1_direct(1, 2, pt({0, 0, 0})) == 0);
    CHECK(theta1_direct(2, 2, pt({0, 1, 0})) == 3);  // C_1(2,2) = (1 + 1/2) * 1 * 2
    CHECK(theta1_coefficient(2, 2, 1) == 3);
}

TEST_CASE("theta1 closed form and theta2") {
    CHECK(theta1_closed(1, 2, pt({0, 1, 0})) == 1);
    CHECK(theta2(1, 2, pt({0, 1, 0})) == 3);  // (r1 + r2) * sum v(a_i) = 3 * 1

    // coefficient of e_n is binom(2m+n-2, n-1)
    for (int m = 1; m <= 5; ++m)
        for (int n = 2; n <= 5; ++n) {
            std::vector<std::int64_t> e(static_cast<size_t>(n) + 1, 0);
            e.back() = 1;
            CHECK(theta1_closed(m, n, pt(e)) == binomial(2 * m + n - 2, n - 1));
        }
}

TEST_CASE("direct and closed theta1 agree on small cone points") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            std::vector<ConePoint> pts;
            std::vector<std::int64_t> cur;
            sum_bounded_points(n + 1, 4, cur, pts);
            for (const auto& e : pts)
                CHECK(theta1_direct(m, n, e) == theta1_closed(m, n, e));
        }
}

TEST_CASE("the pre-simplification e_0 weight vanishes") {
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n) CHECK(theta1_e0_coefficient(m, n) == 0);
}

TEST_CASE("cone series reproduces the closed form") {
    TruncatedSeries s = cone_series(1, 2, 5);
    TruncatedSeries expected = local_zeta(1, 2).series_expand(5);
    CHECK(s == expected);
    CHECK(s.coeffs[0] == std::map<std::int64_t, Int>{{0, 1}});
    CHECK(s.coeffs[1].empty());
    CHECK(s.coeffs[2] == std::map<std::int64_t, Int>{{4, 1}, {5, 1}});
    CHECK(s.coeffs[3] == std::map<std::int64_t, Int>{{6, 1}});
    CHECK(s.coeffs[4] == std::map<std::int64_t, Int>{{8, 1}, {9, 1}, {10, 1}});
    CHECK(s.coeffs[5] == std::map<std::int64_t, Int>{{10, 1}, {11, 1}});

    // t^4 coefficient at (2,2) comes from the single point e = (1,0,0)
    TruncatedSeries s22 = cone_series(2, 2, 4);
    CHECK(s22.coeffs[4] == std::map<std::int64_t, Int>{{10, 1}});

    // K = 0 leaves only the origin under the identity element
    TruncatedSeries s0 = cone_series(3, 3, 0);
    CHECK(s0.coeffs[0] == std::map<std::int64_t, Int>{{0, 1}});
}

TEST_CASE("oracle_compare on a small grid") {
    CHECK(oracle_compare(1, 2, 10));
    CHECK(oracle_compare(2, 2, 8));
    CHECK(oracle_compare(1, 3, 8));
}

TEST_CASE("a shifted theta1 on e_n-only points breaks the match") {
    const int m = 1, n = 2, K = 8;
    const auto W = weyl_elements(n);
    TruncatedSeries s;
    s.max_t_degree = K;
    s.coeffs.assign(K + 1, {});
    std::vector<bool> free_cone(static_cast<size_t>(n - 1), false);
    for (const auto& e : enumerate_cone_points(m, n, K, free_cone)) {
        bool en_only = e[n] > 0;
        for (int i = 0; i < n; ++i)
            if (e[i] != 0) en_only = false;
        Int qbase = theta1_direct(m, n, e) + theta2(m, n, e) + (en_only ? 1 : 0);
        for (int i = 1; i <= n - 1; ++i) qbase += Int(i) * (n - i) * e[i];
        Int tval = det_valuation(m, n, e);
        for (const auto& w : W) {
            bool inside = true;
            for (int i = 1; i <= n - 1 && inside; ++i)
                if (w.nu(i) && e[i] < 1) inside = false;
            if (!inside) continue;
            s.coeffs[static_cast<size_t>(to_int64(tval))][to_int64(qbase) - w.length] += 1;
        }
    }
    CHECK_FALSE(s == local_zeta(m, n).series_expand(K));
}

TEST_CASE("cone enumeration respects the descent constraints and budget") {
    std::vector<bool> nu{true};
    for (const auto& e : enumerate_cone_points(1, 2, 6, nu)) CHECK(e[1] >= 1);

    CHECK_THROWS_AS(cone_series(1, 2, 10000), std::length_error);
    CHECK_THROWS_AS(cone_series(1, 7, 4), std::invalid_argument);  // rank cap
}
