#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prozeta/autrep.hpp"

#include <random>

using namespace prozeta;

namespace {

Rat pow_rat(const Rat& base, long e) {
    Rat r = 1;
    Rat b = e < 0 ? Rat(1) / base : base;
    for (long i = 0, k = e < 0 ? -e : e; i < k; ++i) r *= b;
    return r;
}

struct Rng {
    std::mt19937_64 gen{20240517};

    Rat rational() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        return Rat(num(gen), den(gen));
    }

    Rat nonzero_rational() {
        Rat r;
        do { r = rational(); } while (r == 0);
        return r;
    }

    RatMatrix invertible(int n) {
        while (true) {
            RatMatrix A(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) A.at(i, j) = rational();
            if (A.det() != 0) return A;
        }
    }

    UnipotentPoint unipotent(int m, int n) {
        UnipotentPoint u;
        for (const auto& g : multi_indices(n, 2 * m - 1)) u.b[g] = rational();
        const int r1 = static_cast<int>(multi_indices(n, m - 1).size());
        const int r2 = static_cast<int>(multi_indices(n, m).size());
        u.D1 = RatMatrix(r1, n);
        u.D2 = RatMatrix(r2, n);
        for (int i = 0; i < r1; ++i)
            for (int j = 0; j < n; ++j) u.D1.at(i, j) = rational();
        for (int i = 0; i < r2; ++i)
            for (int j = 0; j < n; ++j) u.D2.at(i, j) = rational();
        return u;
    }
};

}  // namespace

TEST_CASE("rho1 on the identity and on diagonal matrices") {
    CHECK(sym_power_rho1(RatMatrix::identity(2), 3, 2) == RatMatrix::identity(4));
    CHECK(sym_power_rho1(RatMatrix::identity(3), 2, 3) == RatMatrix::identity(3));

    // m=2: first symmetric power of the inverse transpose
    RatMatrix D = RatMatrix::diagonal({Rat(2), Rat(5, 3)});
    RatMatrix r = sym_power_rho1(D, 2, 2);
    CHECK(r == RatMatrix::diagonal({Rat(1, 2), Rat(3, 5)}));

    CHECK_THROWS_AS(sym_power_rho1(RatMatrix(2, 2), 2, 2), std::domain_error);
}

TEST_CASE("rho2 on the identity and in the first symmetric power") {
    CHECK(sym_power_rho2(RatMatrix::identity(2), 2, 2) == RatMatrix::identity(3));
    RatMatrix A{{Rat(1), Rat(2)}, {Rat(3), Rat(5)}};
    CHECK(sym_power_rho2(A, 1, 2) == A);  // S^1 is the natural representation
}

TEST_CASE("rho1 and rho2 are multiplicative") {
    Rng rng;
    for (int rep = 0; rep < 4; ++rep) {
        RatMatrix A = rng.invertible(3), B = rng.invertible(3);
        for (int m = 2; m <= 3; ++m) {
            CHECK(sym_power_rho1(A * B, m, 3) == sym_power_rho1(A, m, 3) * sym_power_rho1(B, m, 3));
            CHECK(sym_power_rho2(A * B, m, 3) == sym_power_rho2(A, m, 3) * sym_power_rho2(B, m, 3));
        }
    }
}

TEST_CASE("the duality pairing is preserved (unitriangular A, m=2, n=2)") {
    // evaluating the trilinear form on all basis triples before and after the
    // action is exactly the bracket-preservation check with lambda = 1
    RatMatrix A{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    LieLattice L = build_lattice(2, 2);
    CHECK(is_automorphism(L, embed_reductive({A, Rat(1)}, 2, 2)));
}

TEST_CASE("embed_reductive block layout") {
    CHECK(embed_reductive({RatMatrix::identity(2), Rat(1)}, 2, 2) == RatMatrix::identity(7));

    // m=1, n=2: rho1 is the trivial 1-dimensional block (lambda)
    RatMatrix A = RatMatrix::diagonal({Rat(3), Rat(7, 2)});
    Rat lambda(5, 4);
    RatMatrix M = embed_reductive({A, lambda}, 1, 2);
    CHECK(M.at(0, 0) == lambda);
    CHECK(M.block(1, 1, 2, 2) == A * (Rat(1) / lambda));
    CHECK(M.block(3, 3, 2, 2) == A);
}

TEST_CASE("determinant of embed_reductive matches the closed form") {
    Rng rng;
    for (auto [m, n] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        std::vector<Rat> diag;
        for (int i = 0; i < n; ++i) diag.push_back(rng.nonzero_rational());
        Rat lambda = rng.nonzero_rational();
        RatMatrix A = RatMatrix::diagonal(diag);
        Rat detA = 1;
        for (const auto& d : diag) detA *= d;
        Rat expected = pow_rat(lambda, -static_cast<long>(binomial(m + n - 2, n - 2))) *
                       pow_rat(detA, 1 + static_cast<long>(binomial(m + n - 2, n - 1)));
        CHECK(embed_reductive({A, lambda}, m, n).det() == expected);
    }
}

TEST_CASE("embed_unipotent derives the c block from b") {
    // zero parameters give the identity
    UnipotentPoint zero;
    zero.D1 = RatMatrix(2, 2);
    zero.D2 = RatMatrix(3, 2);
    CHECK(embed_unipotent(zero, 2, 2) == RatMatrix::identity(7));

    // m=1, n=2: c block is the 1x2 row (b_(1,0), b_(0,1))
    UnipotentPoint u;
    u.b[MultiIndex{{1, 0}}] = Rat(4);
    u.b[MultiIndex{{0, 1}}] = Rat(-7, 3);
    u.D1 = RatMatrix(1, 2);
    u.D2 = RatMatrix(2, 2);
    RatMatrix M = embed_unipotent(u, 1, 2);
    CHECK(M.at(0, 1) == Rat(4));       // column y_(1,0)
    CHECK(M.at(0, 2) == Rat(-7, 3));   // column y_(0,1)

    // m=2, n=2: c_{(1,0),(1,1)} = c_{(0,1),(2,0)} = b_(2,1)
    Rng rng;
    UnipotentPoint v = rng.unipotent(2, 2);
    RatMatrix N = embed_unipotent(v, 2, 2);
    auto e_idx = multi_indices(2, 1);
    auto f_idx = multi_indices(2, 2);
    auto find = [](const std::vector<MultiIndex>& v0, std::vector<int> w) {
        for (size_t i = 0; i < v0.size(); ++i)
            if (v0[i].entries == w) return static_cast<int>(i);
        return -1;
    };
    int e10 = find(e_idx, {1, 0}), e01 = find(e_idx, {0, 1});
    int f11 = find(f_idx, {1, 1}), f20 = find(f_idx, {2, 0});
    CHECK(N.at(e10, 2 + f11) == v.b.at(MultiIndex{{2, 1}}));
    CHECK(N.at(e01, 2 + f20) == v.b.at(MultiIndex{{2, 1}}));
}

TEST_CASE("constructed points are automorphisms; perturbations are not") {
    Rng rng;
    for (auto [m, n] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
        LieLattice L = build_lattice(m, n);
        CHECK(is_automorphism(L, RatMatrix::identity(L.dim())));
        for (int rep = 0; rep < 10; ++rep) {
            ReductivePoint h{rng.invertible(n), rng.nonzero_rational()};
            CHECK(is_automorphism(L, embed_reductive(h, m, n)));
            UnipotentPoint u = rng.unipotent(m, n);
            RatMatrix M = embed_unipotent(u, m, n);
            CHECK(is_automorphism(L, M));
        }
        // perturbing one c entry off the b pattern must fail
        UnipotentPoint u = rng.unipotent(m, n);
        RatMatrix M = embed_unipotent(u, m, n);
        M.at(0, L.r1()) += 1;
        CHECK(check_automorphism(L, M) == AutCheck::kNotAutomorphism);
    }
}

TEST_CASE("singular input is reported as a distinct signal") {
    LieLattice L = build_lattice(1, 2);
    RatMatrix Z(L.dim(), L.dim());
    CHECK(check_automorphism(L, Z) == AutCheck::kSingular);
    CHECK_FALSE(is_automorphism(L, Z));
}

TEST_CASE("products refactor into the semidirect shape") {
    Rng rng;
    for (auto [m, n] : {std::pair{2, 2}, {1, 3}, {2, 3}}) {
        LieLattice L = build_lattice(m, n);
        for (int rep = 0; rep < 5; ++rep) {
            ReductivePoint h1{rng.invertible(n), rng.nonzero_rational()};
            ReductivePoint h2{rng.invertible(n), rng.nonzero_rational()};
            RatMatrix g1 = embed_reductive(h1, m, n) * embed_unipotent(rng.unipotent(m, n), m, n);
            RatMatrix g2 = embed_reductive(h2, m, n) * embed_unipotent(rng.unipotent(m, n), m, n);
            RatMatrix prod = g1 * g2;
            CHECK(is_automorphism(L, prod));
            RatMatrix H, U;
            block_refactor(prod, m, n, H, U);
            CHECK(satisfies_unipotent_pattern(U, m, n));
            CHECK(H * U == prod);
        }
    }
}
