#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prozeta/lattice.hpp"

using namespace prozeta;

namespace {
RatVec basis_vec(const LieLattice& L, int pos) {
    RatVec v(static_cast<size_t>(L.dim()), Rat(0));
    v[static_cast<size_t>(pos)] = 1;
    return v;
}

bool is_zero(const RatVec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}
}  // namespace

TEST_CASE("multi_indices enumerates compositions in descending lex order") {
    auto two = multi_indices(2, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0].entries == std::vector<int>{1, 0});
    CHECK(two[1].entries == std::vector<int>{0, 1});

    CHECK(multi_indices(3, 2).size() == 6);  // binom(4,2)

    auto empty_weight = multi_indices(4, 0);
    REQUIRE(empty_weight.size() == 1);
    CHECK(empty_weight[0].entries == std::vector<int>{0, 0, 0, 0});

    CHECK_THROWS_AS(multi_indices(0, 3), std::invalid_argument);
}

TEST_CASE("multi_indices counts match binomials") {
    for (int n = 1; n <= 6; ++n)
        for (int w = 0; w <= 8; ++w)
            CHECK(Int(multi_indices(n, w).size()) == binomial(w + n - 1, n - 1));
}

TEST_CASE("multi_indices are strictly descending and weight-correct") {
    auto idx = multi_indices(4, 5);
    for (size_t i = 0; i < idx.size(); ++i) {
        CHECK(idx[i].weight() == 5);
        if (i + 1 < idx.size()) CHECK(idx[i].entries > idx[i + 1].entries);
    }
}

TEST_CASE("build_lattice m=1 n=2 is the Hirsch length 5 lattice") {
    LieLattice L = build_lattice(1, 2);
    CHECK(L.r1() == 1);
    CHECK(L.r2() == 2);
    CHECK(L.r3() == 2);
    CHECK(L.dim() == 5);
    int e0 = L.e_index_of(MultiIndex{{0, 0}});
    int f10 = L.f_index_of(MultiIndex{{1, 0}});
    int f01 = L.f_index_of(MultiIndex{{0, 1}});
    CHECK(L.structure_z(e0, f10) == 0);  // z_1
    CHECK(L.structure_z(e0, f01) == 1);  // z_2
}

TEST_CASE("build_lattice dimensions") {
    LieLattice L22 = build_lattice(2, 2);
    CHECK(L22.dim() == 7);  // 2m+3 at m=2

    LieLattice L23 = build_lattice(2, 3);
    CHECK(L23.r1() == 3);
    CHECK(L23.r2() == 6);
    CHECK(L23.r3() == 3);
    CHECK(L23.dim() == 12);
    CHECK(L23.r1() == static_cast<int>(multi_indices(3, 1).size()));
    CHECK(L23.r2() == static_cast<int>(multi_indices(3, 2).size()));

    CHECK_THROWS_AS(build_lattice(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_lattice(1, 1), std::invalid_argument);
}

TEST_CASE("bracket on basis combinations") {
    LieLattice L = build_lattice(2, 2);

    // [y_f, y_f'] = 0
    for (int f = 0; f < L.r2(); ++f)
        for (int g = 0; g < L.r2(); ++g)
            CHECK(is_zero(L.bracket(basis_vec(L, L.y_pos(f)), basis_vec(L, L.y_pos(g)))));

    // [x_(1,0), y_(1,1)] = z_2
    RatVec r = L.bracket(basis_vec(L, L.x_pos(L.e_index_of(MultiIndex{{1, 0}}))),
                         basis_vec(L, L.y_pos(L.f_index_of(MultiIndex{{1, 1}}))));
    CHECK(r[static_cast<size_t>(L.z_pos(1))] == 1);
    r[static_cast<size_t>(L.z_pos(1))] = 0;
    CHECK(is_zero(r));

    // bilinearity: [x_(1,0) + x_(0,1), y_(2,0)] = z_1
    RatVec u(static_cast<size_t>(L.dim()), Rat(0));
    u[static_cast<size_t>(L.x_pos(L.e_index_of(MultiIndex{{1, 0}})))] = 1;
    u[static_cast<size_t>(L.x_pos(L.e_index_of(MultiIndex{{0, 1}})))] = 1;
    RatVec s = L.bracket(u, basis_vec(L, L.y_pos(L.f_index_of(MultiIndex{{2, 0}}))));
    CHECK(s[static_cast<size_t>(L.z_pos(0))] == 1);
    s[static_cast<size_t>(L.z_pos(0))] = 0;
    CHECK(is_zero(s));

    // antisymmetry on random-ish combinations
    RatVec v(static_cast<size_t>(L.dim()), Rat(0));
    v[static_cast<size_t>(L.y_pos(0))] = Rat(2, 3);
    v[static_cast<size_t>(L.x_pos(1))] = -1;
    RatVec uv = L.bracket(u, v), vu = L.bracket(v, u);
    for (size_t i = 0; i < uv.size(); ++i) CHECK(uv[i] == -vu[i]);
}

TEST_CASE("check_lie_axioms accepts the family and rejects a corruption") {
    CHECK(check_lie_axioms(build_lattice(1, 2)));
    CHECK(check_lie_axioms(build_lattice(3, 3)));

    LieLattice L = build_lattice(2, 2);
    RatVec bad(static_cast<size_t>(L.dim()), Rat(0));
    bad[static_cast<size_t>(L.y_pos(0))] = 1;
    // [x_e, z_1] corrupted to leave the Z layer
    L.corrupt_bracket(L.x_pos(0), L.z_pos(0), bad);
    CHECK_FALSE(check_lie_axioms(L));

    LieLattice L2 = build_lattice(2, 2);
    RatVec bad2(static_cast<size_t>(L2.dim()), Rat(0));
    bad2[static_cast<size_t>(L2.z_pos(1))] = 1;
    // [x_e, z_1] = z_2 stays in the Z layer but breaks class 2
    L2.corrupt_bracket(L2.x_pos(0), L2.z_pos(0), bad2);
    CHECK_FALSE(check_lie_axioms(L2));
}

TEST_CASE("span of y and z layers is an abelian ideal of dimension r2+r3") {
    for (int m = 1; m <= 5; ++m) {
        for (int n = 2; n <= 5; ++n) {
            LieLattice L = build_lattice(m, n);
            const int d = L.dim();
            // abelian: all pairs within the span bracket to zero
            for (int i = L.r1(); i < d; ++i)
                for (int j = L.r1(); j < d; ++j)
                    CHECK(is_zero(L.bracket_basis(i, j)));
            // ideal: [x_e, span] lands in the Z layer, inside the span
            for (int e = 0; e < L.r1(); ++e)
                for (int j = L.r1(); j < d; ++j) {
                    RatVec r = L.bracket_basis(L.x_pos(e), j);
                    for (int k = 0; k < L.z_pos(0); ++k)
                        CHECK(r[static_cast<size_t>(k)] == 0);
                }
        }
    }
}

TEST_CASE("the derived subalgebra is exactly the Z layer") {
    for (int m = 1; m <= 4; ++m) {
        for (int n = 2; n <= 4; ++n) {
            LieLattice L = build_lattice(m, n);
            std::vector<bool> hit(static_cast<size_t>(n), false);
            for (const auto& [ef, z] : L.xy_table()) {
                (void)ef;
                hit[static_cast<size_t>(z)] = true;
            }
            for (int j = 0; j < n; ++j) CHECK(hit[static_cast<size_t>(j)]);
        }
    }
}
