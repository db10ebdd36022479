#include "prozeta/autrep.hpp"

#include <stdexcept>

namespace prozeta {

namespace {

using Poly = std::map<MultiIndex, Rat>;  // polynomial in n commuting variables

Poly linear_form(const RatMatrix& M, int row, int n) {
    Poly p;
    for (int j = 0; j < n; ++j) {
        if (M.at(row, j) == 0) continue;
        std::vector<int> unit(static_cast<size_t>(n), 0);
        unit[static_cast<size_t>(j)] = 1;
        p[MultiIndex{unit}] = M.at(row, j);
    }
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            MultiIndex m = ma + mb;
            Rat c = ca * cb;
            auto it = r.find(m);
            if (it == r.end()) r.emplace(std::move(m), std::move(c));
            else it->second += c;
        }
    return r;
}

// image of the monomial with exponent vector `expo` under the substitution
// variable_i -> linear form given by row i of M
Poly monomial_image(const RatMatrix& M, const MultiIndex& expo, int n) {
    Poly r;
    r[MultiIndex{std::vector<int>(static_cast<size_t>(n), 0)}] = 1;
    for (int i = 0; i < n; ++i)
        for (int rep = 0; rep < expo[i]; ++rep) r = mul(r, linear_form(M, i, n));
    return r;
}

Rat factorial_product(const MultiIndex& f) {
    Rat r = 1;
    for (int i = 0; i < f.size(); ++i) r *= Rat(factorial(f[i]));
    return r;
}

}  // namespace

RatMatrix sym_power_rho1(const RatMatrix& A, int m, int n) {
    if (A.rows() != n || A.cols() != n) throw std::invalid_argument("A must be n x n");
    RatMatrix act = A.inverse().transpose();  // throws on singular A
    auto basis = multi_indices(n, m - 1);
    std::map<MultiIndex, int> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
    RatMatrix out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t r = 0; r < basis.size(); ++r) {
        Poly img = monomial_image(act, basis[r], n);
        for (const auto& [mono, coef] : img) out.at(static_cast<int>(r), pos.at(mono)) = coef;
    }
    return out;
}

RatMatrix sym_power_rho2(const RatMatrix& A, int m, int n) {
    if (A.rows() != n || A.cols() != n) throw std::invalid_argument("A must be n x n");
    if (!A.is_invertible()) throw std::domain_error("singular matrix");
    auto basis = multi_indices(n, m);
    std::map<MultiIndex, int> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
    RatMatrix out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t r = 0; r < basis.size(); ++r) {
        Poly img = monomial_image(A, basis[r], n);
        Rat row_scale = factorial_product(basis[r]);
        for (const auto& [mono, coef] : img)
            out.at(static_cast<int>(r), pos.at(mono)) = coef * factorial_product(mono) / row_scale;
    }
    return out;
}

RatMatrix embed_reductive(const ReductivePoint& h, int m, int n) {
    if (h.lambda == 0) throw std::invalid_argument("lambda must be nonzero");
    RatMatrix b1 = sym_power_rho1(h.A, m, n) * h.lambda;
    RatMatrix b2 = sym_power_rho2(h.A, m, n) * (Rat(1) / h.lambda);
    int r1 = b1.rows(), r2 = b2.rows();
    RatMatrix out(r1 + r2 + n, r1 + r2 + n);
    out.set_block(0, 0, b1);
    out.set_block(r1, r1, b2);
    out.set_block(r1 + r2, r1 + r2, h.A);
    return out;
}

RatMatrix embed_unipotent(const UnipotentPoint& u, int m, int n) {
    auto e_idx = multi_indices(n, m - 1);
    auto f_idx = multi_indices(n, m);
    const int r1 = static_cast<int>(e_idx.size());
    const int r2 = static_cast<int>(f_idx.size());
    for (const auto& [g, value] : u.b) {
        (void)value;
        if (g.size() != n || g.weight() != 2 * m - 1)
            throw std::invalid_argument("b parameters must be indexed by weight 2m-1 tuples");
    }
    if (u.D1.rows() != r1 || u.D1.cols() != n) throw std::invalid_argument("D1 must be r1 x n");
    if (u.D2.rows() != r2 || u.D2.cols() != n) throw std::invalid_argument("D2 must be r2 x n");

    RatMatrix out = RatMatrix::identity(r1 + r2 + n);
    for (int e = 0; e < r1; ++e)
        for (int f = 0; f < r2; ++f) {
            auto it = u.b.find(e_idx[static_cast<size_t>(e)] + f_idx[static_cast<size_t>(f)]);
            if (it != u.b.end()) out.at(e, r1 + f) = it->second;
        }
    out.set_block(0, r1 + r2, u.D1);
    out.set_block(r1, r1 + r2, u.D2);
    return out;
}

AutCheck check_automorphism(const LieLattice& L, const RatMatrix& M) {
    const int d = L.dim();
    if (M.rows() != d || M.cols() != d) throw std::invalid_argument("matrix dimension mismatch");
    if (!M.is_invertible()) return AutCheck::kSingular;

    std::vector<RatVec> rows(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        RatVec row(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) row[static_cast<size_t>(j)] = M.at(i, j);
        rows[static_cast<size_t>(i)] = std::move(row);
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            RatVec lhs = L.bracket(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(j)]);
            RatVec bij = L.bracket_basis(i, j);
            // rhs = bij * M (row vector times matrix); bij is sparse
            RatVec rhs(static_cast<size_t>(d), Rat(0));
            for (int k = 0; k < d; ++k) {
                const Rat& c = bij[static_cast<size_t>(k)];
                if (c == 0) continue;
                for (int col = 0; col < d; ++col)
                    if (M.at(k, col) != 0) rhs[static_cast<size_t>(col)] += c * M.at(k, col);
            }
            if (lhs != rhs) return AutCheck::kNotAutomorphism;
        }
    }
    return AutCheck::kAutomorphism;
}

bool is_automorphism(const LieLattice& L, const RatMatrix& M) {
    return check_automorphism(L, M) == AutCheck::kAutomorphism;
}

void block_refactor(const RatMatrix& M, int m, int n, RatMatrix& H, RatMatrix& U) {
    const int r1 = static_cast<int>(binomial(m + n - 2, n - 1));
    const int r2 = static_cast<int>(binomial(m + n - 1, n - 1));
    const int d = r1 + r2 + n;
    if (M.rows() != d || M.cols() != d) throw std::invalid_argument("matrix dimension mismatch");
    H = RatMatrix(d, d);
    H.set_block(0, 0, M.block(0, 0, r1, r1));
    H.set_block(r1, r1, M.block(r1, r1, r2, r2));
    H.set_block(r1 + r2, r1 + r2, M.block(r1 + r2, r1 + r2, n, n));
    U = H.inverse() * M;
}

bool satisfies_unipotent_pattern(const RatMatrix& U, int m, int n) {
    auto e_idx = multi_indices(n, m - 1);
    auto f_idx = multi_indices(n, m);
    const int r1 = static_cast<int>(e_idx.size());
    const int r2 = static_cast<int>(f_idx.size());
    const int d = r1 + r2 + n;
    if (U.rows() != d || U.cols() != d) throw std::invalid_argument("matrix dimension mismatch");
    RatMatrix id_check(d, d);
    id_check.set_block(0, 0, RatMatrix::identity(r1));
    id_check.set_block(r1, r1, RatMatrix::identity(r2));
    id_check.set_block(r1 + r2, r1 + r2, RatMatrix::identity(n));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j)
            if (U.at(i, j) != id_check.at(i, j)) return false;
    // X row may not touch later X columns, Y row later Y columns
    for (int i = 0; i < r1; ++i)
        for (int j = i + 1; j < r1; ++j)
            if (U.at(i, j) != 0) return false;
    for (int i = 0; i < r2; ++i)
        for (int j = i + 1; j < r2; ++j)
            if (U.at(r1 + i, r1 + j) != 0) return false;
    for (int i = r1 + r2; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (U.at(i, j) != 0) return false;

    std::map<MultiIndex, Rat> seen;
    for (int e = 0; e < r1; ++e)
        for (int f = 0; f < r2; ++f) {
            MultiIndex g = e_idx[static_cast<size_t>(e)] + f_idx[static_cast<size_t>(f)];
            auto [it, inserted] = seen.emplace(g, U.at(e, r1 + f));
            if (!inserted && it->second != U.at(e, r1 + f)) return false;
        }
    return true;
}

}  // namespace prozeta
