#include "prozeta/lattice.hpp"

#include <stdexcept>

namespace prozeta {

LieLattice::LieLattice(int m, int n) : m_(m), n_(n) {
    if (m < 1) throw std::invalid_argument("build_lattice requires m >= 1");
    if (n < 2) throw std::invalid_argument("build_lattice requires n >= 2");
    e_indices_ = multi_indices(n, m - 1);
    f_indices_ = multi_indices(n, m);
    for (size_t i = 0; i < e_indices_.size(); ++i)
        e_lookup_[e_indices_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < f_indices_.size(); ++i)
        f_lookup_[f_indices_[i]] = static_cast<int>(i);

    for (const auto& e : e_indices_) basis_.push_back({Layer::X, e, 0});
    for (const auto& f : f_indices_) basis_.push_back({Layer::Y, f, 0});
    for (int j = 1; j <= n; ++j) basis_.push_back({Layer::Z, MultiIndex{}, j});

    // [x_e, y_f] = z_i iff f = e + unit_i
    for (int fi = 0; fi < r2(); ++fi) {
        const auto& f = f_indices_[static_cast<size_t>(fi)];
        for (int i = 0; i < n; ++i) {
            if (f[i] < 1) continue;
            MultiIndex e = f;
            e.entries[static_cast<size_t>(i)] -= 1;
            auto it = e_lookup_.find(e);
            if (it != e_lookup_.end()) xy_table_[{it->second, fi}] = i;
        }
    }
}

LieLattice build_lattice(int m, int n) { return LieLattice(m, n); }

int LieLattice::e_index_of(const MultiIndex& e) const {
    auto it = e_lookup_.find(e);
    if (it == e_lookup_.end()) throw std::invalid_argument("not an E-index of this lattice");
    return it->second;
}

int LieLattice::f_index_of(const MultiIndex& f) const {
    auto it = f_lookup_.find(f);
    if (it == f_lookup_.end()) throw std::invalid_argument("not an F-index of this lattice");
    return it->second;
}

int LieLattice::structure_z(int e, int f) const {
    auto it = xy_table_.find({e, f});
    return it == xy_table_.end() ? -1 : it->second;
}

RatVec LieLattice::bracket_basis(int i, int j) const {
    RatVec out(static_cast<size_t>(dim()), Rat(0));
    if (i == j) return out;
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -1; }
    if (auto it = overrides_.find({i, j}); it != overrides_.end()) {
        out = it->second;
        if (sign < 0)
            for (auto& c : out) c = -c;
        return out;
    }
    if (i < r1() && j >= r1() && j < r1() + r2()) {
        int z = structure_z(i, j - r1());
        if (z >= 0) out[static_cast<size_t>(z_pos(z))] = sign;
    }
    return out;
}

RatVec LieLattice::bracket(const RatVec& u, const RatVec& v) const {
    const size_t d = static_cast<size_t>(dim());
    if (u.size() != d || v.size() != d)
        throw std::invalid_argument("bracket: vector dimension mismatch");
    RatVec out(d, Rat(0));
    for (const auto& [ef, z] : xy_table_) {
        const size_t xp = static_cast<size_t>(x_pos(ef.first));
        const size_t yp = static_cast<size_t>(y_pos(ef.second));
        Rat c = u[xp] * v[yp] - u[yp] * v[xp];
        if (c != 0) out[static_cast<size_t>(z_pos(z))] += c;
    }
    for (const auto& [ij, vec] : overrides_) {
        // an override replaces the structural value of that basis pair
        const size_t a = static_cast<size_t>(ij.first), b = static_cast<size_t>(ij.second);
        Rat c = u[a] * v[b] - u[b] * v[a];
        if (c == 0) continue;
        RatVec structural(d, Rat(0));
        if (ij.first < r1() && ij.second >= r1() && ij.second < r1() + r2()) {
            int z = structure_z(ij.first, ij.second - r1());
            if (z >= 0) structural[static_cast<size_t>(z_pos(z))] = 1;
        }
        for (size_t k = 0; k < d; ++k) out[k] += c * (vec[k] - structural[k]);
    }
    return out;
}

void LieLattice::corrupt_bracket(int i, int j, const RatVec& value) {
    if (i == j) throw std::invalid_argument("corrupt_bracket: need distinct basis vectors");
    if (i > j) throw std::invalid_argument("corrupt_bracket: require i < j");
    if (value.size() != static_cast<size_t>(dim()))
        throw std::invalid_argument("corrupt_bracket: bad vector size");
    overrides_[{i, j}] = value;
}

bool check_lie_axioms(const LieLattice& L) {
    const int d = L.dim();
    const size_t zlo = static_cast<size_t>(L.z_pos(0));

    // a basis vector is "inert" when it brackets to zero with everything
    std::vector<bool> inert(static_cast<size_t>(d), true);
    std::vector<std::vector<int>> supports;  // Z supports of nonzero pair brackets
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            RatVec bij = L.bracket_basis(i, j);
            RatVec bji = L.bracket_basis(j, i);
            std::vector<int> support;
            for (int k = 0; k < d; ++k) {
                const size_t ks = static_cast<size_t>(k);
                if (bij[ks] != -bji[ks]) return false;
                if (bij[ks] != 0) {
                    if (ks < zlo) return false;  // image must stay in the Z layer
                    support.push_back(k);
                }
            }
            if (!support.empty()) {
                inert[static_cast<size_t>(i)] = inert[static_cast<size_t>(j)] = false;
                supports.push_back(std::move(support));
            }
        }
    }
    // class 2: [[b_i, b_j], b_k] = 0 for all basis triples. Pair brackets are
    // supported on the Z layer, so this reduces to: no Z vector in any pair
    // support brackets nonzero with anything, i.e. those Z vectors are inert.
    for (const auto& support : supports)
        for (int z : support)
            if (!inert[static_cast<size_t>(z)]) return false;
    return true;
}

}  // namespace prozeta
