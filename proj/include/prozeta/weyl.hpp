// Symmetric-group Weyl elements with length and descent data for the
// Bruhat cone sums.
#pragma once

#include <vector>

namespace prozeta {

struct WeylElement {
    std::vector<int> perm;       // one-line notation, w(1..n)
    int length = 0;              // inversion count
    std::vector<bool> descent;   // descent[i-1] = nu_i(w), 1 <= i <= n-1

    bool nu(int i) const { return descent[static_cast<size_t>(i - 1)]; }
};

inline constexpr int kMaxWeylRank = 9;  // n! numerator terms; Sym(9) is the supported cap

// all n! elements, lexicographic in one-line notation; nu_i(w) = 1 exactly
// when w^{-1}(i) > w^{-1}(i+1)
std::vector<WeylElement> weyl_elements(int n);

}  // namespace prozeta
