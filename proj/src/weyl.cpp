#include "prozeta/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace prozeta {

std::vector<WeylElement> weyl_elements(int n) {
    if (n < 2 || n > kMaxWeylRank)
        throw std::invalid_argument("weyl_elements supports 2 <= n <= 9");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<WeylElement> out;
    do {
        WeylElement w;
        w.perm = perm;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++w.length;
        std::vector<int> pos(static_cast<size_t>(n) + 1);
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i + 1;
        w.descent.resize(static_cast<size_t>(n) - 1);
        for (int i = 1; i < n; ++i)
            w.descent[static_cast<size_t>(i - 1)] =
                pos[static_cast<size_t>(i)] > pos[static_cast<size_t>(i + 1)];
        out.push_back(std::move(w));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace prozeta
