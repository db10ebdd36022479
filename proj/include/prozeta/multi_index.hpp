// Weighted multi-indices: n-tuples of non-negative integers with fixed sum.
// They label the x/y basis vectors of the lattice and the b parameters of
// the unipotent radical.
#pragma once

#include <compare>
#include <vector>

namespace prozeta {

struct MultiIndex {
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    int weight() const;
    int operator[](int i) const { return entries[static_cast<size_t>(i)]; }

    MultiIndex operator+(const MultiIndex& other) const;
    // componentwise <=
    bool dominated_by(const MultiIndex& other) const;

    auto operator<=>(const MultiIndex&) const = default;
};

// All n-tuples of non-negative integers summing to weight, in the canonical
// order used throughout (lexicographic descending). Length binom(weight+n-1, n-1).
std::vector<MultiIndex> multi_indices(int n, int weight);

}  // namespace prozeta
