#include "prozeta/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace prozeta {

int MultiIndex::weight() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (entries.size() != other.entries.size())
        throw std::invalid_argument("multi-index size mismatch");
    MultiIndex r = *this;
    for (size_t i = 0; i < entries.size(); ++i) r.entries[i] += other.entries[i];
    return r;
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
    if (entries.size() != other.entries.size())
        throw std::invalid_argument("multi-index size mismatch");
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i] > other.entries[i]) return false;
    return true;
}

namespace {
void generate(int pos, int n, int remaining, std::vector<int>& cur,
              std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = remaining;
        out.push_back(MultiIndex{cur});
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[static_cast<size_t>(pos)] = v;
        generate(pos + 1, n, remaining - v, cur, out);
    }
}
}  // namespace

std::vector<MultiIndex> multi_indices(int n, int weight) {
    if (n < 1) throw std::invalid_argument("multi_indices requires n >= 1");
    if (weight < 0) throw std::invalid_argument("multi_indices requires weight >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    generate(0, n, weight, cur, out);
    return out;
}

}  // namespace prozeta
