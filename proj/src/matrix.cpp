#include "prozeta/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace prozeta {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_) * static_cast<size_t>(cols_));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        for (const auto& v : r) data_.push_back(v);
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rat>& d) {
    RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rat& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

RatMatrix RatMatrix::operator*(const Rat& scalar) const {
    RatMatrix out = *this;
    for (auto& v : out.data_) v *= scalar;
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    RatMatrix a = *this;
    Rat d = 1;
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (a.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        Rat inv = Rat(1) / a.at(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            Rat factor = a.at(r, col) * inv;
            if (factor == 0) continue;
            for (int j = col; j < cols_; ++j) a.at(r, j) -= factor * a.at(col, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const int n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rat scale = Rat(1) / a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rat factor = a.at(r, col);
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= factor * a.at(col, j);
                inv.at(r, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool RatMatrix::is_invertible() const {
    return rows_ == cols_ && det() != 0;
}

void RatMatrix::set_block(int r, int c, const RatMatrix& block) {
    if (r + block.rows_ > rows_ || c + block.cols_ > cols_)
        throw std::invalid_argument("block out of range");
    for (int i = 0; i < block.rows_; ++i)
        for (int j = 0; j < block.cols_; ++j) at(r + i, c + j) = block.at(i, j);
}

RatMatrix RatMatrix::block(int r, int c, int rows, int cols) const {
    if (r + rows > rows_ || c + cols > cols_)
        throw std::invalid_argument("block out of range");
    RatMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = at(r + i, c + j);
    return out;
}

}  // namespace prozeta
