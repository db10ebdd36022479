// Dense matrices over exact rationals.
#pragma once

#include "prozeta/numbers.hpp"

#include <initializer_list>
#include <vector>

namespace prozeta {

class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0)) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMatrix identity(int n);
    static RatMatrix diagonal(const std::vector<Rat>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator*(const Rat& scalar) const;
    bool operator==(const RatMatrix& other) const = default;

    RatMatrix transpose() const;
    Rat det() const;
    // throws std::domain_error on singular input
    RatMatrix inverse() const;
    bool is_invertible() const;

    // copy `block` into this matrix with top-left corner at (r, c)
    void set_block(int r, int c, const RatMatrix& block);
    RatMatrix block(int r, int c, int rows, int cols) const;

  private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

}  // namespace prozeta
