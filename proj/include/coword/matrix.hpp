#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace coword {

// Row-major dense matrix, just enough for occurrence tables and the
// factor-analysis chain.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T init = T{})
        : rows_(rows), cols_(cols), values_(rows * cols, init) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return values_.empty(); }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return values_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return values_[r * cols_ + c];
    }

    const std::vector<T>& values() const { return values_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.values_ == b.values_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> values_;
};

}  // namespace coword
