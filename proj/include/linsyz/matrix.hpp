#pragma once

#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace linsyz {

/// Dense row-major matrix of F_p residues (entries are kept reduced in [0, p)
/// by the routines that produce them; the container itself is field-agnostic).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    Matrix(std::initializer_list<std::initializer_list<uint32_t>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    uint32_t& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    uint32_t at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    uint32_t* row(size_t i) { return data_.data() + i * cols_; }
    const uint32_t* row(size_t i) const { return data_.data() + i * cols_; }

    void append_row(const std::vector<uint32_t>& r) {
        if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    std::vector<uint32_t> row_copy(size_t i) const {
        return std::vector<uint32_t>(row(i), row(i) + cols_);
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

} // namespace linsyz
