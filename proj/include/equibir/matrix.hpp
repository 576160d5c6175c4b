#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "equibir/cyclotomic.hpp"
#include "equibir/errors.hpp"
#include "equibir/rational.hpp"

namespace equibir {

// element helpers so generic code works over BigInt, BigRat and CycNum
inline bool elem_is_zero(const BigInt& n) { return n == 0; }
inline bool elem_is_zero(const BigRat& q) { return q == 0; }
inline bool elem_is_zero(const CycNum& c) { return c.is_zero(); }
inline bool elem_is_zero(int n) { return n == 0; }
inline BigRat elem_inverse(const BigRat& q) {
    if (q == 0) throw DivisionByZero();
    return 1 / q;
}
inline CycNum elem_inverse(const CycNum& c) { return c.inverse(); }


template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    Mat(std::size_t r, std::size_t c, std::initializer_list<T> vals)
        : rows_(r), cols_(c), a_(vals) {
        if (a_.size() != r * c) throw Error("matrix literal size mismatch");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Mat out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& v = a(i, k);
                if (elem_is_zero(v)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(k, j);
            }
        return out;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum shape mismatch");
        Mat out = a;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
        return out;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix diff shape mismatch");
        Mat out = a;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
        return out;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (v.size() != cols_) throw Error("matrix-vector shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<BigInt>;
using RatMat = Mat<BigRat>;
using CycMat = Mat<CycNum>;

/// In-place reduced row echelon form over a field; returns the rank.
template <class T>
std::size_t rref(Mat<T>& m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && elem_is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(rank, pivot);
        T inv = elem_inverse(m(rank, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) = m(rank, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || elem_is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <class T>
std::size_t rank_of(Mat<T> m) {
    return rref(m);
}

} // namespace equibir
