#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace sympdeg {

using Rational = boost::multiprecision::mpq_rational;

/// Dense row-major matrix. Small sizes only; nothing here is tuned.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    T& operator()(int r, int c) { return a_[idx(r, c)]; }
    const T& operator()(int r, int c) const { return a_[idx(r, c)]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix z(x.rows_, y.cols_);
        for (int r = 0; r < x.rows_; ++r)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(r, k) == T(0)) continue;
                for (int c = 0; c < y.cols_; ++c) z(r, c) += x(r, k) * y(k, c);
            }
        return z;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
        return x;
    }

    friend Matrix operator-(Matrix x, const Matrix& y) {
        for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
        return x;
    }

    Matrix scaled(const T& s) const {
        Matrix out = *this;
        for (auto& v : out.a_) v *= s;
        return out;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != T(0)) return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<long>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMatrix& m);

int rank(const IntMatrix& m);
int rank(RatMatrix m);

/// Basis of {x : m x = 0}, one column per basis vector.
RatMatrix nullspace(const RatMatrix& m);

std::string to_string(const Rational& q);

}  // namespace sympdeg
