#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace jml {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}
    Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int k = 0; k < n; ++k)
            m(k, k) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int r, int c)
    {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const T& operator()(int r, int c) const
    {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool isZero() const
    {
        for (const auto& x : data_)
            if (!x.isZero())
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix block(int r0, int c0, int nr, int nc) const
    {
        Matrix b(nr, nc);
        for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nc; ++c)
                b(r, c) = (*this)(r0 + r, c0 + c);
        return b;
    }

    void setBlock(int r0, int c0, const Matrix& b)
    {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c)
                (*this)(r0 + r, c0 + c) = b(r, c);
    }

    void addBlock(int r0, int c0, const Matrix& b)
    {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c)
                (*this)(r0 + r, c0 + c) += b(r, c);
    }

    std::vector<T> column(int c) const
    {
        std::vector<T> v(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    static Matrix fromColumns(int rows, const std::vector<std::vector<T>>& cols)
    {
        Matrix m(rows, static_cast<int>(cols.size()));
        for (int c = 0; c < m.cols(); ++c)
            for (int r = 0; r < rows; ++r)
                m(r, c) = cols[c][r];
        return m;
    }

    Matrix& operator+=(const Matrix& o)
    {
        checkSame(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        checkSame(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s)
    {
        for (auto& x : data_)
            x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x = -x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.isZero())
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (!b(k, j).isZero())
                        r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (static_cast<int>(v.size()) != a.cols_)
            throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> r(static_cast<std::size_t>(a.rows_), T(0));
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k)
                if (!a(i, k).isZero() && !v[k].isZero())
                    r[i] += a(i, k) * v[k];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void checkSame(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch: " + shape() + " vs " + o.shape());
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

/// Block-diagonal direct sum.
template <typename T>
Matrix<T> directSum(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
    r.setBlock(0, 0, a);
    r.setBlock(a.rows(), a.cols(), b);
    return r;
}

}  // namespace jml
