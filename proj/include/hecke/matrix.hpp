#pragma once

// Dense matrices over an exact scalar type (Rational or Zeta8).
//
// Null spaces come from Gauss-Jordan elimination with deterministic pivoting:
// first nonzero column, first nonzero row in that column. Everything is exact,
// so rank and kernel are certified, not numerical.

#include <vector>
#include <stdexcept>
#include <utility>

namespace hecke {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const T& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }

    Matrix& operator+=(const Matrix& b) {
        check_same_shape(b);
        for (size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
        return *this;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                const T* brow = &b.data_[static_cast<size_t>(k) * b.cols_];
                T* rrow = &r.data_[static_cast<size_t>(i) * r.cols_];
                for (int j = 0; j < b.cols_; ++j) {
                    if (brow[j].is_zero()) continue;
                    rrow[j] += aik * brow[j];
                }
            }
        }
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.data_.size(); ++k)
            if (!a.data_[k].is_zero()) r.data_[k] = s * a.data_[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: trace of non-square matrix");
        T t{};
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    static Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        kronecker_accumulate(r, a, b, T(1));
        return r;
    }

    // r += scale * (a (x) b), touching only nonzero positions
    static void kronecker_accumulate(Matrix& r, const Matrix& a, const Matrix& b, const T& scale) {
        if (r.rows_ != a.rows_ * b.rows_ || r.cols_ != a.cols_ * b.cols_)
            throw std::invalid_argument("Matrix: kronecker shape mismatch");
        const bool unit_scale = scale == T(1);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                const T left = unit_scale ? a(i, j) : scale * a(i, j);
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l) {
                        if (b(k, l).is_zero()) continue;
                        r(i * b.rows_ + k, j * b.cols_ + l) += left * b(k, l);
                    }
            }
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref_in_place() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i) {
                if (!(*this)(i, col).is_zero()) { p = i; break; }
            }
            if (p < 0) continue;
            if (p != row) swap_rows(p, row);
            T inv = T(1) / (*this)(row, col);
            for (int j = col; j < cols_; ++j) {
                T& v = (*this)(row, j);
                if (!v.is_zero()) v = v * inv;
            }
            for (int i = 0; i < rows_; ++i) {
                if (i == row) continue;
                const T f = (*this)(i, col);
                if (f.is_zero()) continue;
                for (int j = col; j < cols_; ++j) {
                    const T& rv = (*this)(row, j);
                    if (rv.is_zero()) continue;
                    (*this)(i, j) -= f * rv;
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    // forward elimination only; enough for the rank and about half the work
    // of the full reduction
    int rank() const {
        Matrix m(*this);
        int r = 0;
        for (int col = 0; col < m.cols_ && r < m.rows_; ++col) {
            int p = -1;
            for (int i = r; i < m.rows_; ++i)
                if (!m(i, col).is_zero()) { p = i; break; }
            if (p < 0) continue;
            if (p != r) m.swap_rows(p, r);
            T inv = T(1) / m(r, col);
            for (int j = col; j < m.cols_; ++j)
                if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
            for (int i = r + 1; i < m.rows_; ++i) {
                const T f = m(i, col);
                if (f.is_zero()) continue;
                for (int j = col; j < m.cols_; ++j) {
                    const T& rv = m(r, j);
                    if (rv.is_zero()) continue;
                    m(i, j) -= f * rv;
                }
            }
            ++r;
        }
        return r;
    }

    // Basis of the right null space, one column per basis vector. The rows
    // indexed by the free (non-pivot) columns form an identity block, so
    // restricting an endomorphism of the kernel to those rows solves the
    // change of basis for free; free_columns receives them in order.
    Matrix kernel_basis(std::vector<int>* free_columns = nullptr) const {
        Matrix m(*this);
        std::vector<int> pivots = m.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        int k = cols_ - static_cast<int>(pivots.size());
        Matrix basis(cols_, k);
        if (free_columns) free_columns->clear();
        int out = 0;
        for (int freec = 0; freec < cols_; ++freec) {
            if (is_pivot[freec]) continue;
            if (free_columns) free_columns->push_back(freec);
            basis(freec, out) = T(1);
            for (size_t pr = 0; pr < pivots.size(); ++pr) {
                const T& v = m(static_cast<int>(pr), freec);
                if (!v.is_zero()) basis(pivots[pr], out) = -v;
            }
            ++out;
        }
        return basis;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square matrix");
        Matrix aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = T(1);
        }
        std::vector<int> pivots = aug.rref_in_place();
        // a singular input pushes pivots into the identity half
        if (static_cast<int>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= cols_))
            throw std::domain_error("Matrix: singular matrix has no inverse");
        Matrix r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = aug(i, cols_ + j);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;

    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
};

}  // namespace hecke
