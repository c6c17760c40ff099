#pragma once

#include <optional>
#include <vector>

#include "qhom/errors.hpp"
#include "qhom/field.hpp"

namespace qhom {

// Dense row-major matrix over an exact field context F.
// All eliminations pivot on the first nonzero entry in scan order, so every
// derived object (rref, kernel basis, column-space basis) is canonical for
// its input.
template <class F>
class Matrix {
public:
    using Elt = typename F::Elt;

    Matrix(const F& f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, f.zero()) {}

    static Matrix identity(const F& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return f_; }

    Elt& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Elt& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_shape(o.rows_ == rows_ && o.cols_ == cols_, "matrix add shape");
        Matrix r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_shape(o.rows_ == rows_ && o.cols_ == cols_, "matrix sub shape");
        Matrix r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        check_shape(cols_ == o.rows_, "matrix mul shape");
        Matrix r(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elt& x = (*this)(i, k);
                if (f_.is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = f_.add(r(i, j), f_.mul(x, o(k, j)));
            }
        return r;
    }
    Matrix scaled(const Elt& c) const {
        Matrix r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], c);
        return r;
    }
    Matrix negated() const {
        Matrix r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.neg(a_[i]);
        return r;
    }
    Matrix transpose() const {
        Matrix r(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // [this | o]
    Matrix hstack(const Matrix& o) const {
        check_shape(rows_ == o.rows_, "hstack row mismatch");
        Matrix r(f_, rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }
    // [this; o]
    Matrix vstack(const Matrix& o) const {
        check_shape(cols_ == o.cols_, "vstack col mismatch");
        Matrix r(f_, rows_ + o.rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
        return r;
    }
    Matrix columns(const std::vector<int>& idx) const {
        Matrix r(f_, rows_, static_cast<int>(idx.size()));
        for (int j = 0; j < static_cast<int>(idx.size()); ++j)
            for (int i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
        return r;
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref_in_place() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (!f_.is_zero((*this)(i, c))) { pr = i; break; }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(pr, j), (*this)(r, j));
            Elt s = f_.inv((*this)(r, c));
            for (int j = c; j < cols_; ++j) (*this)(r, j) = f_.mul((*this)(r, j), s);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                Elt x = (*this)(i, c);
                if (f_.is_zero(x)) continue;
                for (int j = c; j < cols_; ++j)
                    (*this)(i, j) = f_.sub((*this)(i, j), f_.mul(x, (*this)(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref_in_place().size());
    }

    // Canonical basis of {x : Ax = 0}, one column per free variable.
    Matrix kernel_basis() const {
        Matrix m = *this;
        std::vector<int> piv = m.rref_in_place();
        std::vector<bool> is_piv(cols_, false);
        for (int c : piv) is_piv[c] = true;
        std::vector<int> free;
        for (int c = 0; c < cols_; ++c)
            if (!is_piv[c]) free.push_back(c);
        Matrix k(f_, cols_, static_cast<int>(free.size()));
        for (int t = 0; t < static_cast<int>(free.size()); ++t) {
            k(free[t], t) = f_.one();
            for (int pi = 0; pi < static_cast<int>(piv.size()); ++pi)
                k(piv[pi], t) = f_.neg(m(pi, free[t]));
        }
        return k;
    }

    // Canonical basis of the column space (columns of the result).
    Matrix column_space_basis() const {
        Matrix t = transpose();
        std::vector<int> piv = t.rref_in_place();
        Matrix b(f_, rows_, static_cast<int>(piv.size()));
        for (int r = 0; r < static_cast<int>(piv.size()); ++r)
            for (int i = 0; i < rows_; ++i) b(i, r) = t(r, i);
        return b;
    }

    // One solution X of (*this) X = B, free variables set to zero.
    std::optional<Matrix> solve(const Matrix& B) const {
        check_shape(B.rows_ == rows_, "solve rhs rows");
        Matrix aug = hstack(B);
        std::vector<int> piv = aug.rref_in_place();
        // a pivot inside the B block means an inconsistent column
        for (int c : piv)
            if (c >= cols_) return std::nullopt;
        Matrix x(f_, cols_, B.cols_);
        for (int pi = 0; pi < static_cast<int>(piv.size()); ++pi)
            for (int j = 0; j < B.cols_; ++j) x(piv[pi], j) = aug(pi, cols_ + j);
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        auto x = solve(identity(f_, rows_));
        if (!x) return std::nullopt;
        if (!((*this) * (*x) == identity(f_, rows_))) return std::nullopt;
        return x;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(f_, rows_);
    }

private:
    static void check_shape(bool ok, const char* what) {
        if (!ok) throw VerifyError(std::string("shape mismatch: ") + what);
    }

    F f_;
    int rows_, cols_;
    std::vector<Elt> a_;
};

} // namespace qhom
