#pragma once

// Dense exact matrices. A Matrix<F> is the matrix of a linear map between
// based spaces: column j holds the image of the j-th domain basis vector.
// Everything downstream (tensor indices, Hom coordinates, duals) is built on
// the conventions fixed in conventions.hpp.

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "codual/errors.hpp"
#include "codual/field.hpp"

namespace codual {

template <FieldType F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    static Matrix zero(F field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }

    /// Build from row-major integer literals; mostly for tests and builders.
    static Matrix from_int_rows(F field, std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw StructureError("ragged rows in matrix literal");
            std::size_t j = 0;
            for (long v : row) m(i, j++) = field.from_int(v);
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const Elem& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "+");
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.field_.add(a.a_[k], b.a_[k]);
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "-");
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.field_.sub(a.a_[k], b.a_[k]);
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.require_same_field(b, "*");
        if (a.cols_ != b.rows_)
            throw StructureError("matrix product shape mismatch: " + a.shape_str() + " * " + b.shape_str());
        Matrix r(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Elem& aik = a(i, k);
                if (a.field_.is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Elem& bkj = b(k, j);
                    if (a.field_.is_zero(bkj)) continue;
                    r(i, j) = a.field_.add(r(i, j), a.field_.mul(aik, bkj));
                }
            }
        return r;
    }

    Matrix scaled(const Elem& s) const {
        Matrix r = *this;
        for (auto& e : r.a_) e = field_.mul(e, s);
        return r;
    }

    Matrix negated() const {
        Matrix r = *this;
        for (auto& e : r.a_) e = field_.neg(e);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!a.field_.eq(a.a_[k], b.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(field_, rows_);
    }

    std::vector<Elem> col(std::size_t j) const {
        std::vector<Elem> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    std::vector<Elem> row(std::size_t i) const {
        std::vector<Elem> v;
        v.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v.push_back((*this)(i, j));
        return v;
    }

    std::string shape_str() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " [";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += field_.str((*this)(i, j));
                if (j + 1 < cols_) s += ", ";
            }
            s += "]";
            if (i + 1 < rows_) s += "\n";
        }
        return s + "]";
    }

    void require_same_field(const Matrix& b, const char* op) const {
        if (!(field_ == b.field_)) throw StructureError(std::string("field mismatch in matrix ") + op);
    }
    void require_same_shape(const Matrix& b, const char* op) const {
        require_same_field(b, op);
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw StructureError(std::string("shape mismatch in matrix ") + op + ": " + shape_str() +
                                 " vs " + b.shape_str());
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

/// Kronecker product matching the tensor index convention: for f: k^a -> k^a'
/// and g: k^b -> k^b', (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j), with
/// e_i (x) e_j in k^a (x) k^b at coordinate i*b + j.
template <FieldType F>
Matrix<F> kron(const Matrix<F>& f, const Matrix<F>& g) {
    f.require_same_field(g, "kron");
    const F& k = f.field();
    Matrix<F> r(k, f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const auto& fij = f(i, j);
            if (k.is_zero(fij)) continue;
            for (std::size_t p = 0; p < g.rows(); ++p)
                for (std::size_t q = 0; q < g.cols(); ++q) {
                    const auto& gpq = g(p, q);
                    if (k.is_zero(gpq)) continue;
                    r(i * g.rows() + p, j * g.cols() + q) = k.mul(fij, gpq);
                }
        }
    return r;
}

/// Dual of a linear map under the dual-basis identification (k^n)* = k^n.
template <FieldType F>
Matrix<F> dual_map(const Matrix<F>& f) {
    return f.transpose();
}

/// Column-stacking vectorization: Hom(k^a, k^b) = k^{b*a}, entry M(r,c) at
/// coordinate c*b + r. vec returns a (rows*cols) x 1 column.
template <FieldType F>
Matrix<F> vec(const Matrix<F>& m) {
    Matrix<F> v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) v(c * m.rows() + r, 0) = m(r, c);
    return v;
}

template <FieldType F>
Matrix<F> unvec(const Matrix<F>& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw StructureError("unvec shape mismatch: " + v.shape_str());
    Matrix<F> m(v.field(), rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = v(c * rows + r, 0);
    return m;
}

/// Row vector -> column matrix, for moving between Subspace bases and maps.
template <FieldType F>
Matrix<F> column_from(const F& field, const std::vector<typename F::Elem>& v) {
    Matrix<F> m(field, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

}  // namespace codual
