#pragma once

// Exact elimination: reduced row echelon form, kernels, canonical subspaces,
// quotient maps. A Subspace is always stored by its RREF basis, so subspace
// equality is matrix equality and coordinates along the basis can be read off
// the pivot positions.

#include <cstddef>
#include <optional>
#include <vector>

#include "codual/matrix.hpp"

namespace codual {

/// Reduced row echelon form. Row space is preserved; pivots are 1 with zeros
/// above and below; zero rows sink to the bottom.
template <FieldType F>
Matrix<F> rref(Matrix<F> m) {
    const F& k = m.field();
    std::size_t lead = 0;
    for (std::size_t r = 0; r < m.rows() && lead < m.cols(); ++r) {
        std::size_t piv = r;
        while (piv < m.rows() && k.is_zero(m(piv, lead))) ++piv;
        if (piv == m.rows()) {
            ++lead;
            --r;
            continue;
        }
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        auto inv = k.inv(m(r, lead));
        for (std::size_t j = lead; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || k.is_zero(m(i, lead))) continue;
            auto factor = m(i, lead);
            for (std::size_t j = lead; j < m.cols(); ++j)
                m(i, j) = k.sub(m(i, j), k.mul(factor, m(r, j)));
        }
        ++lead;
    }
    return m;
}

template <FieldType F>
std::vector<std::size_t> pivot_columns(const Matrix<F>& reduced) {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        std::size_t j = 0;
        while (j < reduced.cols() && reduced.field().is_zero(reduced(i, j))) ++j;
        if (j == reduced.cols()) break;  // zero rows are at the bottom
        pivots.push_back(j);
    }
    return pivots;
}

template <FieldType F>
std::size_t rank(const Matrix<F>& m) {
    return pivot_columns(rref(m)).size();
}

/// A subspace of k^ambient, canonically presented: basis rows are nonzero, in
/// RREF, pivots strictly increasing.
template <FieldType F>
struct Subspace {
    std::size_t ambient = 0;
    Matrix<F> basis;  // dim x ambient

    std::size_t dim() const { return basis.rows(); }
    const F& field() const { return basis.field(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
};

/// Canonicalize a spanning set (rows) into a Subspace.
template <FieldType F>
Subspace<F> subspace_from_span(const Matrix<F>& rows) {
    Matrix<F> r = rref(rows);
    std::size_t d = pivot_columns(r).size();
    Matrix<F> basis(rows.field(), d, rows.cols());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = r(i, j);
    return Subspace<F>{rows.cols(), basis};
}

template <FieldType F>
Subspace<F> zero_subspace(const F& field, std::size_t ambient) {
    return Subspace<F>{ambient, Matrix<F>(field, 0, ambient)};
}

template <FieldType F>
Subspace<F> full_subspace(const F& field, std::size_t ambient) {
    return Subspace<F>{ambient, Matrix<F>::identity(field, ambient)};
}

/// Basis of {v : m v = 0}, canonical.
template <FieldType F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
    const F& k = m.field();
    Matrix<F> r = rref(m);
    auto pivots = pivot_columns(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t nullity = m.cols() - pivots.size();
    Matrix<F> span(k, nullity, m.cols());
    std::size_t row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        span(row, j) = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) span(row, pivots[i]) = k.neg(r(i, j));
        ++row;
    }
    return subspace_from_span(span);
}

/// Coordinates of v (a column) along the RREF basis, if v lies in the subspace.
template <FieldType F>
std::optional<std::vector<typename F::Elem>> coords_in(const Subspace<F>& s, const Matrix<F>& v) {
    const F& k = s.field();
    if (v.rows() != s.ambient || v.cols() != 1) throw StructureError("coords_in: bad vector shape");
    auto pivots = pivot_columns(s.basis);
    std::vector<typename F::Elem> c;
    c.reserve(pivots.size());
    for (auto p : pivots) c.push_back(v(p, 0));
    // residual check: v - sum c_i basis_i must vanish
    for (std::size_t j = 0; j < s.ambient; ++j) {
        auto acc = v(j, 0);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            acc = k.sub(acc, k.mul(c[i], s.basis(i, j)));
        if (!k.is_zero(acc)) return std::nullopt;
    }
    return c;
}

template <FieldType F>
bool contains(const Subspace<F>& s, const Matrix<F>& v) {
    return coords_in(s, v).has_value();
}

/// Inclusion k^dim -> k^ambient whose columns are the basis vectors.
template <FieldType F>
Matrix<F> inclusion_of(const Subspace<F>& s) {
    return s.basis.transpose();
}

/// Left inverse of the inclusion: picks off pivot coordinates. selector_of(s) *
/// inclusion_of(s) = id.
template <FieldType F>
Matrix<F> selector_of(const Subspace<F>& s) {
    auto pivots = pivot_columns(s.basis);
    Matrix<F> sel(s.field(), s.dim(), s.ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i) sel(i, pivots[i]) = s.field().one();
    return sel;
}

/// Surjection q: k^ambient -> k^{ambient - dim s} with kernel exactly s. The
/// complement is spanned by the non-pivot standard basis vectors; q deletes the
/// pivot coordinates after projecting along s.
template <FieldType F>
Matrix<F> quotient_map(std::size_t ambient_dim, const Subspace<F>& s) {
    if (s.ambient != ambient_dim) throw StructureError("quotient_map: ambient dimension mismatch");
    const F& k = s.field();
    auto pivots = pivot_columns(s.basis);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix<F> q(k, free_cols.size(), ambient_dim);
    for (std::size_t jj = 0; jj < free_cols.size(); ++jj) q(jj, free_cols[jj]) = k.one();
    // e_{pivot_i} = basis_i - (non-pivot tail), so its class is minus the tail
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t jj = 0; jj < free_cols.size(); ++jj)
            q(jj, pivots[i]) = k.neg(s.basis(i, free_cols[jj]));
    return q;
}

/// Exact inverse via elimination on [m | I]. Throws if singular.
template <FieldType F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw StructureError("inverse of non-square matrix");
    const F& k = m.field();
    std::size_t n = m.rows();
    Matrix<F> aug(k, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = k.one();
    }
    Matrix<F> r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!k.eq(r(i, j), i == j ? k.one() : k.zero()))
                throw StructureError("matrix is singular");
    Matrix<F> inv(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

/// Matrix of a linear operator given by its action on coordinate basis vectors.
/// eval(j) must return the image column of e_j.
template <FieldType F, class Eval>
Matrix<F> operator_matrix(const F& field, std::size_t in_dim, std::size_t out_dim, Eval&& eval) {
    Matrix<F> m(field, out_dim, in_dim);
    for (std::size_t j = 0; j < in_dim; ++j) {
        Matrix<F> img = eval(j);
        if (img.rows() != out_dim || img.cols() != 1)
            throw StructureError("operator_matrix: evaluation has wrong shape");
        for (std::size_t i = 0; i < out_dim; ++i) m(i, j) = img(i, 0);
    }
    return m;
}

}  // namespace codual
