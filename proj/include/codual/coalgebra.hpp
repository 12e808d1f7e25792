#pragma once

// Coalgebras (C, delta: C -> C(x)C, eps: C -> k) and finite-dimensional
// algebras (A, mult: A(x)A -> A, unit: k -> A), their axiom certifiers, the
// classical example builders, and the convolution algebra C |-> C*.

#include <cstddef>
#include <string>

#include "codual/cert.hpp"
#include "codual/conventions.hpp"
#include "codual/matrix.hpp"

namespace codual {

template <FieldType F>
struct Coalgebra {
    F field;
    std::size_t dim = 0;
    Matrix<F> delta;  // (dim*dim) x dim
    Matrix<F> eps;    // 1 x dim
};

template <FieldType F>
struct Algebra {
    F field;
    std::size_t dim = 0;
    Matrix<F> mult;  // dim x (dim*dim)
    Matrix<F> unit;  // dim x 1
};

template <FieldType F>
void validate_shapes(const Coalgebra<F>& c) {
    if (c.delta.rows() != c.dim * c.dim || c.delta.cols() != c.dim)
        throw StructureError("coalgebra delta must be dim^2 x dim, got " + c.delta.shape_str());
    if (c.eps.rows() != 1 || c.eps.cols() != c.dim)
        throw StructureError("coalgebra eps must be 1 x dim, got " + c.eps.shape_str());
}

template <FieldType F>
void validate_shapes(const Algebra<F>& a) {
    if (a.mult.rows() != a.dim || a.mult.cols() != a.dim * a.dim)
        throw StructureError("algebra mult must be dim x dim^2, got " + a.mult.shape_str());
    if (a.unit.rows() != a.dim || a.unit.cols() != 1)
        throw StructureError("algebra unit must be dim x 1, got " + a.unit.shape_str());
}

/// Coassociativity (Delta(x)id)Delta = (id(x)Delta)Delta and the counit law
/// (eps(x)id)Delta = id = (id(x)eps)Delta, read through k(x)C = C = C(x)k.
template <FieldType F>
CertReport<F> check_coalgebra(const Coalgebra<F>& c) {
    validate_shapes(c);
    auto id = Matrix<F>::identity(c.field, c.dim);
    CertReport<F> report;
    report.checks.push_back(compare_composites<F>("coassociativity", kron(c.delta, id) * c.delta,
                                                  kron(id, c.delta) * c.delta));
    auto left = kron(c.eps, id) * c.delta;
    auto right = kron(id, c.eps) * c.delta;
    auto counit_left = compare_composites<F>("counit", left, id);
    report.checks.push_back(counit_left.pass ? compare_composites<F>("counit", right, id)
                                             : counit_left);
    return report;
}

template <FieldType F>
CertReport<F> check_algebra(const Algebra<F>& a) {
    validate_shapes(a);
    auto id = Matrix<F>::identity(a.field, a.dim);
    CertReport<F> report;
    report.checks.push_back(compare_composites<F>("associativity", a.mult * kron(a.mult, id),
                                                  a.mult * kron(id, a.mult)));
    auto left = a.mult * kron(a.unit, id);
    auto right = a.mult * kron(id, a.unit);
    auto unit_left = compare_composites<F>("unit", left, id);
    report.checks.push_back(unit_left.pass ? compare_composites<F>("unit", right, id) : unit_left);
    return report;
}

template <FieldType F>
void require_certified(const Coalgebra<F>& c, const char* who) {
    auto r = check_coalgebra(c);
    if (!r.pass())
        throw PreconditionError(std::string(who) + ": coalgebra fails " + r.first_failure());
}

template <FieldType F>
void require_certified(const Algebra<F>& a, const char* who) {
    auto r = check_algebra(a);
    if (!r.pass()) throw PreconditionError(std::string(who) + ": algebra fails " + r.first_failure());
}

// ---------------------------------------------------------------------------
// builders

/// Delta(e_i) = e_i (x) e_i, eps(e_i) = 1. The group-like coalgebra on n points.
template <FieldType F>
Coalgebra<F> grouplike(const F& field, std::size_t n) {
    if (n < 1) throw StructureError("grouplike requires n >= 1");
    Coalgebra<F> c{field, n, Matrix<F>(field, n * n, n), Matrix<F>(field, 1, n)};
    for (std::size_t i = 0; i < n; ++i) {
        c.delta(tensor_index(n, i, i), i) = field.one();
        c.eps(0, i) = field.one();
    }
    return c;
}

/// Basis e_{ij} (i,j < n), Delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = [i=j].
/// Dimension n^2; its dual is the n x n matrix algebra.
template <FieldType F>
Coalgebra<F> matrix_coalgebra(const F& field, std::size_t n) {
    if (n < 1) throw StructureError("matrix_coalgebra requires n >= 1");
    std::size_t d = n * n;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    Coalgebra<F> c{field, d, Matrix<F>(field, d * d, d), Matrix<F>(field, 1, d)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                c.delta(tensor_index(d, idx(i, k), idx(k, j)), idx(i, j)) = field.one();
            if (i == j) c.eps(0, idx(i, j)) = field.one();
        }
    return c;
}

/// Basis c_0..c_N, Delta(c_n) = sum_{i+j=n} c_i (x) c_j, eps(c_n) = [n=0].
template <FieldType F>
Coalgebra<F> divided_power(const F& field, std::size_t max_degree) {
    std::size_t d = max_degree + 1;
    Coalgebra<F> c{field, d, Matrix<F>(field, d * d, d), Matrix<F>(field, 1, d)};
    for (std::size_t n = 0; n < d; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            c.delta(tensor_index(d, i, n - i), n) = field.one();
    c.eps(0, 0) = field.one();
    return c;
}

/// Basis (s, c): Delta(s) = s(x)c + c(x)s, Delta(c) = c(x)c - s(x)s, eps(s) = 0,
/// eps(c) = 1. Needs characteristic != 2.
template <FieldType F>
Coalgebra<F> trig(const F& field) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (field.modulus() == 2) throw FieldError("trig coalgebra is not supported over GF(2)");
    }
    Coalgebra<F> co{field, 2, Matrix<F>(field, 4, 2), Matrix<F>(field, 1, 2)};
    const std::size_t s = 0, c = 1;
    co.delta(tensor_index(2, s, c), s) = field.one();
    co.delta(tensor_index(2, c, s), s) = field.one();
    co.delta(tensor_index(2, c, c), c) = field.one();
    co.delta(tensor_index(2, s, s), c) = field.neg(field.one());
    co.eps(0, c) = field.one();
    return co;
}

template <FieldType F>
Coalgebra<F> direct_sum(const Coalgebra<F>& c, const Coalgebra<F>& d) {
    if (!(c.field == d.field)) throw StructureError("direct_sum: field mismatch");
    std::size_t n = c.dim, m = d.dim, t = n + m;
    Coalgebra<F> s{c.field, t, Matrix<F>(c.field, t * t, t), Matrix<F>(c.field, 1, t)};
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s.delta(tensor_index(t, i, j), l) = c.delta(tensor_index(n, i, j), l);
        s.eps(0, l) = c.eps(0, l);
    }
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                s.delta(tensor_index(t, n + i, n + j), n + l) = d.delta(tensor_index(m, i, j), l);
        s.eps(0, n + l) = d.eps(0, l);
    }
    return s;
}

/// Transport along an invertible change of basis g: delta' = (g(x)g) delta g^-1,
/// eps' = eps g^-1. Preserves the axioms.
template <FieldType F>
Coalgebra<F> conjugate(const Coalgebra<F>& c, const Matrix<F>& g, const Matrix<F>& g_inv) {
    return Coalgebra<F>{c.field, c.dim, kron(g, g) * c.delta * g_inv, c.eps * g_inv};
}

// ---------------------------------------------------------------------------
// duals

/// The convolution algebra C*: mult = delta* through (C(x)C)* = C*(x)C* (the
/// identity on coordinates), unit = eps*.
template <FieldType F>
Algebra<F> dual_algebra(const Coalgebra<F>& c) {
    require_certified(c, "dual_algebra");
    return Algebra<F>{c.field, c.dim, dual_map(c.delta), dual_map(c.eps)};
}

/// Finite-dimensional dual coalgebra A*: delta = mult*, eps = unit*.
template <FieldType F>
Coalgebra<F> dual_coalgebra(const Algebra<F>& a) {
    require_certified(a, "dual_coalgebra");
    return Coalgebra<F>{a.field, a.dim, dual_map(a.mult), dual_map(a.unit)};
}

template <FieldType F>
bool operator==(const Coalgebra<F>& a, const Coalgebra<F>& b) {
    return a.field == b.field && a.dim == b.dim && a.delta == b.delta && a.eps == b.eps;
}

template <FieldType F>
bool operator==(const Algebra<F>& a, const Algebra<F>& b) {
    return a.field == b.field && a.dim == b.dim && a.mult == b.mult && a.unit == b.unit;
}

}  // namespace codual
