#pragma once

// Left comodules (X, rho: X -> C(x)X), right comodules (M, mu: M -> M(x)C) and
// C-D-bicomodules, with their certifiers and the standard constructions
// (regular comodule, direct sums, change of basis, graded comodules over a
// group-like coalgebra).

#include <cstddef>
#include <vector>

#include "codual/cert.hpp"
#include "codual/coalgebra.hpp"

namespace codual {

template <FieldType F>
struct Comodule {
    Coalgebra<F> over;
    std::size_t dim = 0;
    Matrix<F> rho;  // (n*dim) x dim, coordinates of C (x) X
};

template <FieldType F>
struct RightComodule {
    Coalgebra<F> over;
    std::size_t dim = 0;
    Matrix<F> mu;  // (dim*n) x dim, coordinates of M (x) C
};

template <FieldType F>
struct Bicomodule {
    Coalgebra<F> over_left;   // C
    Coalgebra<F> over_right;  // D
    std::size_t dim = 0;
    Matrix<F> lambda;  // (nC*dim) x dim, left C-costructure
    Matrix<F> mu;      // (dim*nD) x dim, right D-costructure
};

template <FieldType F>
void validate_shapes(const Comodule<F>& x) {
    validate_shapes(x.over);
    if (x.rho.rows() != x.over.dim * x.dim || x.rho.cols() != x.dim)
        throw StructureError("comodule rho must be (n*dim) x dim, got " + x.rho.shape_str());
}

template <FieldType F>
void validate_shapes(const RightComodule<F>& m) {
    validate_shapes(m.over);
    if (m.mu.rows() != m.dim * m.over.dim || m.mu.cols() != m.dim)
        throw StructureError("right comodule mu must be (dim*n) x dim, got " + m.mu.shape_str());
}

template <FieldType F>
void validate_shapes(const Bicomodule<F>& b) {
    validate_shapes(b.over_left);
    validate_shapes(b.over_right);
    if (b.lambda.rows() != b.over_left.dim * b.dim || b.lambda.cols() != b.dim)
        throw StructureError("bicomodule lambda must be (nC*dim) x dim, got " + b.lambda.shape_str());
    if (b.mu.rows() != b.dim * b.over_right.dim || b.mu.cols() != b.dim)
        throw StructureError("bicomodule mu must be (dim*nD) x dim, got " + b.mu.shape_str());
}

/// Comodule square (Delta(x)id)rho = (id(x)rho)rho and triangle (eps(x)id)rho = id.
template <FieldType F>
CertReport<F> check_comodule(const Comodule<F>& x) {
    validate_shapes(x);
    auto id_c = Matrix<F>::identity(x.over.field, x.over.dim);
    auto id_x = Matrix<F>::identity(x.over.field, x.dim);
    CertReport<F> report;
    report.checks.push_back(
        compare_composites<F>("square", kron(x.over.delta, id_x) * x.rho, kron(id_c, x.rho) * x.rho));
    report.checks.push_back(compare_composites<F>("triangle", kron(x.over.eps, id_x) * x.rho, id_x));
    return report;
}

/// Mirrored axioms: (mu(x)id)mu = (id(x)Delta)mu and (id(x)eps)mu = id.
template <FieldType F>
CertReport<F> check_right_comodule(const RightComodule<F>& m) {
    validate_shapes(m);
    auto id_c = Matrix<F>::identity(m.over.field, m.over.dim);
    auto id_m = Matrix<F>::identity(m.over.field, m.dim);
    CertReport<F> report;
    report.checks.push_back(
        compare_composites<F>("square", kron(m.mu, id_c) * m.mu, kron(id_m, m.over.delta) * m.mu));
    report.checks.push_back(compare_composites<F>("triangle", kron(id_m, m.over.eps) * m.mu, id_m));
    return report;
}

/// Both costructures plus the compatibility square (id_C(x)mu)lambda =
/// (lambda(x)id_D)mu.
template <FieldType F>
CertReport<F> check_bicomodule(const Bicomodule<F>& b) {
    validate_shapes(b);
    CertReport<F> report;
    auto left = check_comodule(Comodule<F>{b.over_left, b.dim, b.lambda});
    auto right = check_right_comodule(RightComodule<F>{b.over_right, b.dim, b.mu});
    for (auto& c : left.checks) {
        c.diagram = "left " + c.diagram;
        report.checks.push_back(c);
    }
    for (auto& c : right.checks) {
        c.diagram = "right " + c.diagram;
        report.checks.push_back(c);
    }
    auto id_c = Matrix<F>::identity(b.over_left.field, b.over_left.dim);
    auto id_d = Matrix<F>::identity(b.over_left.field, b.over_right.dim);
    report.checks.push_back(compare_composites<F>("compatibility", kron(id_c, b.mu) * b.lambda,
                                                  kron(b.lambda, id_d) * b.mu));
    return report;
}

template <FieldType F>
void require_certified(const Comodule<F>& x, const char* who) {
    auto r = check_comodule(x);
    if (!r.pass()) throw PreconditionError(std::string(who) + ": comodule fails " + r.first_failure());
}

template <FieldType F>
void require_certified(const RightComodule<F>& m, const char* who) {
    auto r = check_right_comodule(m);
    if (!r.pass())
        throw PreconditionError(std::string(who) + ": right comodule fails " + r.first_failure());
}

template <FieldType F>
void require_certified(const Bicomodule<F>& b, const char* who) {
    auto r = check_bicomodule(b);
    if (!r.pass())
        throw PreconditionError(std::string(who) + ": bicomodule fails " + r.first_failure());
}

// ---------------------------------------------------------------------------
// constructions

/// C as a left comodule over itself, rho = Delta.
template <FieldType F>
Comodule<F> regular_comodule(const Coalgebra<F>& c) {
    return Comodule<F>{c, c.dim, c.delta};
}

/// C as a right comodule over itself, mu = Delta.
template <FieldType F>
RightComodule<F> regular_right_comodule(const Coalgebra<F>& c) {
    return RightComodule<F>{c, c.dim, c.delta};
}

/// C (x) D with lambda = Delta_C (x) id and mu = id (x) Delta_D; the regular
/// C-D-bicomodule.
template <FieldType F>
Bicomodule<F> regular_bicomodule(const Coalgebra<F>& c, const Coalgebra<F>& d) {
    if (!(c.field == d.field)) throw StructureError("regular_bicomodule: field mismatch");
    auto id_c = Matrix<F>::identity(c.field, c.dim);
    auto id_d = Matrix<F>::identity(c.field, d.dim);
    return Bicomodule<F>{c, d, c.dim * d.dim, kron(c.delta, id_d), kron(id_c, d.delta)};
}

/// Over a group-like coalgebra a comodule is exactly a grading: rho(x) = e_s (x) x
/// for x in the s-th block. dims[s] is the multiplicity of the s-th point.
template <FieldType F>
Comodule<F> graded_comodule(const Coalgebra<F>& c, const std::vector<std::size_t>& dims) {
    if (dims.size() != c.dim) throw StructureError("graded_comodule: one multiplicity per basis vector");
    std::size_t x = 0;
    for (auto d : dims) x += d;
    Matrix<F> rho(c.field, c.dim * x, x);
    std::size_t col = 0;
    for (std::size_t s = 0; s < dims.size(); ++s)
        for (std::size_t t = 0; t < dims[s]; ++t, ++col)
            rho(tensor_index(x, s, col), col) = c.field.one();
    return Comodule<F>{c, x, rho};
}

template <FieldType F>
RightComodule<F> graded_right_comodule(const Coalgebra<F>& c, const std::vector<std::size_t>& dims) {
    if (dims.size() != c.dim)
        throw StructureError("graded_right_comodule: one multiplicity per basis vector");
    std::size_t x = 0;
    for (auto d : dims) x += d;
    Matrix<F> mu(c.field, x * c.dim, x);
    std::size_t col = 0;
    for (std::size_t s = 0; s < dims.size(); ++s)
        for (std::size_t t = 0; t < dims[s]; ++t, ++col)
            mu(tensor_index(c.dim, col, s), col) = c.field.one();
    return RightComodule<F>{c, x, mu};
}

template <FieldType F>
Comodule<F> direct_sum(const Comodule<F>& a, const Comodule<F>& b) {
    if (!(a.over == b.over)) throw StructureError("direct_sum: comodules over different coalgebras");
    std::size_t n = a.over.dim, x = a.dim, y = b.dim, t = x + y;
    Matrix<F> rho(a.over.field, n * t, t);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < x; ++r)
            for (std::size_t j = 0; j < x; ++j)
                rho(tensor_index(t, c, r), j) = a.rho(tensor_index(x, c, r), j);
        for (std::size_t r = 0; r < y; ++r)
            for (std::size_t j = 0; j < y; ++j)
                rho(tensor_index(t, c, x + r), x + j) = b.rho(tensor_index(y, c, r), j);
    }
    return Comodule<F>{a.over, t, rho};
}

template <FieldType F>
RightComodule<F> direct_sum(const RightComodule<F>& a, const RightComodule<F>& b) {
    if (!(a.over == b.over)) throw StructureError("direct_sum: comodules over different coalgebras");
    std::size_t n = a.over.dim, x = a.dim, y = b.dim, t = x + y;
    Matrix<F> mu(a.over.field, t * n, t);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < x; ++r)
            for (std::size_t j = 0; j < x; ++j)
                mu(tensor_index(n, r, c), j) = a.mu(tensor_index(n, r, c), j);
        for (std::size_t r = 0; r < y; ++r)
            for (std::size_t j = 0; j < y; ++j)
                mu(tensor_index(n, x + r, c), x + j) = b.mu(tensor_index(n, r, c), j);
    }
    return RightComodule<F>{a.over, t, mu};
}

template <FieldType F>
Bicomodule<F> direct_sum(const Bicomodule<F>& a, const Bicomodule<F>& b) {
    if (!(a.over_left == b.over_left) || !(a.over_right == b.over_right))
        throw StructureError("direct_sum: bicomodules over different coalgebras");
    std::size_t nc = a.over_left.dim, nd = a.over_right.dim, x = a.dim, y = b.dim, t = x + y;
    Matrix<F> lambda(a.over_left.field, nc * t, t);
    Matrix<F> mu(a.over_left.field, t * nd, t);
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t r = 0; r < x; ++r)
            for (std::size_t j = 0; j < x; ++j)
                lambda(tensor_index(t, c, r), j) = a.lambda(tensor_index(x, c, r), j);
        for (std::size_t r = 0; r < y; ++r)
            for (std::size_t j = 0; j < y; ++j)
                lambda(tensor_index(t, c, x + r), x + j) = b.lambda(tensor_index(y, c, r), j);
    }
    for (std::size_t c = 0; c < nd; ++c) {
        for (std::size_t r = 0; r < x; ++r)
            for (std::size_t j = 0; j < x; ++j) mu(tensor_index(nd, r, c), j) = a.mu(tensor_index(nd, r, c), j);
        for (std::size_t r = 0; r < y; ++r)
            for (std::size_t j = 0; j < y; ++j)
                mu(tensor_index(nd, x + r, c), x + j) = b.mu(tensor_index(nd, r, c), j);
    }
    return Bicomodule<F>{a.over_left, a.over_right, t, lambda, mu};
}

template <FieldType F>
Comodule<F> conjugate(const Comodule<F>& x, const Matrix<F>& g, const Matrix<F>& g_inv) {
    auto id_c = Matrix<F>::identity(x.over.field, x.over.dim);
    return Comodule<F>{x.over, x.dim, kron(id_c, g) * x.rho * g_inv};
}

template <FieldType F>
RightComodule<F> conjugate(const RightComodule<F>& m, const Matrix<F>& g, const Matrix<F>& g_inv) {
    auto id_c = Matrix<F>::identity(m.over.field, m.over.dim);
    return RightComodule<F>{m.over, m.dim, kron(g, id_c) * m.mu * g_inv};
}

template <FieldType F>
Bicomodule<F> conjugate(const Bicomodule<F>& b, const Matrix<F>& g, const Matrix<F>& g_inv) {
    auto id_c = Matrix<F>::identity(b.over_left.field, b.over_left.dim);
    auto id_d = Matrix<F>::identity(b.over_left.field, b.over_right.dim);
    return Bicomodule<F>{b.over_left, b.over_right, b.dim, kron(id_c, g) * b.lambda * g_inv,
                         kron(g, id_d) * b.mu * g_inv};
}

}  // namespace codual
