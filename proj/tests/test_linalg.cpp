#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <vector>

#include "codual/linalg.hpp"
#include "codual/random.hpp"

using namespace codual;
using RatMat = Matrix<RatField>;
using GF2Mat = Matrix<PrimeField>;

namespace {

RatField Q;

// Independent RREF oracle for 2x2 matrices over GF(2): enumerate all matrices,
// keep those in echelon form with the same row space (as a set of vectors).
bool gf2_is_rref(const GF2Mat& m) {
    auto pivots = pivot_columns(m);
    std::size_t prev = 0;
    bool first = true;
    std::size_t nonzero_rows = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t j = 0;
        while (j < m.cols() && m(i, j) == 0) ++j;
        if (j == m.cols()) {
            // all later rows must be zero too
            for (std::size_t i2 = i; i2 < m.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < m.cols(); ++j2)
                    if (m(i2, j2) != 0) return false;
            break;
        }
        ++nonzero_rows;
        if (!first && j <= prev) return false;
        prev = j;
        first = false;
        if (m(i, j) != 1) return false;
        for (std::size_t i2 = 0; i2 < m.rows(); ++i2)
            if (i2 != i && m(i2, j) != 0) return false;
    }
    return pivots.size() == nonzero_rows;
}

std::set<std::vector<std::uint64_t>> gf2_row_space(const GF2Mat& m) {
    PrimeField f2(2);
    std::set<std::vector<std::uint64_t>> span;
    for (std::uint64_t c0 = 0; c0 < 2; ++c0)
        for (std::uint64_t c1 = 0; c1 < 2; ++c1) {
            std::vector<std::uint64_t> v(m.cols(), 0);
            for (std::size_t j = 0; j < m.cols(); ++j)
                v[j] = f2.add(f2.mul(c0, m(0, j)), f2.mul(c1, m(1, j)));
            span.insert(v);
        }
    return span;
}

}  // namespace

TEST_CASE("rref forced rank-1 example") {
    auto m = RatMat::from_int_rows(Q, {{2, 4}, {1, 2}});
    auto expected = RatMat::from_int_rows(Q, {{1, 2}, {0, 0}});
    REQUIRE(rref(m) == expected);
}

TEST_CASE("rref fixes the identity") {
    auto id = RatMat::identity(Q, 3);
    REQUIRE(rref(id) == id);
}

TEST_CASE("rref over GF(2) agrees with the exhaustive oracle on all 16 matrices") {
    PrimeField f2(2);
    for (int bits = 0; bits < 16; ++bits) {
        GF2Mat m(f2, 2, 2);
        for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = (bits >> k) & 1;
        auto reduced = rref(m);
        // the oracle: the unique echelon matrix with the same row space
        std::size_t found = 0;
        for (int cand_bits = 0; cand_bits < 16; ++cand_bits) {
            GF2Mat cand(f2, 2, 2);
            for (int k = 0; k < 4; ++k) cand(k / 2, k % 2) = (cand_bits >> k) & 1;
            if (gf2_is_rref(cand) && gf2_row_space(cand) == gf2_row_space(m)) {
                ++found;
                REQUIRE(reduced == cand);
            }
        }
        REQUIRE(found == 1);
    }
    // the spec's hand example
    GF2Mat m(f2, 2, 2);
    m(0, 0) = 1; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 0;  // [[1,1],[1,0]]
    // any invertible 2x2 reduces to the identity; [[1,1],[1,2]] over GF(2) is [[1,1],[1,0]]
    REQUIRE(rref(m) == GF2Mat::identity(f2, 2));
}

TEST_CASE("rref is idempotent and preserves the row space") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(Q, 1 + rng.below(5), 1 + rng.below(5), rng);
        auto r = rref(m);
        REQUIRE(rref(r) == r);
        REQUIRE(subspace_from_span(m) == subspace_from_span(r));
        // a random row-space vector stays in the row space
        auto coeffs = random_matrix(Q, 1, m.rows(), rng);
        REQUIRE(contains(subspace_from_span(r), (coeffs * m).transpose()));
    }
}

TEST_CASE("kernel of the identity is zero, kernel of zero is everything") {
    REQUIRE(kernel_basis(RatMat::identity(Q, 3)).dim() == 0);
    auto z = RatMat::zero(Q, 2, 5);
    auto k = kernel_basis(z);
    REQUIRE(k.dim() == 5);
    REQUIRE(k.basis == RatMat::identity(Q, 5));
}

TEST_CASE("kernel example with rank-nullity and membership verification") {
    auto m = RatMat::from_int_rows(Q, {{1, 1, 0}, {0, 0, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    REQUIRE(k.dim() == m.cols() - rank(m));
    // basis vector is annihilated and spans span{(1,-1,0)}
    auto v = inclusion_of(k);
    REQUIRE((m * v).is_zero());
    RatMat w(Q, 3, 1);
    w(0, 0) = Q.one();
    w(1, 0) = Q.neg(Q.one());
    REQUIRE(contains(k, w));
}

TEST_CASE("rank-nullity on random matrices over both fields") {
    SplitMix64 rng(5);
    PrimeField f5(5);
    for (int trial = 0; trial < 25; ++trial) {
        auto m = random_matrix(Q, rng.below(5), rng.below(5), rng);
        REQUIRE(m.cols() == rank(m) + kernel_basis(m).dim());
        auto m5 = random_matrix(f5, rng.below(5), rng.below(5), rng);
        REQUIRE(m5.cols() == rank(m5) + kernel_basis(m5).dim());
    }
}

TEST_CASE("quotient by the zero subspace is the identity") {
    auto q = quotient_map(3, zero_subspace(Q, 3));
    REQUIRE(q == RatMat::identity(Q, 3));
}

TEST_CASE("quotient by the full space lands in dimension zero") {
    auto q = quotient_map(2, full_subspace(Q, 2));
    REQUIRE(q.rows() == 0);
    REQUIRE(q.cols() == 2);
}

TEST_CASE("quotient by span(1,1) kills exactly that line") {
    RatMat span(Q, 1, 2);
    span(0, 0) = Q.one();
    span(0, 1) = Q.one();
    auto s = subspace_from_span(span);
    auto q = quotient_map(2, s);
    REQUIRE(q.rows() == 1);
    RatMat diag(Q, 2, 1);
    diag(0, 0) = Q.one();
    diag(1, 0) = Q.one();
    REQUIRE((q * diag).is_zero());
    // kernel of q is exactly s, via the kernel oracle
    REQUIRE(kernel_basis(q) == s);
}

TEST_CASE("quotient kernel equals the subspace on random inputs") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t ambient = 1 + rng.below(6);
        auto s = subspace_from_span(random_matrix(Q, rng.below(ambient + 1), ambient, rng));
        auto q = quotient_map(ambient, s);
        REQUIRE(q.rows() == ambient - s.dim());
        REQUIRE(rank(q) == q.rows());
        REQUIRE(kernel_basis(q) == s);
    }
}

TEST_CASE("inverse is exact and detects singularity") {
    SplitMix64 rng(3);
    auto [g, g_inv] = random_invertible(Q, 4, rng);
    REQUIRE(g * g_inv == RatMat::identity(Q, 4));
    REQUIRE(inverse(g) == g_inv);
    auto singular = RatMat::from_int_rows(Q, {{1, 2}, {2, 4}});
    REQUIRE_THROWS_AS(inverse(singular), StructureError);
}

TEST_CASE("coords_in reads off pivot coordinates and rejects outsiders") {
    auto s = subspace_from_span(RatMat::from_int_rows(Q, {{1, 0, 2}, {0, 1, 3}}));
    RatMat inside(Q, 3, 1);
    inside(0, 0) = Q.from_int(2);
    inside(1, 0) = Q.from_int(-1);
    inside(2, 0) = Q.from_int(1);
    auto c = coords_in(s, inside);
    REQUIRE(c.has_value());
    REQUIRE((*c)[0] == Q.from_int(2));
    REQUIRE((*c)[1] == Q.from_int(-1));
    RatMat outside(Q, 3, 1);
    outside(2, 0) = Q.one();
    REQUIRE_FALSE(contains(s, outside));
    REQUIRE(selector_of(s) * inclusion_of(s) == RatMat::identity(Q, 2));
}

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    auto a = Q.parse("3/6");
    REQUIRE(a.has_value());
    REQUIRE(Q.str(*a) == "1/2");
    auto b = Q.parse("2/-4");
    REQUIRE(b.has_value());
    REQUIRE(Q.str(*b) == "-1/2");
    REQUIRE_FALSE(Q.parse("1/0").has_value());
    REQUIRE_FALSE(Q.parse("").has_value());
    REQUIRE_FALSE(Q.parse("x").has_value());
    REQUIRE(Q.str(Q.add(*Q.parse("1/3"), *Q.parse("1/6"))) == "1/2");
}

TEST_CASE("prime field arithmetic and validation") {
    REQUIRE_THROWS_AS(PrimeField(4), FieldError);
    REQUIRE_THROWS_AS(PrimeField(1), FieldError);
    PrimeField f7(7);
    for (std::uint64_t a = 1; a < 7; ++a) REQUIRE(f7.mul(a, f7.inv(a)) == 1);
    REQUIRE(f7.sub(2, 5) == 4);
    REQUIRE_FALSE(f7.parse("7").has_value());
    REQUIRE(f7.parse("6").has_value());
}
