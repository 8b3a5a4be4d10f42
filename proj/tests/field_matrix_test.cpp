#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "netident/field.hpp"
#include "netident/matrix.hpp"
#include "netident/rng.hpp"

using namespace netident;

namespace {

Fp random_fp(Rng& rng) { return Fp(rng.below(Fp::modulus)); }

Matrix<Fp> random_fp_matrix(std::size_t r, std::size_t c, Rng& rng) {
    Matrix<Fp> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_fp(rng);
    return m;
}

// Brute-force Leibniz determinant, independent of elimination.
Fp leibniz_det(const Matrix<Fp>& m) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Fp det;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        Fp term = inversions % 2 ? -Fp::one() : Fp::one();
        for (std::size_t c = 0; c < perm.size(); ++c) term *= m(perm[c], c);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

TEST(Fp, BasicArithmetic) {
    const Fp minus_one = Fp::from_signed(-1);
    EXPECT_EQ(minus_one.value(), Fp::modulus - 1);
    EXPECT_EQ(minus_one * minus_one, Fp::one());
    EXPECT_EQ(Fp(Fp::modulus), Fp::zero());
    EXPECT_EQ(Fp(Fp::modulus + 5), Fp(5));
    EXPECT_EQ(Fp(3) - Fp(5), Fp::from_signed(-2));
    EXPECT_EQ(Fp(7).inverse() * Fp(7), Fp::one());
    EXPECT_THROW(Fp::zero().inverse(), std::domain_error);
}

TEST(Fp, FieldAxiomsOnRandomElements) {
    Rng rng(11);
    for (int k = 0; k < 2000; ++k) {
        const Fp a = random_fp(rng), b = random_fp(rng), c = random_fp(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + (-a), Fp::zero());
        ASSERT_EQ(a - b, a + (-b));
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inverse(), Fp::one());
        }
    }
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
    Rng a = Rng::stream(5, 1, 0), b = Rng::stream(5, 1, 0), c = Rng::stream(5, 1, 1);
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
    Rng r(3);
    for (int k = 0; k < 1000; ++k) {
        ASSERT_LT(r.below(7), 7u);
        const double u = r.unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
    Rng rng(21);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 20; ++t) {
            const auto m = random_fp_matrix(n, n, rng);
            ASSERT_EQ(determinant(m), leibniz_det(m));
        }
}

TEST(Matrix, DeterminantOfSingularIsZero) {
    Matrix<Fp> m(3, 3);
    m(0, 0) = Fp(1), m(0, 1) = Fp(2), m(0, 2) = Fp(3);
    m(1, 0) = Fp(2), m(1, 1) = Fp(4), m(1, 2) = Fp(6);
    m(2, 0) = Fp(5), m(2, 1) = Fp(1), m(2, 2) = Fp(9);
    EXPECT_EQ(determinant(m), Fp::zero());
    EXPECT_EQ(rank(m), 2u);
    EXPECT_THROW(inverse(m), SingularMatrix);
}

TEST(Matrix, InverseAndNullSpaceExact) {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_fp_matrix(4, 4, rng);
        EXPECT_EQ(inverse(a) * a, Matrix<Fp>::identity(4));
    }
    // 3x5 of rank 3: null space of dimension 2.
    const auto wide = random_fp_matrix(3, 5, rng);
    const auto basis = null_space(wide);
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& v : basis)
        for (const Fp& x : wide * v) EXPECT_TRUE(x.is_zero());
}

TEST(Matrix, RankOfProductOfThinFactors) {
    Rng rng(9);
    const auto u = random_fp_matrix(6, 2, rng), v = random_fp_matrix(2, 6, rng);
    EXPECT_EQ(rank(u * v), 2u);
}

TEST(Matrix, ComplexInverseAndDeterminant) {
    Matrix<Complex> a(2, 2);
    a(0, 0) = {1, 1}, a(0, 1) = {2, 0};
    a(1, 0) = {0, -1}, a(1, 1) = {3, 0.5};
    const Complex det = determinant(a);
    const Complex expect = Complex(1, 1) * Complex(3, 0.5) - Complex(2, 0) * Complex(0, -1);
    EXPECT_NEAR(std::abs(det - expect), 0.0, 1e-14);
    const auto prod = inverse(a) * a;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)), 0.0, 1e-14);
}
