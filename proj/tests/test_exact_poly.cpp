#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "descartes/errors.hpp"
#include "descartes/exact_poly.hpp"

using namespace descartes;

namespace {

// Oracle: one generic convolution per linear factor.
IntPolynomial naive_pmn(std::size_t m, std::size_t n) {
    IntPolynomial p = IntPolynomial::constant(1);
    const IntPolynomial minus{-1, 1}, plus{1, 1};
    for (std::size_t i = 0; i < m; ++i) p = p * minus;
    for (std::size_t i = 0; i < n; ++i) p = p * plus;
    return p;
}

IntPolynomial ints(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

}  // namespace

TEST(BuildPmn, GoldenP26) {
    // x^8+4x^7+4x^6-4x^5-10x^4-4x^3+4x^2+4x+1, ascending powers
    EXPECT_EQ(build_pmn(2, 6), ints({1, 4, 4, -4, -10, -4, 4, 4, 1}));
}

TEST(BuildPmn, EmptyProductIsOne) {
    const IntPolynomial p = build_pmn(0, 0);
    EXPECT_EQ(p.degree(), 0u);
    EXPECT_EQ(p[0], 1);
}

TEST(BuildPmn, EqualExponentsGiveEvenPolynomial) {
    for (std::size_t m = 1; m <= 10; ++m) {
        IntPolynomial expected = IntPolynomial::constant(1);
        for (std::size_t i = 0; i < m; ++i) expected = expected * ints({-1, 0, 1});
        EXPECT_EQ(build_pmn(m, m), expected) << "m=" << m;
    }
}

TEST(BuildPmn, MatchesNaiveConvolutionAndFactorProduct) {
    for (std::size_t m = 0; m <= 60; m += 3) {
        for (std::size_t n = 0; n <= 60; n += 4) {
            const IntPolynomial p = build_pmn(m, n);
            ASSERT_EQ(p, naive_pmn(m, n)) << m << "," << n;
            ASSERT_EQ(p, build_pmn(m, 0) * build_pmn(0, n)) << m << "," << n;
            ASSERT_EQ(p.degree(), m + n);
        }
    }
}

TEST(BuildPmn, Evaluations) {
    for (std::size_t m = 0; m <= 12; ++m) {
        for (std::size_t n = 0; n <= 12; ++n) {
            const IntPolynomial p = build_pmn(m, n);
            if (m >= 1) EXPECT_EQ(p.evaluate(1), 0);
            if (n >= 1) EXPECT_EQ(p.evaluate(-1), 0);
            mpz_class three_pow;
            mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, n);
            EXPECT_EQ(p.evaluate(2), three_pow);
        }
    }
}

TEST(BuildPmn, ResourceGuard) {
    EXPECT_THROW(build_pmn(kDefaultMaxDegree, 1), ResourceError);
    setenv("DESCARTES_LAB_MAX_DEGREE", "10", 1);
    EXPECT_THROW(build_pmn(5, 6), ResourceError);
    EXPECT_NO_THROW(build_pmn(5, 5));
    unsetenv("DESCARTES_LAB_MAX_DEGREE");
}

TEST(PmnCoefficient, AgreesWithExpansion) {
    for (std::size_t m = 0; m <= 15; ++m) {
        for (std::size_t n = 0; n <= 15; ++n) {
            const IntPolynomial p = build_pmn(m, n);
            for (std::size_t j = 0; j <= m + n + 1; ++j) ASSERT_EQ(pmn_coefficient(m, n, j), p.coefficient(j));
        }
    }
}

TEST(Reciprocal, Examples) {
    EXPECT_TRUE(reciprocal_check(build_pmn(3, 4), 3));
    EXPECT_TRUE(reciprocal_check(ints({1, 1, 1}), 0));
    EXPECT_FALSE(reciprocal_check(ints({3, 2, 1}), 0));
    EXPECT_THROW(reciprocal_check(IntPolynomial(), 0), DomainError);
}

TEST(Reciprocal, HoldsForAllPmn) {
    for (std::size_t m = 0; m <= 60; ++m) {
        for (std::size_t n = m; n <= 60; ++n) ASSERT_TRUE(reciprocal_check(build_pmn(m, n), m)) << m << "," << n;
    }
}

TEST(PolyFromRoots, DifferenceOfSquares) {
    const RatPolynomial p = poly_from_roots(RootMultiset({mpq_class(1), mpq_class(-1)}));
    EXPECT_EQ(p, RatPolynomial({mpq_class(-1), mpq_class(0), mpq_class(1)}));
}

TEST(PolyFromRoots, ThreeLinearFactors) {
    // (x - 9/8)(x + 10/8)(x + 11/8) expanded by hand
    const RatPolynomial p = poly_from_roots(RootMultiset({mpq_class(9, 8), mpq_class(-10, 8), mpq_class(-11, 8)}));
    EXPECT_EQ(p, RatPolynomial({mpq_class(-495, 256), mpq_class(-79, 64), mpq_class(3, 2), mpq_class(1)}));
}

TEST(PolyFromRoots, RoundTripWithPmn) {
    std::vector<mpq_class> roots(2, mpq_class(1));
    roots.insert(roots.end(), 6, mpq_class(-1));
    const RatPolynomial p = poly_from_roots(RootMultiset(roots));
    const IntPolynomial q = build_pmn(2, 6);
    ASSERT_EQ(p.degree(), q.degree());
    for (std::size_t j = 0; j <= q.degree(); ++j) EXPECT_EQ(p[j], mpq_class(q[j]));
}

TEST(PolyFromRoots, ZeroRootRejected) {
    EXPECT_THROW(RootMultiset({mpq_class(1), mpq_class(0)}), DomainError);
}

TEST(PolyFromRoots, PermutationInvariantAndPrimitiveAgrees) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<mpq_class> roots;
        const std::size_t deg = 1 + trial % 8;
        while (roots.size() < deg) {
            mpq_class q(num(rng), den(rng));
            q.canonicalize();
            if (sgn(q) != 0) roots.push_back(q);
        }
        const RatPolynomial p = poly_from_roots(RootMultiset(roots));
        std::shuffle(roots.begin(), roots.end(), rng);
        ASSERT_EQ(poly_from_roots(RootMultiset(roots)), p);

        // primitive form is p scaled by the product of denominators
        const IntPolynomial q = primitive_from_roots(RootMultiset(roots));
        mpz_class scale = 1;
        for (const auto& r : roots) scale *= r.get_den();
        for (std::size_t j = 0; j <= p.degree(); ++j) ASSERT_EQ(mpq_class(q[j]), p[j] * scale);
    }
}

TEST(Fractions, FormatAndParse) {
    EXPECT_EQ(to_fraction_string(mpq_class(6, 4)), "3/2");
    EXPECT_EQ(to_fraction_string(mpq_class(-5)), "-5/1");
    EXPECT_EQ(parse_fraction("-10/8"), mpq_class(-5, 4));
    EXPECT_EQ(parse_fraction("7"), mpq_class(7));
    EXPECT_THROW(parse_fraction("1/0"), DomainError);
    EXPECT_THROW(parse_fraction("abc"), DomainError);
    EXPECT_THROW(parse_fraction(""), DomainError);
}
