#include <gtest/gtest.h>

#include <numeric>

#include "descartes/errors.hpp"
#include "descartes/exact_poly.hpp"
#include "descartes/vanishing.hpp"

using namespace descartes;

namespace {

using Positions = std::vector<std::size_t>;

SignPattern sigma_of(std::size_t m, std::size_t n) { return sign_pattern_of(build_pmn(m, n)); }

SignPattern decode(std::initializer_list<std::size_t> tokens) { return sigma_decode(SigmaNotation(tokens)); }

// Oracle for the m=2 family: zeros exactly when n+2 is a square.
bool is_square(std::size_t v) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

}  // namespace

TEST(ZeroPositions, Examples) {
    EXPECT_EQ(zero_positions(2, 6).positions, Positions{});
    EXPECT_EQ(zero_positions(2, 14).positions, (Positions{6, 10}));
    EXPECT_EQ(zero_positions(1, 3).positions, Positions{2});
    EXPECT_EQ(zero_positions(4, 13).positions, (Positions{7, 10}));
    EXPECT_EQ(zero_positions(4, 62).positions, (Positions{30, 36}));
    EXPECT_EQ(zero_positions(5, 12).positions, (Positions{3, 14}));
    EXPECT_EQ(zero_positions(5, 31).positions, (Positions{14, 18, 22}));
    EXPECT_EQ(zero_positions(5, 62).positions, (Positions{22, 28, 39, 45}));
}

TEST(Isqrt, Exact) {
    EXPECT_EQ(isqrt(0), 0);
    EXPECT_EQ(isqrt(15), 3);
    EXPECT_EQ(isqrt(16), 4);
    EXPECT_EQ(exact_sqrt(mpz_class(144)), mpz_class(12));
    EXPECT_FALSE(exact_sqrt(mpz_class(145)).has_value());
    mpz_class big("123456789012345678901234567890");
    EXPECT_EQ(exact_sqrt(big * big), big);
    EXPECT_FALSE(exact_sqrt(big * big + 1).has_value());
    EXPECT_THROW(isqrt(-1), DomainError);
}

TEST(Predictors, MatchOracleForSmallM) {
    for (std::size_t m = 1; m <= 5; ++m) {
        for (std::size_t n = m; n <= 200; ++n) {
            ASSERT_EQ(predict_zeros_m(m, n), zero_positions(m, n).positions) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Predictors, ParamsAndErrors) {
    const auto p2 = predictor_params(2, 14);
    ASSERT_TRUE(p2.nu);
    EXPECT_EQ(*p2.nu, 4u);
    const auto p3 = predictor_params(3, 14);
    ASSERT_TRUE(p3.mu);
    EXPECT_EQ(*p3.mu, 7u);
    const auto p5 = predictor_params(5, 31);
    ASSERT_TRUE(p5.chi);
    EXPECT_EQ(*p5.chi, 106);
    const auto p62 = predictor_params(5, 62);
    ASSERT_TRUE(p62.chi);
    EXPECT_EQ(*p62.chi, 204);
    EXPECT_EQ(p62.radicands[0], mpz_class(23 * 23));
    EXPECT_EQ(p62.radicands[1], mpz_class(11 * 11));

    EXPECT_THROW(predict_zeros_m(6, 10), UnsupportedError);
    EXPECT_THROW(predict_zeros_m(3, 2), DomainError);
}

TEST(Predictors, N151IsNotSquare) {
    const auto p = predictor_params(4, 151);
    ASSERT_TRUE(p.theta);
    EXPECT_EQ(*p.theta, 8 * 47);
    for (const auto& r : p.radicands) {
        ASSERT_TRUE(r.has_value());
        EXPECT_FALSE(exact_sqrt(*r).has_value());
    }
    EXPECT_TRUE(zero_positions(4, 151).positions.empty());
}

TEST(Predictors, M2ZerosExactlyAtSquaresMinusTwo) {
    for (std::size_t n = 2; n <= 200; ++n) {
        ASSERT_EQ(!zero_positions(2, n).positions.empty(), is_square(n + 2)) << n;
    }
}

TEST(Predictors, M4OnlyTwoCasesUpTo200) {
    std::vector<std::size_t> hits;
    for (std::size_t n = 5; n <= 200; ++n) {
        if (!zero_positions(4, n).positions.empty()) hits.push_back(n);
    }
    EXPECT_EQ(hits, (Positions{13, 62}));
}

TEST(SigmaFormulas, MatchExpansion) {
    for (std::size_t n = 2; n <= 200; ++n) {
        ASSERT_EQ(sigma_decode(sigma_formula_p2(n)), sigma_of(2, n)) << "n=" << n;
    }
    for (std::size_t n = 3; n <= 200; ++n) {
        ASSERT_EQ(sigma_decode(sigma_formula_p3(n)), sigma_of(3, n)) << "n=" << n;
    }
    EXPECT_THROW(sigma_formula_p2(1), DomainError);
    EXPECT_THROW(sigma_formula_p3(2), DomainError);
}

TEST(SigmaFormulas, DisplayedPatterns) {
    EXPECT_EQ(sigma_formula_p2(14).str(), "S6,0,3,0,6");
    EXPECT_EQ(sigma_formula_p2(4).str(), "S2,3,2");
    EXPECT_EQ(sigma_of(4, 13), decode({4, 3, 0, 2, 0, 3, 4}));
    EXPECT_EQ(sigma_of(4, 62), decode({24, 6, 0, 5, 0, 6, 24}));
    EXPECT_EQ(sigma_of(5, 12), decode({3, 0, 2, 3, 3, 2, 0, 3}));
    EXPECT_EQ(sigma_of(5, 31), decode({10, 4, 0, 3, 0, 3, 0, 4, 10}));
    EXPECT_EQ(sigma_of(5, 62), decode({22, 0, 5, 0, 5, 5, 0, 5, 0, 22}));
}

TEST(SequenceS, FirstTwelve) {
    const auto s = sequence_S(12);
    EXPECT_EQ(s, (Positions{3, 6, 14, 19, 31, 38, 54, 63, 83, 94, 118, 131}));
    Positions diffs(s.size());
    std::adjacent_difference(s.begin(), s.end(), diffs.begin());
    diffs.erase(diffs.begin());
    EXPECT_EQ(diffs, (Positions{3, 8, 5, 12, 7, 16, 9, 20, 11, 24, 13}));
    EXPECT_EQ(sequence_S(1), Positions{3});
}

TEST(SequenceS, EachTermHasM3Zeros) {
    for (std::size_t n : sequence_S(12)) EXPECT_FALSE(zero_positions(3, n).positions.empty()) << n;
}

TEST(Structure, MiddleCoefficientParity) {
    for (std::size_t m = 0; m <= 60; m += 2) {
        for (std::size_t n = 0; n <= 60; n += 2) {
            if (m + n < 2) continue;
            ASSERT_NE(pmn_coefficient(m, n, (m + n) / 2), 0) << m << "," << n;
        }
    }
    for (std::size_t m = 1; m <= 61; m += 2) {
        for (std::size_t n = 1; n <= 61; n += 2) ASSERT_EQ(pmn_coefficient(m, n, (m + n) / 2), 0) << m << "," << n;
    }
}

TEST(Structure, NearDiagonal) {
    for (std::size_t m = 1; m <= 60; ++m) {
        Positions odd;
        for (std::size_t j = 1; j < 2 * m; j += 2) odd.push_back(j);
        ASSERT_EQ(zero_positions(m, m).positions, odd) << m;

        ASSERT_TRUE(zero_positions(m, m + 1).positions.empty()) << m;
        std::vector<std::size_t> twos(m + 1, 2);
        ASSERT_EQ(sigma_encode(sigma_of(m, m + 1)), SigmaNotation(twos)) << m;

        const Positions expected = m % 2 == 0 ? Positions{} : Positions{m + 1};
        ASSERT_EQ(zero_positions(m, m + 2).positions, expected) << m;

        // m/2 twos, a 3, m/2 twos; or (m+1)/2 twos, a 0, (m+1)/2 twos
        std::vector<std::size_t> shape;
        if (m % 2 == 0) {
            shape.assign(m / 2, 2);
            shape.push_back(3);
            shape.insert(shape.end(), m / 2, 2);
        } else {
            shape.assign((m + 1) / 2, 2);
            shape.push_back(0);
            shape.insert(shape.end(), (m + 1) / 2, 2);
        }
        ASSERT_EQ(sigma_encode(sigma_of(m, m + 2)), SigmaNotation(shape)) << m;
    }
}

TEST(Structure, SymmetryOfZeros) {
    for (std::size_t m = 1; m <= 30; ++m) {
        for (std::size_t n = m; n <= 60; ++n) {
            const auto z = zero_positions(m, n).positions;
            for (std::size_t j : z) ASSERT_TRUE(std::binary_search(z.begin(), z.end(), m + n - j));
        }
    }
}

TEST(ZeroFlanks, Examples) {
    EXPECT_TRUE(lemma_mb_check(SignPattern::parse("+0-")));
    EXPECT_FALSE(lemma_mb_check(SignPattern::parse("+0+")));
    EXPECT_FALSE(lemma_mb_check(SignPattern::parse("+00-")));
}

TEST(ZeroFlanks, HoldsOnAllPmn) {
    for (std::size_t m = 0; m <= 80; ++m) {
        for (std::size_t n = 0; n <= 80; ++n) {
            if (m + n == 0) continue;
            ASSERT_TRUE(lemma_mb_check(sigma_of(m, n))) << m << "," << n;
        }
    }
}

TEST(Triples, SetsPartitionAllTwenty) {
    EXPECT_EQ(possible_triples().size(), 12u);
    EXPECT_EQ(impossible_triples().size(), 8u);
    for (const auto& t : possible_triples()) EXPECT_FALSE(impossible_triples().contains(t));
    const SignTriple ppm{Sign::Plus, Sign::Plus, Sign::Minus};
    const SignTriple pmp{Sign::Plus, Sign::Minus, Sign::Plus};
    const SignTriple zpz{Sign::Zero, Sign::Plus, Sign::Zero};
    EXPECT_TRUE(possible_triples().contains(ppm));
    EXPECT_TRUE(impossible_triples().contains(pmp));
    EXPECT_TRUE(impossible_triples().contains(zpz));
    EXPECT_EQ(triple_str(ppm), "(+,+,-)");
}

TEST(Triples, Census) {
    const auto c3 = triple_census(3);
    const std::set<SignTriple> expected3{{Sign::Plus, Sign::Plus, Sign::Minus}, {Sign::Plus, Sign::Minus, Sign::Minus}};
    EXPECT_EQ(c3.seen, expected3);

    const auto c16 = triple_census(16);
    EXPECT_TRUE(c16.forbidden_hits.empty());

    const auto c40 = triple_census(40, false, 3);
    EXPECT_TRUE(c40.forbidden_hits.empty());
    EXPECT_EQ(c40.seen, possible_triples());
    EXPECT_EQ(triple_census(40, false, 1).seen, c40.seen);

    // m = n brings in (0,±,0)
    EXPECT_FALSE(triple_census(6, true).forbidden_hits.empty());
}

TEST(Xk, SmallK) {
    const std::vector<XkCouple> k2 = xk_vanishing_couples(2, 3);
    ASSERT_EQ(k2.size(), 2u);
    EXPECT_EQ(k2[0].m, 1u);
    EXPECT_EQ(k2[0].n, 3u);
    EXPECT_EQ(k2[1].m, 3u);
    EXPECT_EQ(k2[1].n, 6u);

    for (const auto& c : xk_vanishing_couples(3, 20)) {
        EXPECT_NE(c.s % 3, 0u);
        EXPECT_EQ(pmn_coefficient(c.m, c.n, 3), 0) << c.m << "," << c.n;
    }
    bool has_2_7 = false;
    for (const auto& c : xk_vanishing_couples(3, 5)) has_2_7 |= (c.m == 2 && c.n == 7);
    EXPECT_TRUE(has_2_7);
    EXPECT_THROW(xk_vanishing_couples(6, 5), UnsupportedError);
}

TEST(Xk, K4AndK5MatchDisplayedLists) {
    auto pairs = [](const std::vector<XkCouple>& cs) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& c : cs) out.emplace_back(c.m, c.n);
        return out;
    };
    using PL = std::vector<std::pair<std::size_t, std::size_t>>;
    const auto k4 = xk_vanishing_couples(4, 20);
    EXPECT_EQ(pairs(k4), (PL{{3, 5}, {7, 10}, {30, 36}, {1, 7}}));
    const auto k5 = xk_vanishing_couples(5, 20);
    EXPECT_EQ(pairs(k5), (PL{{3, 7}, {14, 22}, {1, 9}, {28, 39}, {3, 14}}));

    // the '-' radical sign is used by (1,7) only, for k = 4; by (1,9) and (3,14) for k = 5
    for (const auto& c : k4) EXPECT_EQ(c.root_sign < 0, c.m == 1) << c.m;
    for (const auto& c : k5) EXPECT_EQ(c.root_sign < 0, (c.m == 1 && c.n == 9) || (c.m == 3 && c.n == 14)) << c.m;

    for (const auto& c : k4) EXPECT_EQ(pmn_coefficient(c.m, c.n, 4), 0);
    for (const auto& c : k5) EXPECT_EQ(pmn_coefficient(c.m, c.n, 5), 0);
}

TEST(Xk, ExtendedRanges) {
    std::vector<XkCouple> k4, k5;
    for (const auto& c : xk_vanishing_couples(4, 200)) {
        if (c.s > 20) k4.push_back(c);
    }
    for (const auto& c : xk_vanishing_couples(5, 200)) {
        if (c.s > 20) k5.push_back(c);
    }
    EXPECT_EQ(k4, (std::vector<XkCouple>{{7476, 7567, 91, +1}, {715, 806, 91, -1}}));
    EXPECT_EQ(k5, (std::vector<XkCouple>{{133, 156, 23, +1}, {22, 45, 23, -1}}));
    for (const auto& c : k4) EXPECT_EQ(pmn_coefficient(c.m, c.n, 4), 0);
    for (const auto& c : k5) EXPECT_EQ(pmn_coefficient(c.m, c.n, 5), 0);
}

TEST(Xk, ReportedCouplesReverifyByFullExpansion) {
    for (std::size_t k = 2; k <= 5; ++k) {
        for (const auto& c : xk_vanishing_couples(k, 30)) {
            const auto z = zero_positions(c.m, c.n).positions;
            ASSERT_TRUE(std::binary_search(z.begin(), z.end(), k)) << k << ": " << c.m << "," << c.n;
        }
    }
}

TEST(TailSigns, DisplayedTuples) {
    struct Case {
        std::size_t m, n, count;
        const char* signs;
    };
    const Case cases[] = {
        {3, 5, 6, "-0++--"},       {7, 10, 6, "-0++--"},       {30, 36, 6, "+0--++"},
        {1, 7, 6, "+0----"},       {715, 806, 6, "+0----"},    {7476, 7567, 6, "+0--++"},
        {3, 7, 7, "-0++---"},      {14, 22, 7, "+0--+++"},     {1, 9, 7, "+0-----"},
        {28, 39, 7, "+0--+++"},    {3, 14, 7, "+0-----"},      {22, 45, 7, "-0+++++"},
        {133, 156, 7, "-0++---"},
    };
    for (const auto& c : cases) {
        EXPECT_EQ(tail_signs(c.m, c.n, c.count).str(), c.signs) << c.m << "," << c.n;
    }
}

TEST(TailSigns, AgreesWithExpansion) {
    for (std::size_t m = 0; m <= 20; ++m) {
        for (std::size_t n = 0; n <= 20; ++n) {
            if (m + n == 0) continue;
            const std::string full = sigma_of(m, n).str();
            const std::size_t count = std::min<std::size_t>(7, m + n + 1);
            ASSERT_EQ(tail_signs(m, n, count).str(), full.substr(full.size() - count)) << m << "," << n;
        }
    }
    EXPECT_THROW(tail_signs(2, 3, 0), DomainError);
    EXPECT_THROW(tail_signs(2, 3, 7), DomainError);
}

TEST(LocusRow, PredictedMatches) {
    const LocusRow row = locus_row(5, 62);
    EXPECT_EQ(row.sigma, "S22,0,5,0,5,5,0,5,0,22");
    ASSERT_TRUE(row.predicted);
    EXPECT_TRUE(row.matches());
    EXPECT_FALSE(locus_row(7, 9).predicted.has_value());
}
