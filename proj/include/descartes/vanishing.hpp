#pragma once

/**
 * @file vanishing.hpp
 * @brief Vanishing coefficients of P_{m,n} = (x-1)^m (x+1)^n.
 *
 * zero_positions() is the exact oracle (full expansion). Everything else is
 * a closed-form predictor that is checked against it in the tests: the
 * m = 1..5 zero-position families, the Σ-notation formulas for m = 2, 3,
 * the sequence of n = (μ²-7)/3 and the (m, n) couples for which the
 * coefficient of x^k (k = 2..5) vanishes.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "descartes/patterns.hpp"

namespace descartes {

struct ZeroLocus {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::size_t> positions;  // powers j with vanishing coefficient, ascending
};

ZeroLocus zero_positions(std::size_t m, std::size_t n);

/// Exact floor(sqrt(v)) for v >= 0.
mpz_class isqrt(const mpz_class& v);
/// sqrt(v) when v is a nonnegative perfect square.
std::optional<mpz_class> exact_sqrt(const mpz_class& v);

enum class PredictorFamily { M1, M2, M3, M4, M5, X2, X3, X4, X5 };

/// Parameters of the closed-form families. Entries are set only when they
/// are defined for the given input.
struct PredictorParams {
    PredictorFamily family = PredictorFamily::M1;
    std::optional<std::size_t> nu;     // m = 2: nu^2 <= n+2 < (nu+1)^2
    std::optional<std::size_t> mu;     // m = 3: mu^2 <= 3n+7 < (mu+1)^2
    std::optional<std::size_t> s;      // x^k families: s = n - m
    std::optional<mpz_class> theta;    // m = 4: sqrt(6n^2+30n+40) when exact
    std::optional<mpz_class> chi;      // m = 5: sqrt(10n^2+50n+76) when exact
    // m = 4, 5: the two inner radicands (+root, -root) when the outer root is exact
    std::array<std::optional<mpz_class>, 2> radicands;
};

PredictorParams predictor_params(std::size_t m, std::size_t n);

/// Zero positions of P_{m,n} predicted from the closed forms, m in 1..5,
/// n >= m. Throws UnsupportedError for other m, DomainError for n < m.
std::vector<std::size_t> predict_zeros_m(std::size_t m, std::size_t n);

SigmaNotation sigma_formula_p2(std::size_t n);
SigmaNotation sigma_formula_p3(std::size_t n);

/// First `count` values of (mu^2 - 7)/3, mu >= 4, 3 does not divide mu.
std::vector<std::size_t> sequence_S(std::size_t count);

struct XkCouple {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t s = 0;
    int root_sign = +1;  // sign chosen in front of the radical (k = 4, 5); +1 otherwise
    friend bool operator==(const XkCouple&, const XkCouple&) = default;
};

/// Couples (m, n), m < n, m + n >= k, with a vanishing coefficient of x^k,
/// generated from s = n - m = 1..s_max. Ordered by s, '+' before '-'.
std::vector<XkCouple> xk_vanishing_couples(std::size_t k, std::size_t s_max);

/// Last `count` entries of sigma(P_{m,n}) (signs of x^{count-1}, ..., x^0),
/// computed without a full expansion.
SignPattern tail_signs(std::size_t m, std::size_t n, std::size_t count);

using SignTriple = std::array<Sign, 3>;

std::string triple_str(const SignTriple& t);

/// The 12 triples that occur in some sigma(P_{m,n}), m < n.
const std::set<SignTriple>& possible_triples();
/// The 8 triples that never occur.
const std::set<SignTriple>& impossible_triples();

struct TripleCensus {
    std::set<SignTriple> seen;
    std::set<SignTriple> forbidden_hits;
};

/// Scans consecutive sign triples of sigma(P_{m,n}) for 1 <= m < n,
/// m + n <= max_degree (or m <= n with include_equal).
TripleCensus triple_census(std::size_t max_degree, bool include_equal = false, unsigned workers = 1);

/// No two consecutive zeros, and every zero flanked by opposite signs.
bool lemma_mb_check(const SignPattern& pat);

/// One row of a vanishing-locus table.
struct LocusRow {
    ZeroLocus locus;
    std::string sigma;                         // Σ-notation of sigma(P_{m,n})
    std::optional<std::vector<std::size_t>> predicted;  // for m in 1..5, n >= m
    bool matches() const { return !predicted || *predicted == locus.positions; }
};

LocusRow locus_row(std::size_t m, std::size_t n);

}  // namespace descartes
