#pragma once

/**
 * @file realization.hpp
 * @brief Exact realization of couples (sigma(P_{m,n}), order of moduli).
 *
 * For an order word with m letters P and n letters N, the letter at rank r
 * (1-based, smallest modulus first) becomes the root 1 + eps*r when it is a
 * P and -1 - eps*r when it is an N. The moduli then realize the order for
 * every eps > 0, and for eps small enough the expanded polynomial has the
 * sign pattern of P_{m,n}. eps is searched over 1/2, 1/4, ..., 2^-64.
 */

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "descartes/exact_poly.hpp"
#include "descartes/patterns.hpp"

namespace descartes {

inline constexpr unsigned kMaxEpsilonExponent = 64;
inline constexpr std::size_t kDefaultOrderBudget = 1000000;

struct RealizationWitness {
    std::size_t m = 0;
    std::size_t n = 0;
    OrderOfModuli order;
    mpq_class epsilon;
    unsigned epsilon_exponent = 0;  // epsilon = 2^-epsilon_exponent
    std::vector<mpq_class> alphas;  // offsets of the positive roots, by rank
    std::vector<mpq_class> betas;   // offsets of the negative roots, by rank
    RootMultiset roots;             // 1 + eps*alpha_i, then -1 - eps*beta_j
    RatPolynomial polynomial;
    bool pattern_ok = false;
    bool order_ok = false;
};

/// Roots 1 + eps*alpha and -1 - eps*beta for the rank assignment of `order`.
RootMultiset perturbed_roots(const OrderOfModuli& order, const mpq_class& epsilon);

/// Throws UnsupportedError when sigma(P_{m,n}) has a zero, DomainError when
/// the order is not compatible (m letters P, n letters N), FailureError when
/// no eps down to 2^-64 works.
RealizationWitness realize_couple(std::size_t m, std::size_t n, const OrderOfModuli& order);

/// Recomputes polynomial, pattern and order from the witness roots alone.
bool verify_witness(const RealizationWitness& w, const SignPattern& target_pattern,
                    const OrderOfModuli& target_order);

/// All words with `p` letters P and `n` letters N in lexicographic order (P < N).
std::vector<OrderOfModuli> compatible_orders(std::size_t p, std::size_t n);

struct UniversalityCertificate {
    std::size_t m = 0;
    std::size_t n = 0;
    SignPattern pattern;
    std::vector<RealizationWitness> witnesses;  // one per order, lexicographic
    std::size_t realized = 0;
    bool all_realized() const { return realized == witnesses.size() && !witnesses.empty(); }
};

/// Realizes sigma(P_{m,n}) with every compatible order. Throws ResourceError
/// when C(m+n, m) exceeds the budget and FailureError (naming the order) when
/// any realization fails.
UniversalityCertificate universality_certificate(std::size_t m, std::size_t n,
                                                 std::size_t budget = kDefaultOrderBudget,
                                                 unsigned workers = 1);

/// True iff the construction for (m, n, order) also passes at exponents
/// first+1 .. first+extra.
bool monotone_below(std::size_t m, std::size_t n, const OrderOfModuli& order, unsigned first, unsigned extra);

}  // namespace descartes
