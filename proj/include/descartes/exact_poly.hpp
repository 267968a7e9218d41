#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "descartes/polynomial.hpp"

namespace descartes {

/// Default bound on m + n for anything that expands P_{m,n}.
inline constexpr std::size_t kDefaultMaxDegree = 100000;

/// Current degree guard: DESCARTES_LAB_MAX_DEGREE when set to a positive
/// integer, kDefaultMaxDegree otherwise.
std::size_t max_degree_guard();

/// Throws ResourceError when degree exceeds max_degree_guard().
void check_degree(std::size_t degree);

/// Multiset of nonzero exact rational roots; multiplicity is repetition.
class RootMultiset {
public:
    RootMultiset() = default;
    explicit RootMultiset(std::vector<mpq_class> roots);

    const std::vector<mpq_class>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    std::size_t positive_count() const;
    std::size_t negative_count() const;

private:
    std::vector<mpq_class> roots_;
};

/// Exact coefficients of (x-1)^m (x+1)^n.
IntPolynomial build_pmn(std::size_t m, std::size_t n);

/// Coefficient of x^j in (x-1)^m (x+1)^n, computed from binomial sums
/// without expanding the whole polynomial.
mpz_class pmn_coefficient(std::size_t m, std::size_t n, std::size_t j);

/// Monic prod (x - r) over the roots, expanded over Q.
RatPolynomial poly_from_roots(const RootMultiset& roots);

/// prod (den(r) x - num(r)): an integer polynomial with positive leading
/// coefficient and the same roots (hence the same sign pattern) as
/// poly_from_roots.
IntPolynomial primitive_from_roots(const RootMultiset& roots);

/// True iff a_j = (-1)^m a_{d-j} for every j.
bool reciprocal_check(const IntPolynomial& p, std::size_t m);

/// "num/den" with den > 0, always including the denominator.
std::string to_fraction_string(const mpq_class& q);

/// Parses "num/den" or a bare integer; throws DomainError on bad input.
mpq_class parse_fraction(const std::string& text);

}  // namespace descartes
