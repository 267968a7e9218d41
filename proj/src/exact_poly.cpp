#include "descartes/exact_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "descartes/errors.hpp"

namespace descartes {

std::size_t max_degree_guard() {
    if (const char* env = std::getenv("DESCARTES_LAB_MAX_DEGREE")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxDegree;
}

void check_degree(std::size_t degree) {
    const std::size_t limit = max_degree_guard();
    if (degree > limit) {
        throw ResourceError("degree " + std::to_string(degree) + " exceeds the limit " +
                            std::to_string(limit) + " (set DESCARTES_LAB_MAX_DEGREE to raise it)");
    }
}

RootMultiset::RootMultiset(std::vector<mpq_class> roots) : roots_(std::move(roots)) {
    for (auto& r : roots_) {
        r.canonicalize();
        if (sgn(r) == 0) throw DomainError("root multiset may not contain zero");
    }
}

std::size_t RootMultiset::positive_count() const {
    return static_cast<std::size_t>(
        std::count_if(roots_.begin(), roots_.end(), [](const mpq_class& r) { return sgn(r) > 0; }));
}

std::size_t RootMultiset::negative_count() const { return roots_.size() - positive_count(); }

IntPolynomial build_pmn(std::size_t m, std::size_t n) {
    check_degree(m + n);
    const std::size_t k = std::min(m, n);
    const std::size_t excess = std::max(m, n) - k;

    std::vector<mpz_class> a(m + n + 1, 0);

    // (x^2 - 1)^k: coefficient of x^{2i} is (-1)^{k-i} C(k, i).
    mpz_class binom = 1;
    for (std::size_t i = 0; i <= k; ++i) {
        a[2 * i] = ((k - i) % 2 == 0) ? binom : mpz_class(-binom);
        if (i < k) {
            binom *= static_cast<unsigned long>(k - i);
            binom /= static_cast<unsigned long>(i + 1);
        }
    }

    // Remaining linear factors, applied in place; top is the current degree.
    std::size_t top = 2 * k;
    const bool plus = n > m;
    for (std::size_t step = 0; step < excess; ++step) {
        ++top;
        for (std::size_t j = top; j > 0; --j) {
            if (plus) {
                mpz_add(a[j].get_mpz_t(), a[j].get_mpz_t(), a[j - 1].get_mpz_t());
            } else {
                mpz_sub(a[j].get_mpz_t(), a[j - 1].get_mpz_t(), a[j].get_mpz_t());
            }
        }
        if (!plus) a[0] = -a[0];
    }
    return IntPolynomial(std::move(a));
}

mpz_class pmn_coefficient(std::size_t m, std::size_t n, std::size_t j) {
    if (j > m + n) return 0;
    mpz_class sum = 0;
    mpz_class bm, bn;
    const std::size_t lo = j > n ? j - n : 0;
    const std::size_t hi = std::min(m, j);
    for (std::size_t i = lo; i <= hi; ++i) {
        mpz_bin_uiui(bm.get_mpz_t(), m, i);
        mpz_bin_uiui(bn.get_mpz_t(), n, j - i);
        if ((m - i) % 2 == 0) {
            sum += bm * bn;
        } else {
            sum -= bm * bn;
        }
    }
    return sum;
}

RatPolynomial poly_from_roots(const RootMultiset& roots) {
    check_degree(roots.size());
    RatPolynomial p = RatPolynomial::constant(1);
    for (const auto& r : roots.roots()) p.mul_linear(-r);
    return p;
}

IntPolynomial primitive_from_roots(const RootMultiset& roots) {
    check_degree(roots.size());
    std::vector<mpz_class> a{1};
    a.reserve(roots.size() + 1);
    for (const auto& r : roots.roots()) {
        const mpz_class& num = r.get_num();
        const mpz_class& den = r.get_den();
        // multiply by (den x - num)
        a.push_back(0);
        for (std::size_t j = a.size() - 1; j > 0; --j) {
            a[j] = den * a[j - 1] - num * a[j];
        }
        a[0] = -num * a[0];
    }
    return IntPolynomial(std::move(a));
}

bool reciprocal_check(const IntPolynomial& p, std::size_t m) {
    if (p.is_zero()) throw DomainError("reciprocal_check: zero polynomial");
    const auto& a = p.coeffs();
    const std::size_t d = p.degree();
    const bool negate = (m % 2) == 1;
    for (std::size_t j = 0; j <= d; ++j) {
        const mpz_class& mirror = a[d - j];
        if (negate ? a[j] != -mirror : a[j] != mirror) return false;
    }
    return true;
}

std::string to_fraction_string(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_fraction(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw DomainError("not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace descartes
