#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact scalar.
 *
 * coeffs[j] is the coefficient of x^j. Storage is normalized so that the
 * leading coefficient is nonzero; the zero polynomial is stored as {0}.
 * Scalar is expected to be mpz_class or mpq_class, but any exact ring type
 * with the usual operators and a sgn() overload works.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace descartes {

template <typename Scalar>
class Polynomial {
public:
    using scalar_type = Scalar;

    Polynomial() : coeffs_{Scalar(0)} {}
    Polynomial(std::initializer_list<Scalar> cs) : coeffs_(cs) { normalize(); }
    explicit Polynomial(std::vector<Scalar> cs) : coeffs_(std::move(cs)) { normalize(); }

    static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](std::size_t j) const { return coeffs_[j]; }
    const Scalar& leading() const { return coeffs_.back(); }

    // Coefficient of x^j, zero outside the stored range.
    Scalar coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Scalar(0); }

    Scalar evaluate(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    // In-place multiplication by (x + c).
    Polynomial& mul_linear(const Scalar& c) {
        if (is_zero()) return *this;
        coeffs_.push_back(Scalar(0));
        for (std::size_t j = coeffs_.size() - 1; j > 0; --j) {
            coeffs_[j] = coeffs_[j - 1] + c * coeffs_[j];
        }
        coeffs_[0] *= c;
        return *this;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Scalar> out(a.coeffs_);
        for (auto& c : out) c = -c;
        return Polynomial(std::move(out));
    }

private:
    void normalize() {
        while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
        if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
    }

    std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

}  // namespace descartes
