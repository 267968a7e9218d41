#pragma once

/**
 * @file patterns.hpp
 * @brief Sign patterns, Σ-notation, change-preservation words and orders of moduli.
 *
 * Orientation conventions:
 *  - a sign pattern lists the coefficient signs from the leading coefficient
 *    down to the constant term;
 *  - an order of moduli lists P/N letters from the smallest modulus to the
 *    largest.
 *
 * Text forms are whitespace-free: patterns over "+-0" ("++0--"), Σ-notation
 * as "S2,0,3,1,0,2", change-preservation words over "cp", orders over "PN".
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descartes/exact_poly.hpp"
#include "descartes/polynomial.hpp"

namespace descartes {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<signed char>(s)); }
char to_char(Sign s);

template <typename Scalar>
Sign sign_of(const Scalar& v) {
    const int s = sgn(v);
    return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

/// Generalized sign pattern (ZERO entries allowed).
class SignPattern {
public:
    SignPattern() = default;
    explicit SignPattern(std::vector<Sign> signs);

    /// Parses a string over "+-0"; throws DomainError otherwise.
    static SignPattern parse(std::string_view text);

    const std::vector<Sign>& signs() const { return signs_; }
    std::size_t size() const { return signs_.size(); }
    std::size_t degree() const { return signs_.empty() ? 0 : signs_.size() - 1; }
    Sign operator[](std::size_t i) const { return signs_[i]; }

    bool has_zero() const;
    std::size_t zero_count() const;
    std::string str() const;

    friend bool operator==(const SignPattern&, const SignPattern&) = default;
    friend auto operator<=>(const SignPattern&, const SignPattern&) = default;

private:
    std::vector<Sign> signs_;
};

/// Run-length form: positive run lengths with 0 marking a vanishing
/// coefficient between two runs. Runs alternate sign starting from PLUS.
class SigmaNotation {
public:
    SigmaNotation() = default;
    /// Throws DomainError unless the tokens form a valid run structure:
    /// nonempty, first and last tokens positive, no two adjacent zeros.
    explicit SigmaNotation(std::vector<std::size_t> tokens);

    /// Parses "S2,0,3,1,0,2".
    static SigmaNotation parse(std::string_view text);

    const std::vector<std::size_t>& tokens() const { return tokens_; }
    std::string str() const;

    friend bool operator==(const SigmaNotation&, const SigmaNotation&) = default;

private:
    std::vector<std::size_t> tokens_;
};

/// Word over {c, p}; defined for ZERO-free patterns only.
class ChangePreservation {
public:
    explicit ChangePreservation(std::string letters);
    const std::string& str() const { return letters_; }
    std::size_t changes() const;
    std::size_t preservations() const;

    friend bool operator==(const ChangePreservation&, const ChangePreservation&) = default;

private:
    std::string letters_;
};

/// Word over {P, N}; leftmost letter belongs to the smallest modulus.
class OrderOfModuli {
public:
    OrderOfModuli() = default;
    /// Throws DomainError for an empty word or a letter outside {P, N}.
    explicit OrderOfModuli(std::string letters);

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    std::size_t p_count() const;
    std::size_t n_count() const;

    friend bool operator==(const OrderOfModuli&, const OrderOfModuli&) = default;
    friend auto operator<=>(const OrderOfModuli&, const OrderOfModuli&) = default;

private:
    std::string letters_;
};

struct Couple {
    SignPattern pattern;
    OrderOfModuli order;

    friend bool operator==(const Couple&, const Couple&) = default;
    friend auto operator<=>(const Couple&, const Couple&) = default;
};

/// "pattern|order", e.g. "++--|NPN".
std::string couple_key(const Couple& c);

struct DescartesCounts {
    std::size_t c_tilde = 0;  // sign changes after erasing zeros
    std::size_t p_tilde = 0;  // adjacent equal-sign pairs
    std::size_t c_star = 0;   // adjacent opposite-sign pairs
    std::size_t p_star = 0;   // same as p_tilde
    std::size_t lambda = 0;   // number of ZERO entries

    friend bool operator==(const DescartesCounts&, const DescartesCounts&) = default;
};

/// Coefficient signs, leading first. Throws DomainError on the zero polynomial.
SignPattern sign_pattern_of(const IntPolynomial& p);
SignPattern sign_pattern_of(const RatPolynomial& p);

/// Negates a pattern whose first nonzero sign is MINUS.
SignPattern normalize_monic(const SignPattern& pat);

SigmaNotation sigma_encode(const SignPattern& pat);
SignPattern sigma_decode(const SigmaNotation& s);

ChangePreservation change_preservation(const SignPattern& pat);

DescartesCounts descartes_counts(const SignPattern& pat);

OrderOfModuli canonical_order(const SignPattern& pat);

/// True iff none of ++--, --++, +--+, -++- occurs.
bool is_canonical_pattern(const SignPattern& pat);

/// The unique pattern of a rigid order (all-N, all-P or fully alternating),
/// nullopt otherwise.
std::optional<SignPattern> rigid_order_pattern(const OrderOfModuli& order);

bool is_compatible(const Couple& c);

/// Ascending-modulus P/N word; throws DomainError on a repeated modulus.
OrderOfModuli order_of_moduli(const RootMultiset& roots);

}  // namespace descartes
