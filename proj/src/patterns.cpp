#include "descartes/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "descartes/errors.hpp"

namespace descartes {

namespace {

template <typename Scalar>
SignPattern pattern_from_coeffs(const Polynomial<Scalar>& p) {
    if (p.is_zero()) throw DomainError("sign pattern of the zero polynomial");
    const auto& a = p.coeffs();
    std::vector<Sign> out;
    out.reserve(a.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(sign_of(*it));
    return SignPattern(std::move(out));
}

void require_zero_free(const SignPattern& pat, const char* what) {
    if (pat.has_zero()) throw DomainError(std::string(what) + ": pattern contains a zero");
}

}  // namespace

char to_char(Sign s) {
    switch (s) {
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
        case Sign::Zero: return '0';
    }
    return '?';
}

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw DomainError("sign pattern must have at least one entry");
}

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<Sign> out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '+': out.push_back(Sign::Plus); break;
            case '-': out.push_back(Sign::Minus); break;
            case '0': out.push_back(Sign::Zero); break;
            default: throw DomainError("invalid sign character '" + std::string(1, ch) + "'");
        }
    }
    return SignPattern(std::move(out));
}

bool SignPattern::has_zero() const {
    return std::find(signs_.begin(), signs_.end(), Sign::Zero) != signs_.end();
}

std::size_t SignPattern::zero_count() const {
    return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), Sign::Zero));
}

std::string SignPattern::str() const {
    std::string out;
    out.reserve(signs_.size());
    for (Sign s : signs_) out.push_back(to_char(s));
    return out;
}

SigmaNotation::SigmaNotation(std::vector<std::size_t> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw DomainError("empty sigma notation");
    if (tokens_.front() == 0 || tokens_.back() == 0) {
        throw DomainError("sigma notation must start and end with a positive run");
    }
    for (std::size_t i = 1; i < tokens_.size(); ++i) {
        if (tokens_[i] == 0 && tokens_[i - 1] == 0) {
            throw DomainError("sigma notation has two adjacent zero markers");
        }
    }
}

SigmaNotation SigmaNotation::parse(std::string_view text) {
    if (text.empty() || text.front() != 'S') throw DomainError("sigma notation must start with 'S'");
    text.remove_prefix(1);
    std::vector<std::size_t> tokens;
    while (true) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data()) throw DomainError("malformed sigma notation");
        tokens.push_back(value);
        text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
        if (text.empty()) break;
        if (text.front() != ',') throw DomainError("malformed sigma notation");
        text.remove_prefix(1);
    }
    return SigmaNotation(std::move(tokens));
}

std::string SigmaNotation::str() const {
    std::string out = "S";
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(tokens_[i]);
    }
    return out;
}

ChangePreservation::ChangePreservation(std::string letters) : letters_(std::move(letters)) {
    if (letters_.find_first_not_of("cp") != std::string::npos) {
        throw DomainError("change-preservation word must be over {c, p}");
    }
}

std::size_t ChangePreservation::changes() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'c'));
}

std::size_t ChangePreservation::preservations() const { return letters_.size() - changes(); }

OrderOfModuli::OrderOfModuli(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw DomainError("order of moduli must be nonempty");
    if (letters_.find_first_not_of("PN") != std::string::npos) {
        throw DomainError("order of moduli must be over {P, N}");
    }
}

std::size_t OrderOfModuli::p_count() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'P'));
}

std::size_t OrderOfModuli::n_count() const { return letters_.size() - p_count(); }

std::string couple_key(const Couple& c) { return c.pattern.str() + "|" + c.order.str(); }

SignPattern sign_pattern_of(const IntPolynomial& p) { return pattern_from_coeffs(p); }
SignPattern sign_pattern_of(const RatPolynomial& p) { return pattern_from_coeffs(p); }

SignPattern normalize_monic(const SignPattern& pat) {
    const auto& s = pat.signs();
    auto first = std::find_if(s.begin(), s.end(), [](Sign x) { return x != Sign::Zero; });
    if (first == s.end() || *first == Sign::Plus) return pat;
    std::vector<Sign> out(s.size());
    std::transform(s.begin(), s.end(), out.begin(), [](Sign x) { return -x; });
    return SignPattern(std::move(out));
}

SigmaNotation sigma_encode(const SignPattern& pat) {
    const auto& s = pat.signs();
    if (s.front() != Sign::Plus) throw DomainError("sigma_encode: pattern must start with '+'");
    if (s.back() == Sign::Zero) throw DomainError("sigma_encode: pattern ends with a zero");

    std::vector<std::size_t> tokens;
    Sign current = Sign::Plus;
    std::size_t run = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == Sign::Zero) {
            // only representable between two runs of opposite sign
            if (s[i - 1] == Sign::Zero || s[i + 1] == Sign::Zero || s[i + 1] != -s[i - 1]) {
                throw DomainError("sigma_encode: zero not flanked by opposite signs");
            }
            tokens.push_back(run);
            tokens.push_back(0);
            run = 0;
            current = s[i + 1];
        } else if (s[i] == current) {
            ++run;
        } else {
            if (run > 0) tokens.push_back(run);
            current = s[i];
            run = 1;
        }
    }
    tokens.push_back(run);
    return SigmaNotation(std::move(tokens));
}

SignPattern sigma_decode(const SigmaNotation& s) {
    std::vector<Sign> out;
    Sign current = Sign::Plus;
    for (std::size_t k : s.tokens()) {
        if (k == 0) {
            out.push_back(Sign::Zero);
            continue;
        }
        out.insert(out.end(), k, current);
        current = -current;
    }
    return SignPattern(std::move(out));
}

ChangePreservation change_preservation(const SignPattern& pat) {
    require_zero_free(pat, "change_preservation");
    std::string letters;
    for (std::size_t i = 1; i < pat.size(); ++i) letters.push_back(pat[i] == pat[i - 1] ? 'p' : 'c');
    return ChangePreservation(std::move(letters));
}

DescartesCounts descartes_counts(const SignPattern& pat) {
    DescartesCounts out;
    Sign last_nonzero = Sign::Zero;
    for (std::size_t i = 0; i < pat.size(); ++i) {
        const Sign s = pat[i];
        if (s == Sign::Zero) {
            if (i > 0 && pat[i - 1] == Sign::Zero) {
                throw DomainError("descartes_counts: consecutive zeros");
            }
            ++out.lambda;
            continue;
        }
        if (last_nonzero != Sign::Zero && s != last_nonzero) ++out.c_tilde;
        if (i > 0 && pat[i - 1] != Sign::Zero) {
            if (pat[i - 1] == s) {
                ++out.p_star;
            } else {
                ++out.c_star;
            }
        }
        last_nonzero = s;
    }
    out.p_tilde = out.p_star;
    return out;
}

OrderOfModuli canonical_order(const SignPattern& pat) {
    require_zero_free(pat, "canonical_order");
    if (pat.size() < 2) throw DomainError("canonical_order: pattern of degree 0");
    std::string letters;
    for (std::size_t i = pat.size() - 1; i > 0; --i) letters.push_back(pat[i] == pat[i - 1] ? 'N' : 'P');
    return OrderOfModuli(std::move(letters));
}

bool is_canonical_pattern(const SignPattern& pat) {
    require_zero_free(pat, "is_canonical_pattern");
    if (pat.size() < 2) throw DomainError("is_canonical_pattern: pattern of degree 0");
    // forbidden quadruples are exactly cp-triples cpc and pcp
    const std::string cp = change_preservation(pat).str();
    return cp.find("cpc") == std::string::npos && cp.find("pcp") == std::string::npos;
}

std::optional<SignPattern> rigid_order_pattern(const OrderOfModuli& order) {
    const std::string& w = order.str();
    const std::size_t d = w.size();
    std::vector<Sign> out;
    out.reserve(d + 1);

    if (w.find('P') == std::string::npos) {
        out.assign(d + 1, Sign::Plus);
        return SignPattern(std::move(out));
    }
    if (w.find('N') == std::string::npos) {
        for (std::size_t i = 0; i <= d; ++i) out.push_back(i % 2 == 0 ? Sign::Plus : Sign::Minus);
        return SignPattern(std::move(out));
    }
    for (std::size_t i = 1; i < d; ++i) {
        if (w[i] == w[i - 1]) return std::nullopt;
    }
    // ...NPNP pairs with +--++--..., ...PNPN with ++--++...
    const std::size_t offset = w.back() == 'P' ? 1 : 0;
    for (std::size_t i = 0; i <= d; ++i) {
        out.push_back(((i + offset) / 2) % 2 == 0 ? Sign::Plus : Sign::Minus);
    }
    return SignPattern(std::move(out));
}

bool is_compatible(const Couple& c) {
    const std::size_t d = c.pattern.degree();
    if (c.order.size() != d) return false;
    std::size_t changes = 0;
    try {
        changes = descartes_counts(c.pattern).c_tilde;
    } catch (const DomainError&) {
        return false;
    }
    return c.order.p_count() == changes && c.order.n_count() == d - changes;
}

OrderOfModuli order_of_moduli(const RootMultiset& roots) {
    std::vector<mpq_class> sorted = roots.roots();
    std::sort(sorted.begin(), sorted.end(),
              [](const mpq_class& a, const mpq_class& b) { return abs(a) < abs(b); });
    std::string letters;
    letters.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && abs(sorted[i]) == abs(sorted[i - 1])) {
            throw DomainError("order_of_moduli: repeated modulus " + to_fraction_string(abs(sorted[i])));
        }
        letters.push_back(sgn(sorted[i]) > 0 ? 'P' : 'N');
    }
    return OrderOfModuli(std::move(letters));
}

}  // namespace descartes
