#include "descartes/vanishing.hpp"

#include <algorithm>
#include <thread>

#include "descartes/errors.hpp"
#include "descartes/exact_poly.hpp"

namespace descartes {

namespace {

mpz_class mpz_from(std::size_t v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

std::size_t to_size(const mpz_class& v) {
    std::size_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

// Adds (base +- root)/2 to out when it is an integer in [0, degree].
void add_half_pair(std::set<std::size_t>& out, const mpz_class& base, const mpz_class& root,
                   std::size_t degree) {
    for (const mpz_class& twice : {mpz_class(base + root), mpz_class(base - root)}) {
        if (sgn(twice) < 0 || mpz_odd_p(twice.get_mpz_t())) continue;
        const mpz_class j = twice / 2;
        if (j <= mpz_from(degree)) out.insert(to_size(j));
    }
}

// Radical families of m = 4 and m = 5:
// j = (n + m +- sqrt(+-outer + lin))/2, outer = sqrt(quad).
void add_radical_family(std::set<std::size_t>& out, std::size_t m, std::size_t n, const mpz_class& outer,
                        const mpz_class& lin) {
    const mpz_class base = mpz_from(n + m);
    for (int sign : {+1, -1}) {
        const mpz_class radicand = lin + sign * outer;
        if (auto root = exact_sqrt(radicand)) add_half_pair(out, base, *root, m + n);
    }
}

SignTriple triple(Sign a, Sign b, Sign c) { return SignTriple{a, b, c}; }

std::set<SignTriple> with_negations(std::initializer_list<SignTriple> base) {
    std::set<SignTriple> out;
    for (const auto& t : base) {
        out.insert(t);
        out.insert(SignTriple{-t[0], -t[1], -t[2]});
    }
    return out;
}

void scan_triples(const SignPattern& pat, TripleCensus& census) {
    for (std::size_t i = 2; i < pat.size(); ++i) {
        const SignTriple t{pat[i - 2], pat[i - 1], pat[i]};
        census.seen.insert(t);
        if (impossible_triples().contains(t)) census.forbidden_hits.insert(t);
    }
}

}  // namespace

ZeroLocus zero_positions(std::size_t m, std::size_t n) {
    if (m + n < 1) throw DomainError("zero_positions: m + n must be at least 1");
    const IntPolynomial p = build_pmn(m, n);
    ZeroLocus out{m, n, {}};
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        if (sgn(p[j]) == 0) out.positions.push_back(j);
    }
    return out;
}

mpz_class isqrt(const mpz_class& v) {
    if (sgn(v) < 0) throw DomainError("isqrt of a negative number");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

std::optional<mpz_class> exact_sqrt(const mpz_class& v) {
    if (sgn(v) < 0) return std::nullopt;
    const mpz_class r = isqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
}

PredictorParams predictor_params(std::size_t m, std::size_t n) {
    PredictorParams p;
    const mpz_class nn = mpz_from(n);
    switch (m) {
        case 1: p.family = PredictorFamily::M1; break;
        case 2:
            p.family = PredictorFamily::M2;
            p.nu = to_size(isqrt(nn + 2));
            break;
        case 3:
            p.family = PredictorFamily::M3;
            p.mu = to_size(isqrt(3 * nn + 7));
            break;
        case 4:
            p.family = PredictorFamily::M4;
            p.theta = exact_sqrt(6 * nn * nn + 30 * nn + 40);
            if (p.theta) {
                p.radicands[0] = *p.theta + 3 * nn + 8;
                p.radicands[1] = -*p.theta + 3 * nn + 8;
            }
            break;
        case 5:
            p.family = PredictorFamily::M5;
            p.chi = exact_sqrt(10 * nn * nn + 50 * nn + 76);
            if (p.chi) {
                p.radicands[0] = *p.chi + 5 * nn + 15;
                p.radicands[1] = -*p.chi + 5 * nn + 15;
            }
            break;
        default:
            throw UnsupportedError("no closed-form predictor for m = " + std::to_string(m));
    }
    return p;
}

std::vector<std::size_t> predict_zeros_m(std::size_t m, std::size_t n) {
    if (m < 1 || m > 5) throw UnsupportedError("no closed-form predictor for m = " + std::to_string(m));
    if (n < m) throw DomainError("predict_zeros_m: requires n >= m");

    const mpz_class nn = mpz_from(n);
    const std::size_t degree = m + n;
    std::set<std::size_t> out;

    // m odd and n odd: the middle coefficient vanishes
    if (m % 2 == 1 && n % 2 == 1) out.insert(degree / 2);

    switch (m) {
        case 1: break;
        case 2:
            if (auto root = exact_sqrt(nn + 2)) add_half_pair(out, nn + 2, *root, degree);
            break;
        case 3:
            if (auto root = exact_sqrt(3 * nn + 7)) add_half_pair(out, nn + 3, *root, degree);
            break;
        case 4:
            if (auto theta = exact_sqrt(6 * nn * nn + 30 * nn + 40)) {
                add_radical_family(out, 4, n, *theta, 3 * nn + 8);
            }
            break;
        case 5:
            if (auto chi = exact_sqrt(10 * nn * nn + 50 * nn + 76)) {
                add_radical_family(out, 5, n, *chi, 5 * nn + 15);
            }
            break;
    }
    return {out.begin(), out.end()};
}

SigmaNotation sigma_formula_p2(std::size_t n) {
    if (n < 2) throw DomainError("sigma_formula_p2: requires n >= 2");
    const std::size_t nu = to_size(isqrt(mpz_from(n + 2)));
    if (nu * nu == n + 2) {
        const std::size_t outer = (nu - 1) * nu / 2;
        return SigmaNotation({outer, 0, nu - 1, 0, outer});
    }
    const std::size_t half = (n - nu) / 2;
    if ((n - nu) % 2 == 0) return SigmaNotation({half + 1, nu + 1, half + 1});
    return SigmaNotation({half + 2, nu, half + 2});
}

SigmaNotation sigma_formula_p3(std::size_t n) {
    if (n < 3) throw DomainError("sigma_formula_p3: requires n >= 3");
    const std::size_t mu = to_size(isqrt(mpz_from(3 * n + 7)));
    const bool mu_even = mu % 2 == 0;

    if (mu * mu == 3 * n + 7) {
        const std::size_t gamma = (mu - 1) * (mu - 2) / 6;
        if (mu % 6 == 1 || mu % 6 == 5) {
            return SigmaNotation({gamma, 0, (mu - 1) / 2, (mu - 1) / 2, 0, gamma});
        }
        return SigmaNotation({gamma, 0, mu / 2 - 1, 0, mu / 2 - 1, 0, gamma});
    }

    if (n % 2 == 1) {
        const std::size_t rho = mu_even ? (n + 3 - mu) / 2 : (n + 4 - mu) / 2;
        const std::size_t kappa = mu_even ? mu / 2 : (mu - 1) / 2;
        return SigmaNotation({rho, kappa, 0, kappa, rho});
    }
    const std::size_t rho = mu_even ? (n + 4 - mu) / 2 : (n + 3 - mu) / 2;
    const std::size_t kappa = mu_even ? mu / 2 : (mu + 1) / 2;
    return SigmaNotation({rho, kappa, kappa, rho});
}

std::vector<std::size_t> sequence_S(std::size_t count) {
    if (count < 1) throw DomainError("sequence_S: count must be at least 1");
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t mu = 4; out.size() < count; ++mu) {
        if (mu % 3 == 0) continue;
        out.push_back((mu * mu - 7) / 3);
    }
    return out;
}

std::vector<XkCouple> xk_vanishing_couples(std::size_t k, std::size_t s_max) {
    if (k < 2 || k > 5) throw UnsupportedError("xk_vanishing_couples: k must be in 2..5");
    if (s_max < 1) throw DomainError("xk_vanishing_couples: s_max must be at least 1");

    std::vector<XkCouple> out;
    auto emit = [&](const mpz_class& d, std::size_t s, int root_sign) {
        const mpz_class ss = mpz_from(s);
        if (d < k || d < ss) return;
        const mpz_class twice_m = d - ss;
        if (mpz_odd_p(twice_m.get_mpz_t())) return;
        out.push_back({to_size(twice_m / 2), to_size((d + ss) / 2), s, root_sign});
    };

    for (std::size_t s = 1; s <= s_max; ++s) {
        const mpz_class ss = mpz_from(s);
        const mpz_class s2 = ss * ss;
        switch (k) {
            case 2:
                // (n-m)^2 = m+n
                emit(s2, s, +1);
                break;
            case 3:
                // 3(m+n) = (n-m)^2 + 2
                if (s % 3 != 0) emit((s2 + 2) / 3, s, +1);
                break;
            case 4: {
                // d = s^2 + 1 +- sqrt(1 + 2(s^4 - s^2)/3)
                const mpz_class radicand = 1 + 2 * (s2 * s2 - s2) / 3;
                if (auto root = exact_sqrt(radicand)) {
                    emit(s2 + 1 + *root, s, +1);
                    emit(s2 + 1 - *root, s, -1);
                }
                break;
            }
            case 5: {
                // d = (5s^2 + 25 +- sqrt(10s^4 - 50s^2 + 265))/15
                const mpz_class radicand = 10 * s2 * s2 - 50 * s2 + 265;
                if (auto root = exact_sqrt(radicand)) {
                    for (int sign : {+1, -1}) {
                        const mpz_class num = 5 * s2 + 25 + sign * *root;
                        if (sgn(num) > 0 && mpz_divisible_ui_p(num.get_mpz_t(), 15)) emit(num / 15, s, sign);
                    }
                }
                break;
            }
        }
    }
    return out;
}

SignPattern tail_signs(std::size_t m, std::size_t n, std::size_t count) {
    if (count < 1 || count > m + n + 1) throw DomainError("tail_signs: count out of range");
    std::vector<Sign> out;
    out.reserve(count);
    for (std::size_t j = count; j-- > 0;) out.push_back(sign_of(pmn_coefficient(m, n, j)));
    return SignPattern(std::move(out));
}

std::string triple_str(const SignTriple& t) {
    return {'(', to_char(t[0]), ',', to_char(t[1]), ',', to_char(t[2]), ')'};
}

const std::set<SignTriple>& possible_triples() {
    static const std::set<SignTriple> set = [] {
        constexpr Sign P = Sign::Plus, M = Sign::Minus, Z = Sign::Zero;
        return with_negations({triple(P, P, P), triple(P, M, M), triple(P, P, M), triple(Z, P, P),
                               triple(P, P, Z), triple(P, Z, M)});
    }();
    return set;
}

const std::set<SignTriple>& impossible_triples() {
    static const std::set<SignTriple> set = [] {
        constexpr Sign P = Sign::Plus, M = Sign::Minus, Z = Sign::Zero;
        return with_negations({triple(P, M, P), triple(Z, P, Z), triple(Z, P, M), triple(P, M, Z)});
    }();
    return set;
}

TripleCensus triple_census(std::size_t max_degree, bool include_equal, unsigned workers) {
    if (max_degree < 3) throw DomainError("triple_census: max_degree must be at least 3");
    check_degree(max_degree);
    workers = std::max(1u, workers);

    std::vector<TripleCensus> partial(workers);
    auto work = [&](unsigned w) {
        for (std::size_t m = 1 + w; 2 * m <= max_degree; m += workers) {
            for (std::size_t n = include_equal ? m : m + 1; m + n <= max_degree; ++n) {
                scan_triples(sign_pattern_of(build_pmn(m, n)), partial[w]);
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }

    TripleCensus out;
    for (auto& p : partial) {
        out.seen.merge(p.seen);
        out.forbidden_hits.merge(p.forbidden_hits);
    }
    return out;
}

bool lemma_mb_check(const SignPattern& pat) {
    for (std::size_t i = 0; i < pat.size(); ++i) {
        if (pat[i] != Sign::Zero) continue;
        if (i == 0 || i + 1 == pat.size()) return false;
        if (pat[i - 1] == Sign::Zero || pat[i + 1] == Sign::Zero) return false;
        if (pat[i - 1] == pat[i + 1]) return false;
    }
    return true;
}

LocusRow locus_row(std::size_t m, std::size_t n) {
    LocusRow row;
    const IntPolynomial p = build_pmn(m, n);
    row.locus = {m, n, {}};
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        if (sgn(p[j]) == 0) row.locus.positions.push_back(j);
    }
    row.sigma = sigma_encode(normalize_monic(sign_pattern_of(p))).str();
    if (m >= 1 && m <= 5 && n >= m) row.predicted = predict_zeros_m(m, n);
    return row;
}

}  // namespace descartes
