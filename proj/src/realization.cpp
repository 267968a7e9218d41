#include "descartes/realization.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "descartes/errors.hpp"

namespace descartes {

namespace {

mpq_class power_of_half(unsigned t) {
    mpq_class eps(1);
    mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), t);
    return eps;
}

SignPattern target_pattern(std::size_t m, std::size_t n) {
    SignPattern target = sign_pattern_of(build_pmn(m, n));
    if (target.has_zero()) {
        throw UnsupportedError("sigma(P_{" + std::to_string(m) + "," + std::to_string(n) +
                               "}) = " + target.str() + " has a vanishing coefficient");
    }
    return target;
}

bool lex_p_first(char a, char b) { return a == 'P' && b == 'N'; }

RealizationWitness attempt(std::size_t m, std::size_t n, const OrderOfModuli& order, const SignPattern& target,
                           unsigned t) {
    RealizationWitness w;
    w.m = m;
    w.n = n;
    w.order = order;
    w.epsilon_exponent = t;
    w.epsilon = power_of_half(t);
    const std::string& word = order.str();
    for (std::size_t rank = 1; rank <= word.size(); ++rank) {
        (word[rank - 1] == 'P' ? w.alphas : w.betas).emplace_back(static_cast<unsigned long>(rank));
    }
    w.roots = perturbed_roots(order, w.epsilon);
    w.polynomial = poly_from_roots(w.roots);
    w.pattern_ok = sign_pattern_of(w.polynomial) == target;
    w.order_ok = order_of_moduli(w.roots) == order;
    return w;
}

RealizationWitness realize_against(std::size_t m, std::size_t n, const OrderOfModuli& order,
                                   const SignPattern& target) {
    if (order.p_count() != m || order.n_count() != n) {
        throw DomainError("order " + order.str() + " is not compatible with sigma(P_{" + std::to_string(m) + "," +
                          std::to_string(n) + "})");
    }
    for (unsigned t = 1; t <= kMaxEpsilonExponent; ++t) {
        RealizationWitness w = attempt(m, n, order, target, t);
        if (w.pattern_ok && w.order_ok) return w;
    }
    throw FailureError("no epsilon down to 2^-" + std::to_string(kMaxEpsilonExponent) + " realizes order " +
                       order.str() + " for P_{" + std::to_string(m) + "," + std::to_string(n) + "}");
}

}  // namespace

RootMultiset perturbed_roots(const OrderOfModuli& order, const mpq_class& epsilon) {
    if (sgn(epsilon) <= 0) throw DomainError("epsilon must be positive");
    const std::string& word = order.str();
    std::vector<mpq_class> positive, negative;
    for (std::size_t rank = 1; rank <= word.size(); ++rank) {
        const mpq_class shift = 1 + epsilon * static_cast<unsigned long>(rank);
        if (word[rank - 1] == 'P') {
            positive.push_back(shift);
        } else {
            negative.push_back(-shift);
        }
    }
    positive.insert(positive.end(), negative.begin(), negative.end());
    return RootMultiset(std::move(positive));
}

RealizationWitness realize_couple(std::size_t m, std::size_t n, const OrderOfModuli& order) {
    return realize_against(m, n, order, target_pattern(m, n));
}

bool verify_witness(const RealizationWitness& w, const SignPattern& target_pattern,
                    const OrderOfModuli& target_order) {
    try {
        const RatPolynomial p = poly_from_roots(w.roots);
        return sign_pattern_of(p) == target_pattern && order_of_moduli(w.roots) == target_order;
    } catch (const DomainError&) {
        return false;
    }
}

std::vector<OrderOfModuli> compatible_orders(std::size_t p, std::size_t n) {
    std::string word = std::string(p, 'P') + std::string(n, 'N');
    std::vector<OrderOfModuli> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end(), lex_p_first));
    return out;
}

UniversalityCertificate universality_certificate(std::size_t m, std::size_t n, std::size_t budget,
                                                 unsigned workers) {
    if (m + n < 1) throw DomainError("universality_certificate: m + n must be at least 1");
    UniversalityCertificate cert;
    cert.m = m;
    cert.n = n;
    cert.pattern = target_pattern(m, n);

    mpz_class count;
    mpz_bin_uiui(count.get_mpz_t(), m + n, m);
    if (count > budget) {
        throw ResourceError(count.get_str() + " compatible orders exceed the budget of " + std::to_string(budget));
    }

    const std::vector<OrderOfModuli> orders = compatible_orders(m, n);
    cert.witnesses.resize(orders.size());
    std::vector<std::exception_ptr> errors(orders.size());

    workers = std::max(1u, workers);
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < orders.size(); i += workers) {
            try {
                cert.witnesses[i] = realize_against(m, n, orders[i], cert.pattern);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }

    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (errors[i]) {
            try {
                std::rethrow_exception(errors[i]);
            } catch (const std::exception& e) {
                throw FailureError("order " + orders[i].str() + " failed: " + e.what());
            }
        }
    }
    cert.realized = static_cast<std::size_t>(std::count_if(cert.witnesses.begin(), cert.witnesses.end(),
                                                           [](const auto& w) { return w.pattern_ok && w.order_ok; }));
    return cert;
}

bool monotone_below(std::size_t m, std::size_t n, const OrderOfModuli& order, unsigned first, unsigned extra) {
    const SignPattern target = target_pattern(m, n);
    for (unsigned t = first + 1; t <= first + extra; ++t) {
        const RealizationWitness w = attempt(m, n, order, target, t);
        if (!w.pattern_ok || !w.order_ok) return false;
    }
    return true;
}

}  // namespace descartes
