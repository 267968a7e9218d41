#include "descartes/survey.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <thread>

#include "descartes/errors.hpp"
#include "descartes/exact_poly.hpp"
#include "descartes/realization.hpp"

namespace descartes {

namespace {

std::string roots_key(const RootMultiset& r) {
    std::string out;
    for (const auto& q : r.roots()) {
        out += to_fraction_string(q);
        out.push_back(';');
    }
    return out;
}

bool smaller_witness(const RootMultiset& a, const RootMultiset& b) {
    const std::string ka = roots_key(a), kb = roots_key(b);
    return ka.size() != kb.size() ? ka.size() < kb.size() : ka < kb;
}

RealizabilityAtlas empty_atlas(std::size_t d) {
    RealizabilityAtlas atlas;
    atlas.degree = d;
    for (auto& c : enumerate_couples(d)) {
        const std::string key = couple_key(c);
        atlas.entries.emplace(key, AtlasEntry{std::move(c), CoupleStatus::Unknown, std::nullopt});
    }
    return atlas;
}

// Moduli generators. All return d distinct positive rationals, ascending.
class ModuliSampler {
public:
    ModuliSampler(std::size_t d, std::uint64_t seed) : d_(d), rng_(seed) {}

    std::vector<mpq_class> draw() {
        switch (pick(3)) {
            case 0: return grid();
            case 1: return ladder(pick(2) == 0 ? 2 : 3);
            default: return mixed_ladder();
        }
    }

    bool coin() { return pick(2) == 0; }

private:
    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    mpq_class grid_value() {
        mpq_class q(static_cast<unsigned long>(1 + pick(4 * d_)), static_cast<unsigned long>(1 + pick(4)));
        q.canonicalize();
        return q;
    }

    std::vector<mpq_class> grid() {
        std::set<mpq_class> values;
        while (values.size() < d_) values.insert(grid_value());
        return {values.begin(), values.end()};
    }

    std::vector<mpq_class> ladder(unsigned long ratio) {
        std::vector<mpq_class> out{grid_value()};
        while (out.size() < d_) out.push_back(out.back() * ratio);
        return out;
    }

    std::vector<mpq_class> mixed_ladder() {
        static const std::array<mpq_class, 9> ratios{mpq_class(9, 8), mpq_class(5, 4), mpq_class(3, 2),
                                                     mpq_class(2),    mpq_class(3),    mpq_class(5),
                                                     mpq_class(8),    mpq_class(16),   mpq_class(64)};
        std::vector<mpq_class> out{grid_value()};
        while (out.size() < d_) out.push_back(out.back() * ratios[pick(ratios.size())]);
        return out;
    }

    std::size_t d_;
    std::mt19937_64 rng_;
};

RealizabilityAtlas sample_worker(std::size_t d, std::size_t samples, std::uint64_t seed) {
    RealizabilityAtlas atlas = empty_atlas(d);
    ModuliSampler sampler(d, seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const std::vector<mpq_class> moduli = sampler.draw();
        std::string word(d, 'N');
        std::vector<mpq_class> roots;
        roots.reserve(d);
        for (std::size_t r = 0; r < d; ++r) {
            if (sampler.coin()) {
                word[r] = 'P';
                roots.push_back(moduli[r]);
            } else {
                roots.push_back(-moduli[r]);
            }
        }
        RootMultiset rs(std::move(roots));
        const SignPattern pat = sign_pattern_of(primitive_from_roots(rs));
        if (pat.has_zero()) {
            ++atlas.zero_bearing_draws;
            continue;
        }
        Couple c{pat, OrderOfModuli(word)};
        if (!is_compatible(c)) {
            throw FailureError("sampled couple " + couple_key(c) + " violates Descartes' rule");
        }
        atlas.record(c, rs);
    }
    return atlas;
}

}  // namespace

std::size_t RealizabilityAtlas::witnessed_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& kv) {
        return kv.second.status == CoupleStatus::Witnessed;
    }));
}

bool RealizabilityAtlas::is_witnessed(const Couple& c) const {
    auto it = entries.find(couple_key(c));
    return it != entries.end() && it->second.status == CoupleStatus::Witnessed;
}

void RealizabilityAtlas::record(const Couple& c, const RootMultiset& roots) {
    auto it = entries.find(couple_key(c));
    if (it == entries.end()) {
        throw DomainError("couple " + couple_key(c) + " is not a compatible couple of degree " +
                          std::to_string(degree));
    }
    AtlasEntry& e = it->second;
    e.status = CoupleStatus::Witnessed;
    if (!e.witness || smaller_witness(roots, *e.witness)) e.witness = roots;
}

void RealizabilityAtlas::merge(const RealizabilityAtlas& other) {
    if (other.degree != degree) throw DomainError("cannot merge atlases of different degree");
    zero_bearing_draws += other.zero_bearing_draws;
    for (const auto& [key, entry] : other.entries) {
        if (entry.status == CoupleStatus::Witnessed) record(entry.couple, *entry.witness);
    }
}

std::vector<SignPattern> monic_patterns(std::size_t d) {
    if (d < 1 || d > kMaxSurveyDegree) {
        throw ResourceError("degree " + std::to_string(d) + " outside 1.." + std::to_string(kMaxSurveyDegree));
    }
    std::vector<SignPattern> out;
    out.reserve(std::size_t{1} << d);
    for (std::size_t bits = 0; bits < (std::size_t{1} << d); ++bits) {
        // bit i (from the top) set means entry i+1 is '-'
        std::vector<Sign> s{Sign::Plus};
        for (std::size_t i = 0; i < d; ++i) {
            s.push_back((bits >> (d - 1 - i)) & 1U ? Sign::Minus : Sign::Plus);
        }
        out.emplace_back(std::move(s));
    }
    return out;
}

std::vector<Couple> enumerate_couples(std::size_t d) {
    std::vector<Couple> out;
    for (const auto& pat : monic_patterns(d)) {
        const std::size_t c = descartes_counts(pat).c_tilde;
        for (auto& order : compatible_orders(c, d - c)) out.push_back({pat, std::move(order)});
    }
    return out;
}

RealizabilityAtlas sample_realizations(std::size_t d, std::size_t samples, std::uint64_t seed, unsigned workers) {
    if (samples < 1) throw DomainError("sample_realizations: samples must be at least 1");
    workers = std::max(1u, workers);
    RealizabilityAtlas atlas = empty_atlas(d);

    std::vector<RealizabilityAtlas> partial(workers);
    auto work = [&](unsigned w) {
        const std::size_t share = samples / workers + (w < samples % workers ? 1 : 0);
        partial[w] = sample_worker(d, share, seed + w);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }
    for (const auto& p : partial) atlas.merge(p);

    atlas.seed = seed;
    atlas.samples = samples;
    atlas.workers = workers;
    return atlas;
}

std::vector<std::string> verify_atlas(const RealizabilityAtlas& atlas) {
    std::vector<std::string> bad;
    for (const auto& [key, e] : atlas.entries) {
        if (e.status != CoupleStatus::Witnessed) continue;
        bool ok = false;
        if (e.witness) {
            try {
                ok = sign_pattern_of(poly_from_roots(*e.witness)) == e.couple.pattern &&
                     order_of_moduli(*e.witness) == e.couple.order;
            } catch (const DomainError&) {
                ok = false;
            }
        }
        if (!ok) bad.push_back(key);
    }
    return bad;
}

UniversalityReport universality_report(std::size_t d, std::size_t samples, std::uint64_t seed, unsigned workers) {
    if (d < 1 || d > kMaxReportDegree) {
        throw ResourceError("universality_report: degree " + std::to_string(d) + " outside 1.." +
                            std::to_string(kMaxReportDegree));
    }
    UniversalityReport report;
    report.atlas = sample_realizations(d, samples, seed, workers);

    std::map<SignPattern, std::vector<std::size_t>> pmn;
    std::set<SignPattern> certified;
    for (std::size_t m = 0; m <= d; ++m) {
        const SignPattern pat = sign_pattern_of(build_pmn(m, d - m));
        if (pat.has_zero()) continue;
        pmn[pat].push_back(m);
        const UniversalityCertificate cert = universality_certificate(m, d - m, kDefaultOrderBudget, workers);
        for (const auto& w : cert.witnesses) report.atlas.record({pat, w.order}, w.roots);
        if (cert.all_realized()) certified.insert(pat);
    }

    for (const auto& pat : monic_patterns(d)) {
        PatternSummary s;
        s.pattern = pat;
        s.changes = descartes_counts(pat).c_tilde;
        for (const auto& order : compatible_orders(s.changes, d - s.changes)) {
            ++s.orders;
            if (report.atlas.is_witnessed({pat, order})) ++s.witnessed;
        }
        if (auto it = pmn.find(pat); it != pmn.end()) s.pmn_m = it->second;
        s.certified = certified.contains(pat);
        if (s.universal() && s.pmn_m.empty()) report.claim_holds = false;
        report.patterns.push_back(std::move(s));
    }
    return report;
}

}  // namespace descartes
