#pragma once

/**
 * @file survey.hpp
 * @brief Sampling evidence for realizability of couples at small degree.
 *
 * Sampling can only show that a couple is realizable, never that it is
 * not, so atlas statuses are "witnessed" or "unknown".
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "descartes/patterns.hpp"

namespace descartes {

inline constexpr std::size_t kMaxSurveyDegree = 10;
inline constexpr std::size_t kMaxReportDegree = 6;
inline constexpr std::size_t kDefaultSamples = 100000;

enum class CoupleStatus { Unknown, Witnessed };

struct AtlasEntry {
    Couple couple;
    CoupleStatus status = CoupleStatus::Unknown;
    std::optional<RootMultiset> witness;
};

struct RealizabilityAtlas {
    std::size_t degree = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    unsigned workers = 1;
    std::size_t zero_bearing_draws = 0;  // draws whose polynomial had a vanishing coefficient
    std::map<std::string, AtlasEntry> entries;  // keyed by couple_key

    std::size_t witnessed_count() const;
    bool is_witnessed(const Couple& c) const;

    /// Marks a couple witnessed. Between two witnesses for the same couple
    /// the one with the smaller serialization is kept, so merging is
    /// associative and commutative.
    void record(const Couple& c, const RootMultiset& roots);

    /// Union of witnessed sets; degrees must agree.
    void merge(const RealizabilityAtlas& other);
};

/// All compatible (ZERO-free monic pattern, order) couples of degree d.
/// Throws ResourceError for d outside 1..10.
std::vector<Couple> enumerate_couples(std::size_t d);

/// All 2^d ZERO-free patterns of length d+1 starting with '+'.
std::vector<SignPattern> monic_patterns(std::size_t d);

/// Deterministic for fixed (d, samples, seed, workers). Worker w draws from
/// seed + w.
RealizabilityAtlas sample_realizations(std::size_t d, std::size_t samples, std::uint64_t seed, unsigned workers = 1);

/// Keys of witnessed entries whose stored roots fail to re-verify.
std::vector<std::string> verify_atlas(const RealizabilityAtlas& atlas);

struct PatternSummary {
    SignPattern pattern;
    std::size_t changes = 0;
    std::size_t orders = 0;
    std::size_t witnessed = 0;
    std::vector<std::size_t> pmn_m;  // m with sigma(P_{m,d-m}) == pattern
    bool certified = false;          // filled from universality_certificate
    bool universal() const { return witnessed == orders; }
};

struct UniversalityReport {
    RealizabilityAtlas atlas;
    std::vector<PatternSummary> patterns;
    /// Every pattern witnessed with all its orders is some sigma(P_{m,n}).
    bool claim_holds = true;
};

/// Sampling for every pattern, exact certificates for the ZERO-free
/// sigma(P_{m,d-m}). Throws ResourceError for d outside 1..6.
UniversalityReport universality_report(std::size_t d, std::size_t samples = kDefaultSamples,
                                       std::uint64_t seed = 1, unsigned workers = 1);

}  // namespace descartes
