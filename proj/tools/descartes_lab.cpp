// descartes-lab: command-line front end for the descartes library.
//
// Exit codes: 0 success, 1 verification failure or discrepancy, 2 usage or
// invalid input, 3 unsupported couple/family, 4 resource limit.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "descartes/errors.hpp"
#include "descartes/exact_poly.hpp"
#include "descartes/io.hpp"
#include "descartes/patterns.hpp"
#include "descartes/realization.hpp"
#include "descartes/survey.hpp"
#include "descartes/vanishing.hpp"

namespace {

using descartes::io::json;

enum Exit : int { kOk = 0, kVerify = 1, kUsage = 2, kUnsupported = 3, kResource = 4 };

struct RunConfig {
    std::string format;  // empty: per-command default
    std::string out_path;
    std::uint64_t seed = 1;
    std::size_t samples = descartes::kDefaultSamples;
    unsigned workers = 1;
};

std::string join(const std::vector<std::size_t>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

class Output {
public:
    explicit Output(const RunConfig& cfg) : path_(cfg.out_path) {}
    std::ostream& stream() { return buf_; }
    void flush() {
        if (path_.empty()) {
            std::cout << buf_.str();
        } else {
            std::ofstream f(path_, std::ios::binary);
            if (!f) throw descartes::DomainError("cannot open output file " + path_);
            f << buf_.str();
        }
    }

private:
    std::string path_;
    std::ostringstream buf_;
};

std::string format_or(const RunConfig& cfg, const char* fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

int cmd_pattern(const RunConfig& cfg, std::size_t m, std::size_t n) {
    using namespace descartes;
    const IntPolynomial p = build_pmn(m, n);
    const SignPattern pat = sign_pattern_of(p);
    const std::string sigma = sigma_encode(pat).str();
    const DescartesCounts dc = descartes_counts(pat);

    Output out(cfg);
    const std::string fmt = format_or(cfg, "table");
    if (fmt == "json") {
        json j{{"m", m}, {"n", n}, {"pattern", pat.str()}, {"sigma", sigma}, {"c_tilde", dc.c_tilde},
               {"p_tilde", dc.p_tilde}, {"c_star", dc.c_star}, {"lambda", dc.lambda}};
        json coeffs = json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
        j["coefficients"] = std::move(coeffs);
        out.stream() << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        out.stream() << "m,n,pattern,sigma,c_tilde,p_tilde,c_star,lambda\n"
                     << m << ',' << n << ',' << pat.str() << ',' << '"' << sigma << '"' << ',' << dc.c_tilde << ','
                     << dc.p_tilde << ',' << dc.c_star << ',' << dc.lambda << '\n';
    } else {
        out.stream() << pat.str() << " | " << sigma << " | c=" << dc.c_tilde << " p=" << dc.p_tilde
                     << " zeros=" << dc.lambda << '\n';
    }
    out.flush();
    return kOk;
}

int cmd_vanishing(const RunConfig& cfg, std::size_t m, std::size_t n_min, std::size_t n_max, std::size_t min_zeros) {
    using namespace descartes;
    std::vector<LocusRow> rows;
    std::vector<LocusRow> mismatches;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        if (m + n < 1) continue;
        LocusRow row = locus_row(m, n);
        if (!row.matches()) mismatches.push_back(row);
        if (row.locus.positions.size() >= min_zeros) rows.push_back(std::move(row));
    }

    Output out(cfg);
    const std::string fmt = format_or(cfg, "table");
    if (fmt == "json") {
        json j = json::array();
        for (const auto& r : rows) j.push_back(io::to_json(r));
        out.stream() << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        out.stream() << io::loci_csv(rows);
    } else {
        for (const auto& r : rows) {
            out.stream() << "m=" << r.locus.m << " n=" << r.locus.n << " zeros at x^{" << join(r.locus.positions, ",")
                         << "} " << r.sigma << '\n';
        }
    }
    out.flush();

    for (const auto& r : mismatches) {
        std::cerr << "discrepancy m=" << r.locus.m << " n=" << r.locus.n << ": oracle {"
                  << join(r.locus.positions, ",") << "} predicted {" << join(*r.predicted, ",") << "}\n";
    }
    return mismatches.empty() ? kOk : kVerify;
}

int cmd_sequence(const RunConfig& cfg, std::size_t count) {
    const auto seq = descartes::sequence_S(count);
    std::vector<std::size_t> diffs;
    for (std::size_t i = 1; i < seq.size(); ++i) diffs.push_back(seq[i] - seq[i - 1]);

    Output out(cfg);
    const std::string fmt = format_or(cfg, "table");
    if (fmt == "json") {
        out.stream() << json{{"sequence", seq}, {"differences", diffs}}.dump(2) << '\n';
    } else if (fmt == "csv") {
        out.stream() << "index,value\n";
        for (std::size_t i = 0; i < seq.size(); ++i) out.stream() << i + 1 << ',' << seq[i] << '\n';
    } else {
        out.stream() << join(seq, ", ") << '\n' << "differences: " << join(diffs, ", ") << '\n';
    }
    out.flush();
    return kOk;
}

int cmd_xk(const RunConfig& cfg, std::size_t k, std::size_t s_max, bool full_verify) {
    using namespace descartes;
    const auto couples = xk_vanishing_couples(k, s_max);

    std::vector<std::string> failures;
    for (const auto& c : couples) {
        bool ok = sgn(pmn_coefficient(c.m, c.n, k)) == 0;
        if (ok && full_verify) {
            const auto z = zero_positions(c.m, c.n).positions;
            ok = std::find(z.begin(), z.end(), k) != z.end();
        }
        if (!ok) failures.push_back("(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")");
    }

    Output out(cfg);
    const std::string fmt = format_or(cfg, "table");
    if (fmt == "json") {
        out.stream() << io::to_json(couples, k).dump(2) << '\n';
    } else if (fmt == "csv") {
        out.stream() << "m,n,s,sign\n";
        for (const auto& c : couples) {
            out.stream() << c.m << ',' << c.n << ',' << c.s << ',' << (c.root_sign > 0 ? '+' : '-') << '\n';
        }
    } else {
        for (const auto& c : couples) {
            out.stream() << '(' << c.m << ',' << c.n << ") s=" << c.s << " sign=" << (c.root_sign > 0 ? '+' : '-')
                         << " tail=" << tail_signs(c.m, c.n, k + 2).str() << '\n';
        }
    }
    out.flush();
    for (const auto& f : failures) std::cerr << "coefficient of x^" << k << " does not vanish for " << f << '\n';
    return failures.empty() ? kOk : kVerify;
}

int cmd_census(const RunConfig& cfg, std::size_t max_degree, bool include_equal) {
    using namespace descartes;
    const TripleCensus census = triple_census(max_degree, include_equal, cfg.workers);

    Output out(cfg);
    const std::string fmt = format_or(cfg, "table");
    std::vector<std::string> seen, hits, missing;
    for (const auto& t : census.seen) seen.push_back(triple_str(t));
    for (const auto& t : census.forbidden_hits) hits.push_back(triple_str(t));
    for (const auto& t : possible_triples()) {
        if (!census.seen.contains(t)) missing.push_back(triple_str(t));
    }
    if (fmt == "json") {
        out.stream() << json{{"max_degree", max_degree}, {"include_equal", include_equal}, {"seen", seen},
                             {"forbidden_hits", hits}, {"missing_possible", missing}}
                            .dump(2)
                     << '\n';
    } else if (fmt == "csv") {
        out.stream() << "triple,kind\n";
        for (const auto& s : seen) out.stream() << '"' << s << "\",seen\n";
        for (const auto& s : hits) out.stream() << '"' << s << "\",forbidden\n";
    } else {
        out.stream() << "seen " << seen.size() << ":";
        for (const auto& s : seen) out.stream() << ' ' << s;
        out.stream() << "\nforbidden hits " << hits.size() << ":";
        for (const auto& s : hits) out.stream() << ' ' << s;
        out.stream() << '\n';
    }
    out.flush();
    // m = n legitimately contains (0,+,0); only the m < n scan is a check
    return hits.empty() || include_equal ? kOk : kVerify;
}

int cmd_realize(const RunConfig& cfg, std::size_t m, std::size_t n, const std::string& order_text) {
    using namespace descartes;
    const OrderOfModuli order(order_text);
    const RealizationWitness w = realize_couple(m, n, order);
    const bool verified = verify_witness(w, sign_pattern_of(build_pmn(m, n)), order);

    Output out(cfg);
    const std::string fmt = format_or(cfg, "json");
    if (fmt == "table") {
        out.stream() << "order " << w.order.str() << " | pattern " << sign_pattern_of(w.polynomial).str()
                     << " | epsilon " << to_fraction_string(w.epsilon) << " | verified " << (verified ? "yes" : "no")
                     << '\n';
    } else {
        json j = io::to_json(w);
        j["verified"] = verified;
        out.stream() << j.dump(2) << '\n';
    }
    out.flush();
    return verified ? kOk : kVerify;
}

int cmd_certify(const RunConfig& cfg, std::size_t m, std::size_t n, std::size_t budget) {
    using namespace descartes;
    const UniversalityCertificate cert = universality_certificate(m, n, budget, cfg.workers);
    std::size_t verified = 0;
    for (const auto& w : cert.witnesses) verified += verify_witness(w, cert.pattern, w.order) ? 1 : 0;

    Output out(cfg);
    const std::string fmt = format_or(cfg, "table");
    if (fmt == "json") {
        json j = io::to_json(cert);
        j["verified"] = verified;
        j["workers"] = cfg.workers;
        out.stream() << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        out.stream() << "order,epsilon,pattern_ok,order_ok\n";
        for (const auto& w : cert.witnesses) {
            out.stream() << w.order.str() << ',' << to_fraction_string(w.epsilon) << ',' << w.pattern_ok << ','
                         << w.order_ok << '\n';
        }
    } else {
        out.stream() << cert.witnesses.size() << " orders, " << cert.realized << " realized\n";
    }
    out.flush();
    return cert.all_realized() && verified == cert.witnesses.size() ? kOk : kVerify;
}

int cmd_survey(const RunConfig& cfg, std::size_t d, bool report) {
    using namespace descartes;
    Output out(cfg);
    const std::string fmt = format_or(cfg, "json");

    if (report) {
        const UniversalityReport r = universality_report(d, cfg.samples, cfg.seed, cfg.workers);
        const auto bad = verify_atlas(r.atlas);
        if (fmt == "table") {
            for (const auto& s : r.patterns) {
                out.stream() << s.pattern.str() << " c=" << s.changes << ' ' << s.witnessed << '/' << s.orders
                             << (s.universal() ? " universal (evidence)" : "");
                if (!s.pmn_m.empty()) out.stream() << " = sigma(P_{m," << d << "-m}) for m in {" << join(s.pmn_m, ",") << "}";
                out.stream() << '\n';
            }
            out.stream() << "claim " << (r.claim_holds ? "holds" : "FAILS") << '\n';
        } else if (fmt == "csv") {
            out.stream() << io::atlas_summary_csv(r.atlas);
        } else {
            out.stream() << io::to_json(r).dump(2) << '\n';
        }
        out.flush();
        return bad.empty() ? kOk : kVerify;
    }

    const RealizabilityAtlas atlas = sample_realizations(d, cfg.samples, cfg.seed, cfg.workers);
    const auto bad = verify_atlas(atlas);
    if (fmt == "table") {
        out.stream() << atlas.witnessed_count() << " of " << atlas.entries.size() << " couples witnessed (d=" << d
                     << ", samples=" << atlas.samples << ", seed=" << atlas.seed << ", workers=" << atlas.workers
                     << ")\n";
    } else if (fmt == "csv") {
        out.stream() << io::atlas_summary_csv(atlas);
    } else {
        out.stream() << io::to_json(atlas).dump(2) << '\n';
    }
    out.flush();
    for (const auto& k : bad) std::cerr << "witness for " << k << " does not re-verify\n";
    return bad.empty() ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sign patterns of (x-1)^m (x+1)^n: exact computation, classification and realization"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    app.add_option("--seed", cfg.seed, "Random seed (survey)");
    app.add_option("--samples", cfg.samples, "Sample budget (survey)")->check(CLI::PositiveNumber);
    app.add_option("--workers", cfg.workers, "Worker threads (census, certify, survey)")->check(CLI::PositiveNumber);

    std::size_t m = 0, n = 0, d = 0, k = 0, count = 0, s_max = 0, n_min = 0, n_max = 0, min_zeros = 1;
    std::size_t budget = descartes::kDefaultOrderBudget;
    bool n_min_set = false, include_equal = false, full_verify = false, report = false;
    std::string order;
    std::function<int()> run;

    auto* pattern = app.add_subcommand("pattern", "Sign pattern, sigma notation and Descartes counts of P_{m,n}");
    pattern->add_option("m", m)->required();
    pattern->add_option("n", n)->required();
    pattern->callback([&] { run = [&] { return cmd_pattern(cfg, m, n); }; });

    auto* vanishing = app.add_subcommand("vanishing", "Vanishing-coefficient loci of P_{m,n} over a range of n");
    vanishing->add_option("--m", m, "m")->required();
    auto* nmin_opt = vanishing->add_option("--n-min", n_min, "Smallest n (default m)");
    vanishing->add_option("--n-max", n_max, "Largest n")->required();
    vanishing->add_option("--min-zeros", min_zeros, "Only rows with at least this many zeros (default 1)");
    vanishing->callback([&] {
        n_min_set = nmin_opt->count() > 0;
        run = [&] { return cmd_vanishing(cfg, m, n_min_set ? n_min : m, n_max, min_zeros); };
    });

    auto* sequence = app.add_subcommand("sequence", "Values n = (mu^2-7)/3 with mu >= 4 not divisible by 3");
    sequence->add_option("count", count)->required()->check(CLI::PositiveNumber);
    sequence->callback([&] { run = [&] { return cmd_sequence(cfg, count); }; });

    auto* xk = app.add_subcommand("xk", "Couples (m,n) with vanishing coefficient of x^k");
    xk->add_option("k", k)->required();
    xk->add_option("s_max", s_max)->required();
    xk->add_flag("--full-verify", full_verify, "Also re-verify each couple by full expansion");
    xk->callback([&] { run = [&] { return cmd_xk(cfg, k, s_max, full_verify); }; });

    auto* census = app.add_subcommand("census", "Consecutive sign triples of sigma(P_{m,n}), 1 <= m < n");
    census->add_option("--max-degree", d, "Largest m+n")->required();
    census->add_flag("--include-equal", include_equal, "Also scan m = n (reported separately)");
    census->callback([&] { run = [&] { return cmd_census(cfg, d, include_equal); }; });

    auto* realize = app.add_subcommand("realize", "Realize (sigma(P_{m,n}), ORDER) by a perturbation witness");
    realize->add_option("m", m)->required();
    realize->add_option("n", n)->required();
    realize->add_option("order", order, "Order of moduli over {P,N}, smallest first")->required();
    realize->callback([&] { run = [&] { return cmd_realize(cfg, m, n, order); }; });

    auto* certify = app.add_subcommand("certify", "Realize sigma(P_{m,n}) with every compatible order");
    certify->add_option("m", m)->required();
    certify->add_option("n", n)->required();
    certify->add_option("--budget", budget, "Maximum number of orders");
    certify->callback([&] { run = [&] { return cmd_certify(cfg, m, n, budget); }; });

    auto* survey = app.add_subcommand("survey", "Sampling atlas of realizable couples of degree d");
    survey->add_option("d", d)->required();
    survey->add_flag("--report", report, "Universality report (d <= 6)");
    survey->callback([&] { run = [&] { return cmd_survey(cfg, d, report); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        return run();
    } catch (const descartes::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const descartes::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const descartes::DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const descartes::FailureError& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kVerify;
    }
}
