#include "descartes/io.hpp"

#include <map>
#include <sstream>

#include "descartes/errors.hpp"

namespace descartes::io {

namespace {

json fractions(const std::vector<mpq_class>& qs) {
    json out = json::array();
    for (const auto& q : qs) out.push_back(to_fraction_string(q));
    return out;
}

std::vector<mpq_class> parse_fractions(const json& j) {
    std::vector<mpq_class> out;
    for (const auto& item : j) out.push_back(parse_fraction(item.get<std::string>()));
    return out;
}

std::string sigma_or_empty(const SignPattern& pat) {
    try {
        return sigma_encode(normalize_monic(pat)).str();
    } catch (const DomainError&) {
        return "";
    }
}

std::string join(const std::vector<std::size_t>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

json to_json(const RealizationWitness& w) {
    json j;
    j["m"] = w.m;
    j["n"] = w.n;
    j["order"] = w.order.str();
    j["epsilon"] = to_fraction_string(w.epsilon);
    j["epsilon_exponent"] = w.epsilon_exponent;
    j["alphas"] = fractions(w.alphas);
    j["betas"] = fractions(w.betas);
    j["roots"] = fractions(w.roots.roots());
    j["coefficients"] = fractions(w.polynomial.coeffs());
    j["pattern"] = sign_pattern_of(w.polynomial).str();
    j["pattern_ok"] = w.pattern_ok;
    j["order_ok"] = w.order_ok;
    return j;
}

RealizationWitness witness_from_json(const json& j) {
    try {
        RealizationWitness w;
        w.m = j.at("m").get<std::size_t>();
        w.n = j.at("n").get<std::size_t>();
        w.order = OrderOfModuli(j.at("order").get<std::string>());
        w.epsilon = parse_fraction(j.at("epsilon").get<std::string>());
        w.epsilon_exponent = j.value("epsilon_exponent", 0U);
        w.alphas = parse_fractions(j.at("alphas"));
        w.betas = parse_fractions(j.at("betas"));
        w.roots = RootMultiset(parse_fractions(j.at("roots")));
        w.polynomial = RatPolynomial(parse_fractions(j.at("coefficients")));
        w.pattern_ok = j.at("pattern_ok").get<bool>();
        w.order_ok = j.at("order_ok").get<bool>();
        return w;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed witness JSON: ") + e.what());
    }
}

json to_json(const UniversalityCertificate& c) {
    json j;
    j["m"] = c.m;
    j["n"] = c.n;
    j["pattern"] = c.pattern.str();
    j["sigma"] = sigma_or_empty(c.pattern);
    j["orders"] = c.witnesses.size();
    j["realized"] = c.realized;
    j["verdict"] = c.all_realized() ? "all realized" : "incomplete";
    json ws = json::array();
    for (const auto& w : c.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = std::move(ws);
    return j;
}

json to_json(const RealizabilityAtlas& atlas) {
    json j;
    j["degree"] = atlas.degree;
    j["seed"] = atlas.seed;
    j["samples"] = atlas.samples;
    j["workers"] = atlas.workers;
    j["zero_bearing_draws"] = atlas.zero_bearing_draws;
    j["witnessed"] = atlas.witnessed_count();
    j["couples_total"] = atlas.entries.size();
    json couples = json::object();
    for (const auto& [key, e] : atlas.entries) {
        json item;
        item["status"] = e.status == CoupleStatus::Witnessed ? "witnessed" : "unknown";
        if (e.witness) item["roots"] = fractions(e.witness->roots());
        couples[key] = std::move(item);
    }
    j["couples"] = std::move(couples);
    return j;
}

RealizabilityAtlas atlas_from_json(const json& j) {
    try {
        RealizabilityAtlas atlas;
        atlas.degree = j.at("degree").get<std::size_t>();
        atlas.seed = j.at("seed").get<std::uint64_t>();
        atlas.samples = j.at("samples").get<std::size_t>();
        atlas.workers = j.at("workers").get<unsigned>();
        atlas.zero_bearing_draws = j.value("zero_bearing_draws", std::size_t{0});
        for (const auto& [key, item] : j.at("couples").items()) {
            const auto bar = key.find('|');
            if (bar == std::string::npos) throw DomainError("bad couple key '" + key + "'");
            AtlasEntry e;
            e.couple = {SignPattern::parse(key.substr(0, bar)), OrderOfModuli(key.substr(bar + 1))};
            e.status = item.at("status").get<std::string>() == "witnessed" ? CoupleStatus::Witnessed
                                                                            : CoupleStatus::Unknown;
            if (item.contains("roots")) e.witness = RootMultiset(parse_fractions(item.at("roots")));
            atlas.entries.emplace(key, std::move(e));
        }
        return atlas;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed atlas JSON: ") + e.what());
    }
}

std::string atlas_summary_csv(const RealizabilityAtlas& atlas) {
    struct Row {
        std::size_t changes = 0, orders = 0, witnessed = 0;
    };
    std::map<SignPattern, Row> rows;
    for (const auto& [key, e] : atlas.entries) {
        Row& r = rows[e.couple.pattern];
        r.changes = e.couple.order.p_count();
        ++r.orders;
        if (e.status == CoupleStatus::Witnessed) ++r.witnessed;
    }
    std::ostringstream out;
    out << "pattern,sigma,c_tilde,orders,witnessed\n";
    for (const auto& [pat, r] : rows) {
        out << pat.str() << ",\"" << sigma_or_empty(pat) << "\"," << r.changes << ',' << r.orders << ','
            << r.witnessed << '\n';
    }
    return out.str();
}

json to_json(const UniversalityReport& r) {
    json j;
    j["degree"] = r.atlas.degree;
    j["seed"] = r.atlas.seed;
    j["samples"] = r.atlas.samples;
    j["workers"] = r.atlas.workers;
    j["claim_holds"] = r.claim_holds;
    json pats = json::array();
    for (const auto& s : r.patterns) {
        json p;
        p["pattern"] = s.pattern.str();
        p["sigma"] = sigma_or_empty(s.pattern);
        p["c_tilde"] = s.changes;
        p["orders"] = s.orders;
        p["witnessed"] = s.witnessed;
        p["universal_evidence"] = s.universal();
        p["pmn_m"] = s.pmn_m;
        p["certified"] = s.certified;
        pats.push_back(std::move(p));
    }
    j["patterns"] = std::move(pats);
    return j;
}

json to_json(const LocusRow& row) {
    json j;
    j["m"] = row.locus.m;
    j["n"] = row.locus.n;
    j["positions"] = row.locus.positions;
    j["sigma"] = row.sigma;
    if (row.predicted) j["predicted"] = *row.predicted;
    j["matches"] = row.matches();
    return j;
}

std::string loci_csv(const std::vector<LocusRow>& rows) {
    std::ostringstream out;
    out << "m,n,positions,sigma\n";
    for (const auto& row : rows) {
        out << row.locus.m << ',' << row.locus.n << ',' << join(row.locus.positions, ';') << ',' << '"'
            << row.sigma << '"' << '\n';
    }
    return out.str();
}

json to_json(const std::vector<XkCouple>& couples, std::size_t k) {
    json j;
    j["k"] = k;
    json items = json::array();
    for (const auto& c : couples) {
        items.push_back({{"m", c.m}, {"n", c.n}, {"s", c.s}, {"sign", c.root_sign > 0 ? "+" : "-"}});
    }
    j["couples"] = std::move(items);
    return j;
}

}  // namespace descartes::io
