#include "macd/json_io.hpp"

#include <fstream>

namespace macd {

Json trunc_to_json(const Trunc& t) {
    Json j = Json::object();
    j["Nq"] = t.nq == INT_MAX ? Json(nullptr) : Json(t.nq);
    j["Nt"] = t.nt == INT_MAX ? Json(nullptr) : Json(t.nt);
    return j;
}

Trunc trunc_from_json(const Json& j) {
    Trunc t;
    if (j.contains("Nq") && !j["Nq"].is_null()) t.nq = j["Nq"].get<int>();
    if (j.contains("Nt") && !j["Nt"].is_null()) t.nt = j["Nt"].get<int>();
    return t;
}

Json series_to_json(const SeriesQT& s) {
    Json j = Json::object();
    j["trunc"] = trunc_to_json(s.trunc());
    Json terms = Json::array();
    for (const auto& [k, c] : s.coeffs()) {
        Json term = Json::object();
        term["q"] = k.first;
        term["t"] = k.second;
        term["c"] = rational_str(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

SeriesQT series_from_json(const Json& j) {
    SeriesQT s(trunc_from_json(j.at("trunc")));
    for (const auto& term : j.at("terms"))
        s.add_coeff(term.at("q").get<int>(), term.at("t").get<int>(), parse_rational(term.at("c").get<std::string>()));
    return s;
}

Json char_to_json(const CharElement& f) {
    Json j = Json::object();
    j["rs"] = f.rs() ? Json(f.rs()->name()) : Json(nullptr);
    j["trunc"] = trunc_to_json(f.trunc());
    Json terms = Json::array();
    for (const auto& [w, s] : f.terms()) {
        Json term = Json::object();
        term["weight"] = w.coords;
        term["series"] = series_to_json(s);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

CharElement char_from_json(const Json& j, const std::shared_ptr<const RootSystem>& rs) {
    CharElement f(rs, trunc_from_json(j.at("trunc")));
    for (const auto& term : j.at("terms")) {
        Weight w(term.at("weight").get<std::vector<int>>());
        require_config(w.rank() == rs->rank(), "weight rank mismatch in serialized element");
        f.add_term(w, series_from_json(term.at("series")));
    }
    return f;
}

AlgebraSpec algebra_spec_from_json(const Json& j) {
    require_config(j.contains("kind"), "coefficient spec needs a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "poly_x") return AlgebraSpec::poly_x();
    if (kind == "poly_x_xi") return AlgebraSpec::poly_x_xi();
    if (kind == "poly_xy") return AlgebraSpec::poly_xy();
    if (kind == "trunc_x") {
        require_config(j.contains("n"), "trunc_x needs 'n'");
        return AlgebraSpec::trunc_x(j.at("n").get<int>());
    }
    if (kind == "explicit") {
        require_config(j.contains("slices"), "explicit spec needs 'slices'");
        std::vector<AlgebraSpec::Slice> dims;
        for (const auto& s : j.at("slices")) {
            AlgebraSpec::Slice sl;
            sl.q = s.value("q", 0);
            sl.t = s.value("t", 0);
            sl.even = s.value("even", 0);
            sl.odd = s.value("odd", 0);
            dims.push_back(sl);
        }
        std::string label = j.value("label", std::string());
        if (label.empty()) {
            for (const auto& s : dims)
                label += std::to_string(s.q) + "." + std::to_string(s.t) + "." + std::to_string(s.even) + "." +
                         std::to_string(s.odd) + ";";
        }
        return AlgebraSpec::explicit_spec(std::move(dims), label);
    }
    throw ConfigError("unknown coefficient kind: " + kind);
}

GradedLieData algebra_config_from_json(const Json& j) {
    require_config(j.contains("root_system"), "algebra config needs 'root_system'");
    auto rs = RootSystem::build(j.at("root_system").get<std::string>());
    require_config(j.contains("Nq"), "algebra config needs 'Nq'");
    int nq = j.at("Nq").get<int>();
    int nt = j.value("Nt", 0);
    require_config(nq >= 1, "Nq must be >= 1");
    require_config(nt >= 0, "Nt must be >= 0");
    require_config(j.contains("coefficients"), "algebra config needs 'coefficients'");
    AlgebraSpec spec = algebra_spec_from_json(j.at("coefficients"));
    GradedLieData data = current_algebra_data(rs, spec, Trunc::bounds(nq, nt));
    return data;
}

GradedLieData load_algebra_config(const std::string& path) { return load_algebra_config(path, -1, -1); }

GradedLieData load_algebra_config(const std::string& path, int nq_override, int nt_override) {
    std::ifstream in(path);
    require_config(in.good(), "cannot read algebra config: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("malformed JSON in " + path + ": " + e.what());
    }
    if (nq_override >= 0) j["Nq"] = nq_override;
    if (nt_override >= 0) j["Nt"] = nt_override;
    return algebra_config_from_json(j);
}

Json macdonald_result_to_json(const MacdonaldResult& r) {
    Json j = Json::object();
    j["lambda"] = r.lambda.coords;
    j["P"] = char_to_json(r.P);
    j["raw_norm"] = series_to_json(r.raw_norm);
    j["norm"] = series_to_json(r.norm);
    j["Q"] = char_to_json(r.Q);
    Json residues = Json::array();
    for (const auto& [w, s] : r.incomparable_residue) {
        Json e = Json::object();
        e["weight"] = w.coords;
        e["series"] = series_to_json(s);
        residues.push_back(std::move(e));
    }
    j["incomparable_residue"] = std::move(residues);
    Json comps = Json::array();
    for (const auto& [w, s] : r.comparable_coeffs) {
        Json e = Json::object();
        e["weight"] = w.coords;
        e["series"] = series_to_json(s);
        comps.push_back(std::move(e));
    }
    j["coefficients"] = std::move(comps);
    return j;
}

MacdonaldResult macdonald_result_from_json(const Json& j, const std::shared_ptr<const RootSystem>& rs) {
    MacdonaldResult r;
    r.lambda = Weight(j.at("lambda").get<std::vector<int>>());
    r.P = char_from_json(j.at("P"), rs);
    r.raw_norm = series_from_json(j.at("raw_norm"));
    r.norm = series_from_json(j.at("norm"));
    r.Q = char_from_json(j.at("Q"), rs);
    for (const auto& e : j.at("incomparable_residue"))
        r.incomparable_residue[Weight(e.at("weight").get<std::vector<int>>())] = series_from_json(e.at("series"));
    for (const auto& e : j.at("coefficients"))
        r.comparable_coeffs[Weight(e.at("weight").get<std::vector<int>>())] = series_from_json(e.at("series"));
    return r;
}

ResultCache ResultCache::load(const std::string& path) {
    ResultCache c;
    std::ifstream in(path);
    if (!in.good()) return c;
    Json j;
    try {
        in >> j;
    } catch (const std::exception&) {
        return c; // unreadable cache: recompute
    }
    if (!j.is_object() || !j.contains("version") || j["version"] != version) return c;
    if (j.contains("entries") && j["entries"].is_object()) c.entries = j["entries"];
    return c;
}

void ResultCache::save(const std::string& path) const {
    Json j = Json::object();
    j["version"] = version;
    j["entries"] = entries;
    std::ofstream out(path);
    require_config(out.good(), "cannot write cache: " + path);
    out << j.dump(2) << "\n";
}

std::string ResultCache::key(const GradedLieData& data, const Weight& lambda) {
    return data.name() + "|" + data.trunc().str() + "|" + lambda.str();
}

} // namespace macd
