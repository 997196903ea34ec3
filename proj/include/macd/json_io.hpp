#pragma once

#include <string>

#include "json.hpp"

#include "macd/char_element.hpp"
#include "macd/lie_data.hpp"
#include "macd/macdonald.hpp"

namespace macd {

using Json = nlohmann::ordered_json;

// Canonical forms: sorted keys (weight coords, then q, t exponents),
// rationals as "num/den" strings. Identical values serialize to identical
// bytes.
Json series_to_json(const SeriesQT& s);
SeriesQT series_from_json(const Json& j);

Json char_to_json(const CharElement& f);
CharElement char_from_json(const Json& j, const std::shared_ptr<const RootSystem>& rs);

Json trunc_to_json(const Trunc& t);
Trunc trunc_from_json(const Json& j);

// Algebra configs: {"root_system": "A1", "coefficients": {"kind": "poly_x_xi"},
// "Nq": 8, "Nt": 2, "name": optional}.
AlgebraSpec algebra_spec_from_json(const Json& j);
GradedLieData algebra_config_from_json(const Json& j);
GradedLieData load_algebra_config(const std::string& path);
// Truncation override; <0 keeps the file's value.
GradedLieData load_algebra_config(const std::string& path, int nq_override, int nt_override);

Json macdonald_result_to_json(const MacdonaldResult& r);
MacdonaldResult macdonald_result_from_json(const Json& j, const std::shared_ptr<const RootSystem>& rs);

// Versioned result cache; a version mismatch drops the contents.
struct ResultCache {
    static constexpr int version = 1;
    Json entries = Json::object();
    bool dirty = false;

    static ResultCache load(const std::string& path);
    void save(const std::string& path) const;
    static std::string key(const GradedLieData& data, const Weight& lambda);
};

} // namespace macd
