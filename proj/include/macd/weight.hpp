#pragma once

#include <string>
#include <vector>

#include "macd/errors.hpp"

namespace macd {

// Integral weight in the fundamental-weight basis: coords[i] = <w, alpha_i^vee>.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }

    bool dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }

    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }

    Weight operator+(const Weight& o) const {
        Weight r = *this;
        for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r = *this;
        for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (int& c : r.coords) c = -c;
        return r;
    }
    Weight scaled(int k) const {
        Weight r = *this;
        for (int& c : r.coords) c *= k;
        return r;
    }

    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator!=(const Weight& o) const { return coords != o.coords; }
    // Lexicographic; total order usable as a map key.
    bool operator<(const Weight& o) const {
        if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
        return coords < o.coords;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s;
    }

    // Parses "2" or "2,0"; rank-checked.
    static Weight parse(const std::string& s, int rank) {
        std::vector<int> c;
        std::string cur;
        for (char ch : s + ",") {
            if (ch == ',') {
                require_config(!cur.empty(), "malformed weight string: " + s);
                try {
                    c.push_back(std::stoi(cur));
                } catch (const std::exception&) {
                    throw ConfigError("malformed weight string: " + s);
                }
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                cur += ch;
            }
        }
        require_config(static_cast<int>(c.size()) == rank,
                       "weight " + s + " has wrong rank (expected " + std::to_string(rank) + ")");
        return Weight(std::move(c));
    }
};

} // namespace macd
