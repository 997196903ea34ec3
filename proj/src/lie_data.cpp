#include "macd/lie_data.hpp"

#include <algorithm>

namespace macd {

std::string AlgebraSpec::label() const {
    switch (kind) {
    case Kind::PolyX: return "poly_x";
    case Kind::PolyXXi: return "poly_x_xi";
    case Kind::TruncX: return "trunc_x" + std::to_string(trunc_n);
    case Kind::PolyXY: return "poly_xy";
    case Kind::Explicit: return "explicit:" + explicit_label;
    }
    return "?";
}

AlgebraSpec AlgebraSpec::trunc_x(int n) {
    require_config(n >= 1, "trunc_x needs n >= 1");
    AlgebraSpec s;
    s.kind = Kind::TruncX;
    s.trunc_n = n;
    return s;
}

AlgebraSpec AlgebraSpec::explicit_spec(std::vector<Slice> dims, std::string label) {
    AlgebraSpec s;
    s.kind = Kind::Explicit;
    s.explicit_dims = std::move(dims);
    s.explicit_label = std::move(label);
    for (const auto& d : s.explicit_dims) {
        require_config(d.even >= 0 && d.odd >= 0, "negative dimensions in explicit algebra spec");
        require_config(d.q >= 0 && d.t >= 0 && d.q + d.t >= 1,
                       "explicit algebra slices need q >= 0, t >= 0, (q,t) != (0,0)");
    }
    return s;
}

void GradedLieData::add_entry(int q_deg, int t_deg, const Weight& w, long even_mult, long odd_mult) {
    require_config(even_mult >= 0 && odd_mult >= 0, "negative multiplicity in algebra table");
    require_config(q_deg >= 0 && t_deg >= 0 && q_deg + t_deg >= 1,
                   "table entries need q_deg >= 0, t_deg >= 0 and (q_deg, t_deg) != (0, 0)");
    if (even_mult == 0 && odd_mult == 0) return;
    if (q_deg > trunc_.nq || t_deg > trunc_.nt) return;
    auto& cell = table_[{q_deg, t_deg}][w];
    cell.first += even_mult;
    cell.second += odd_mult;
}

void GradedLieData::validate() const {
    for (const auto& [deg, slice] : table_) {
        for (const auto& [w, mult] : slice) {
            for (int i = 0; i < rs_->rank(); ++i) {
                Weight r = rs_->simple_reflection(i, w);
                auto it = slice.find(r);
                require_internal(it != slice.end() && it->second == mult,
                                 name_ + ": slice (" + std::to_string(deg.first) + "," +
                                     std::to_string(deg.second) + ") is not W-stable at " + w.str());
            }
            if (has_anti_involution_) {
                auto it = slice.find(-w);
                require_internal(it != slice.end() && it->second == mult,
                                 name_ + ": anti-involution symmetry fails at " + w.str());
            }
        }
    }
}

bool GradedLieData::root_lattice_supported() const {
    for (const auto& [deg, slice] : table_)
        for (const auto& [w, mult] : slice)
            if (!rs_->in_root_lattice(w)) return false;
    return true;
}

namespace {

// Adjoint weight multiset: every root once, weight zero with multiplicity rank.
std::vector<std::pair<Weight, long>> adjoint_weights(const RootSystem& rs) {
    std::vector<std::pair<Weight, long>> out;
    for (const auto& a : rs.positive_roots()) {
        out.push_back({a, 1});
        out.push_back({-a, 1});
    }
    out.push_back({Weight::zero(rs.rank()), rs.rank()});
    return out;
}

} // namespace

GradedLieData current_algebra_data(std::shared_ptr<const RootSystem> rs, const AlgebraSpec& spec, Trunc t) {
    require_config(t.bounded(), "current_algebra_data needs finite truncation bounds");
    GradedLieData data(rs, rs->name() + ":" + spec.label(), t, true);
    auto adj = adjoint_weights(*rs);
    auto add_slice = [&](int q, int tt, long even, long odd) {
        for (const auto& [w, m] : adj) data.add_entry(q, tt, w, even * m, odd * m);
    };
    switch (spec.kind) {
    case AlgebraSpec::Kind::PolyX:
        for (int r = 1; r <= t.nq; ++r) add_slice(r, 0, 1, 0);
        break;
    case AlgebraSpec::Kind::PolyXXi:
        for (int r = 1; r <= t.nq; ++r) add_slice(r, 0, 1, 0);
        if (t.nt >= 1)
            for (int r = 0; r <= t.nq; ++r) add_slice(r, 1, 0, 1);
        break;
    case AlgebraSpec::Kind::TruncX:
        for (int r = 1; r <= std::min(spec.trunc_n - 1, t.nq); ++r) add_slice(r, 0, 1, 0);
        break;
    case AlgebraSpec::Kind::PolyXY:
        for (int r = 1; r <= t.nq; ++r) add_slice(r, 0, r + 1, 0);
        break;
    case AlgebraSpec::Kind::Explicit:
        for (const auto& s : spec.explicit_dims) add_slice(s.q, s.t, s.even, s.odd);
        break;
    }
    data.validate();
    return data;
}

GradedLieData t3_data(Trunc t) {
    auto rs = RootSystem::build('A', 2);
    GradedLieData data(rs, "t3", t, false);
    // Vector representation weights at q^1, dual weights at q^2.
    std::vector<Weight> vec = {Weight({1, 0}), Weight({-1, 1}), Weight({0, -1})};
    for (const auto& w : vec) {
        data.add_entry(1, 0, w, 1, 0);
        data.add_entry(2, 0, -w, 1, 0);
    }
    data.validate();
    return data;
}

CharElement pairing_kernel(const GradedLieData& data) {
    const auto& rs = data.rs();
    Trunc t = data.trunc();
    require_config(t.bounded(), "pairing_kernel needs finite truncation bounds");
    CharElement k = CharElement::one(rs, t);
    // Classical factor over all roots.
    for (const auto& a : rs->positive_roots()) {
        for (const Weight& r : {a, -a}) {
            CharElement f = CharElement::one(rs, t);
            f.add_term(r, SeriesQT::constant(Rational(-1), t));
            k = k * f;
        }
    }
    for (const auto& [deg, slice] : data.table()) {
        auto [a, b] = deg;
        for (const auto& [w, mult] : slice) {
            auto [even, odd] = mult;
            if (even > 0) {
                CharElement f(rs, t);
                f.add_term(Weight::zero(rs->rank()), SeriesQT::one(t));
                f.add_term(w, SeriesQT::monomial(a, b, Rational(-1), t));
                for (long m = 0; m < even; ++m) k = k * f;
            }
            if (odd > 0) {
                // Geometric expansion of (1 - q^a t^b e^w)^{-1}; (a,b) != (0,0)
                // is enforced at table construction, so the series terminates.
                CharElement g(rs, t);
                int kmax = INT_MAX;
                if (a > 0) kmax = t.nq / a;
                if (b > 0) kmax = std::min(kmax, t.nt / b);
                require_internal(kmax != INT_MAX, "non-truncating geometric factor");
                for (int j = 0; j <= kmax; ++j)
                    g.add_term(w.scaled(j), SeriesQT::monomial(a * j, b * j, Rational(1), t));
                for (long m = 0; m < odd; ++m) k = k * g;
            }
        }
    }
    return k;
}

} // namespace macd
