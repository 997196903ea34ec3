#include "macd/macdonald.hpp"

#include <algorithm>

namespace macd {

MacdonaldTable::MacdonaldTable(GradedLieData data)
    : data_(std::move(data)), coset_filter_(data_.root_lattice_supported()) {}

std::vector<Weight> MacdonaldTable::lower_weights(const Weight& lambda) const {
    const auto& rs = data_.rs();
    OrderKey key = rs->total_order_key(lambda);
    std::vector<Weight> out;
    for (const auto& mu : rs->dominant_weights_key_leq(lambda)) {
        if (rs->total_order_key(mu) < key && (!coset_filter_ || rs->in_root_lattice(lambda - mu)))
            out.push_back(mu);
    }
    return out; // already ascending
}

const MacdonaldResult& MacdonaldTable::polynomial(const Weight& lambda) {
    std::lock_guard<std::mutex> lock(mu_);
    return polynomial_locked(lambda);
}

const MacdonaldResult& MacdonaldTable::polynomial_locked(const Weight& lambda) {
    require_config(lambda.dominant(), "macdonald_polynomial needs a dominant weight, got " + lambda.str());
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;

    const auto& rs = data_.rs();
    Trunc tr = data_.trunc();

    MacdonaldResult res;
    res.lambda = lambda;
    res.P = monomial_sym(rs, lambda, tr);
    for (const auto& mu : lower_weights(lambda)) {
        const MacdonaldResult& lower = polynomial_locked(mu);
        SeriesQT c = pair_characters(data_, res.P, lower.P) * lower.norm;
        if (rs->dominance_leq(mu, lambda)) {
            if (!c.is_zero()) res.comparable_coeffs[mu] = c.scaled(Rational(-1));
        } else {
            // Logged whether zero or not: the residue against incomparable
            // weights is itself a quantity of interest.
            res.incomparable_residue[mu] = c.scaled(Rational(-1));
        }
        if (!c.is_zero()) res.P -= lower.P.scaled(c);
    }
    res.raw_norm = pair_characters(data_, res.P, res.P);
    require_internal(res.raw_norm.constant_coeff() != 0,
                     "norm of P_" + lambda.str() + " has vanishing constant coefficient");
    res.norm = res.raw_norm.invert();
    res.Q = res.P.scaled(res.norm);
    auto [ins, ok] = memo_.emplace(lambda, std::move(res));
    return ins->second;
}

void MacdonaldTable::restore(MacdonaldResult r) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(r.lambda, std::move(r));
}

bool MacdonaldTable::cached(const Weight& lambda) const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.count(lambda) > 0;
}

CharElement MacdonaldTable::projective_character(const Weight& lambda) const {
    const auto& rs = data_.rs();
    Trunc tr = data_.trunc();
    CharElement out = schur_char(rs, lambda, tr);
    for (const auto& [deg, slice] : data_.table()) {
        auto [a, b] = deg;
        for (const auto& [w, mult] : slice) {
            auto [even, odd] = mult;
            if (even > 0) {
                // PBW factor (1 - q^a t^b e^w)^{-even}, truncating geometric series.
                CharElement g(rs, tr);
                int kmax = INT_MAX;
                if (a > 0) kmax = tr.nq / a;
                if (b > 0) kmax = std::min(kmax, tr.nt / b);
                require_config(kmax != INT_MAX, "projective character needs graded generators");
                for (int j = 0; j <= kmax; ++j)
                    g.add_term(w.scaled(j), SeriesQT::monomial(a * j, b * j, Rational(1), tr));
                for (long m = 0; m < even; ++m) out = out * g;
            }
            if (odd > 0) {
                CharElement f(rs, tr);
                f.add_term(Weight::zero(rs->rank()), SeriesQT::one(tr));
                f.add_term(w, SeriesQT::monomial(a, b, Rational(-1), tr));
                for (long m = 0; m < odd; ++m) out = out * f;
            }
        }
    }
    return out;
}

BggTransition MacdonaldTable::bgg_transition(const Weight& lambda_max) {
    require_config(lambda_max.dominant(), "bgg_transition needs a dominant weight");
    const auto& rs = data_.rs();
    BggTransition tr;
    tr.weights = rs->dominant_weights_key_leq(lambda_max);

    // Path (a): m_{la,mu} = <chi(Proj la), P_mu>.
    std::vector<CharElement> proj;
    proj.reserve(tr.weights.size());
    for (const auto& la : tr.weights) proj.push_back(projective_character(la));
    tr.m.assign(tr.weights.size(), {});
    for (size_t i = 0; i < tr.weights.size(); ++i) {
        tr.m[i].reserve(tr.weights.size());
        for (const auto& mu : tr.weights) tr.m[i].push_back(pair_characters(data_, proj[i], polynomial(mu).P));
    }

    // Path (b): expand chi(Proj la) over the Q basis covering its full
    // truncated dominant support.
    for (size_t i = 0; i < tr.weights.size(); ++i) {
        std::vector<Weight> support = proj[i].dominant_support();
        require_internal(!support.empty(), "projective character with empty dominant support");
        Weight top = support.front();
        OrderKey topkey = data_.rs()->total_order_key(top);
        std::vector<Weight> all = rs->dominant_weights_key_leq(top);
        if (coset_filter_) {
            std::vector<Weight> filtered;
            for (const auto& w : all)
                if (rs->in_root_lattice(w - tr.weights[i])) filtered.push_back(w);
            all = filtered;
        }
        std::reverse(all.begin(), all.end()); // descending
        std::vector<const CharElement*> qs;
        qs.reserve(all.size());
        for (const auto& w : all) qs.push_back(&polynomial(w).Q);
        std::vector<TriangularBasisElem> basis;
        for (size_t k = 0; k < all.size(); ++k) basis.push_back({all[k], qs[k]});
        std::vector<SeriesQT> coeffs = expand_in_triangular_basis(proj[i], basis);
        std::map<Weight, SeriesQT> by_weight;
        for (size_t k = 0; k < all.size(); ++k) by_weight[all[k]] = coeffs[k];
        for (size_t j = 0; j < tr.weights.size(); ++j) {
            SeriesQT expected = tr.m[i][j];
            auto itc = by_weight.find(tr.weights[j]);
            SeriesQT got = itc == by_weight.end() ? SeriesQT::zero(data_.trunc()) : itc->second;
            require_internal(expected == got, "bgg_transition path disagreement at (" + tr.weights[i].str() +
                                                  "; " + tr.weights[j].str() + "): pairing " + expected.str() +
                                                  " vs expansion " + got.str());
        }
    }
    return tr;
}

BggReport MacdonaldTable::verify_bgg(const Weight& lambda_max) {
    BggTransition tr = bgg_transition(lambda_max);
    BggReport rep;
    for (size_t j = 0; j < tr.weights.size(); ++j) {
        std::map<Weight, SeriesQT> schur = schur_expansion(polynomial(tr.weights[j]).P);
        for (size_t i = 0; i < tr.weights.size(); ++i) {
            BggRow row;
            row.lambda = tr.weights[i];
            row.mu = tr.weights[j];
            const SeriesQT& m = tr.m[i][j];
            for (const auto& [k, c] : m.coeffs()) {
                if (!is_nonneg_integer(c)) {
                    row.pass = false;
                    row.detail = "coefficient at q^" + std::to_string(k.first) + " t^" +
                                 std::to_string(k.second) + " is " + rational_str(c) +
                                 " (not a nonnegative integer)";
                    break;
                }
            }
            if (row.pass) {
                auto its = schur.find(tr.weights[i]);
                SeriesQT expected =
                    its == schur.end() ? SeriesQT::zero(data_.trunc()) : its->second;
                if (!(m == expected)) {
                    row.pass = false;
                    row.detail = "pairing value " + m.str() + " differs from the Schur coefficient " +
                                 expected.str();
                }
            }
            rep.all_pass = rep.all_pass && row.pass;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

NormProductReport verify_norm_product(std::shared_ptr<const RootSystem> rs, const Weight& lambda_max, int Nq) {
    Trunc tr = Trunc::bounds(Nq, 0);
    MacdonaldTable table(current_algebra_data(rs, AlgebraSpec::poly_x(), tr));
    NormProductReport rep;
    for (const auto& la : rs->dominant_weights_key_leq(lambda_max)) {
        NormProductRow row;
        row.lambda = la;
        row.got = table.norm(la);
        SeriesQT prod = SeriesQT::one(tr);
        for (int i = 0; i < rs->rank(); ++i) {
            for (int j = 1; j <= la.coords[i]; ++j) {
                SeriesQT f = SeriesQT::one(tr);
                f.add_coeff(j, 0, Rational(-1));
                prod = prod * f;
            }
        }
        row.expected = prod.invert();
        row.pass = row.got == row.expected;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace macd
