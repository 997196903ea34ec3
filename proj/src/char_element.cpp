#include "macd/char_element.hpp"

#include <algorithm>
#include <sstream>

namespace macd {

CharElement CharElement::one(std::shared_ptr<const RootSystem> rs, Trunc t) {
    CharElement e(rs, t);
    e.add_term(Weight::zero(rs->rank()), SeriesQT::one(t));
    return e;
}

CharElement CharElement::exponential(std::shared_ptr<const RootSystem> rs, const Weight& w, const SeriesQT& c) {
    CharElement e(rs, c.trunc());
    e.add_term(w, c);
    return e;
}

SeriesQT CharElement::coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? SeriesQT::zero(trunc_) : it->second;
}

void CharElement::add_term(const Weight& w, const SeriesQT& s) {
    SeriesQT tr = s.truncated(trunc_);
    if (tr.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, tr);
    if (!inserted) {
        it->second += tr;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CharElement& CharElement::operator+=(const CharElement& o) {
    require_internal(!rs_ || !o.rs_ || rs_->name() == o.rs_->name(), "mixing root systems");
    if (!rs_) rs_ = o.rs_;
    *this = truncated(trunc_.meet(o.trunc_));
    for (const auto& [w, s] : o.terms_) add_term(w, s);
    return *this;
}

CharElement& CharElement::operator-=(const CharElement& o) {
    *this += -o;
    return *this;
}

CharElement CharElement::operator+(const CharElement& o) const {
    CharElement r = *this;
    r += o;
    return r;
}

CharElement CharElement::operator-(const CharElement& o) const {
    CharElement r = *this;
    r -= o;
    return r;
}

CharElement CharElement::operator*(const CharElement& o) const {
    require_internal(!rs_ || !o.rs_ || rs_->name() == o.rs_->name(), "mixing root systems");
    CharElement r(rs_ ? rs_ : o.rs_, trunc_.meet(o.trunc_));
    for (const auto& [wa, sa] : terms_)
        for (const auto& [wb, sb] : o.terms_) r.add_term(wa + wb, sa * sb);
    return r;
}

CharElement CharElement::operator-() const {
    CharElement r = *this;
    for (auto& [w, s] : r.terms_) s = -s;
    return r;
}

CharElement CharElement::scaled(const SeriesQT& s) const {
    CharElement r(rs_, trunc_.meet(s.trunc()));
    for (const auto& [w, c] : terms_) r.add_term(w, c * s);
    return r;
}

CharElement CharElement::scaled(const Rational& c) const {
    CharElement r(rs_, trunc_);
    for (const auto& [w, s] : terms_) r.add_term(w, s.scaled(c));
    return r;
}

CharElement CharElement::truncated(Trunc t) const {
    CharElement r(rs_, trunc_.meet(t));
    for (const auto& [w, s] : terms_) r.add_term(w, s);
    return r;
}

CharElement CharElement::at_t_zero() const {
    CharElement r(rs_, trunc_);
    for (const auto& [w, s] : terms_) r.add_term(w, s.at_t_zero());
    return r;
}

bool CharElement::w_invariant() const {
    if (!rs_) return true;
    for (const auto& [w, s] : terms_) {
        for (int i = 0; i < rs_->rank(); ++i) {
            if (coeff(rs_->simple_reflection(i, w)) != s) return false;
        }
    }
    return true;
}

std::vector<Weight> CharElement::dominant_support() const {
    std::vector<Weight> out;
    for (const auto& [w, s] : terms_)
        if (w.dominant()) out.push_back(w);
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        return rs_->total_order_key(b) < rs_->total_order_key(a);
    });
    return out;
}

bool CharElement::operator==(const CharElement& o) const {
    Trunc t = trunc_.meet(o.trunc_);
    CharElement a = truncated(t), b = o.truncated(t);
    return a.terms_ == b.terms_;
}

std::string CharElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, s] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << s.str() << ")*e[" << w.str() << "]";
    }
    return os.str();
}

CharElement monomial_sym(std::shared_ptr<const RootSystem> rs, const Weight& lambda, Trunc t) {
    require_config(lambda.dominant(), "monomial_sym needs a dominant weight, got " + lambda.str());
    CharElement e(rs, t);
    for (const auto& w : rs->weyl_orbit(lambda)) e.add_term(w, SeriesQT::one(t));
    return e;
}

CharElement schur_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda, Trunc t) {
    require_config(lambda.dominant(), "schur_char needs a dominant weight, got " + lambda.str());
    CharElement e(rs, t);
    for (const auto& [mu, m] : rs->irreducible_multiplicities(lambda)) {
        for (const auto& w : rs->weyl_orbit(mu)) e.add_term(w, SeriesQT::constant(Rational(m), t));
    }
    return e;
}

CharElement bar_involution(const CharElement& f) {
    CharElement r(f.rs(), f.trunc());
    for (const auto& [w, s] : f.terms()) r.add_term(-w, s);
    return r;
}

SeriesQT constant_term(const CharElement& f) {
    Weight z = f.rs() ? Weight::zero(f.rs()->rank()) : Weight();
    return f.coeff(z);
}

std::vector<SeriesQT> expand_in_triangular_basis(const CharElement& f,
                                                 const std::vector<TriangularBasisElem>& basis) {
    const auto& rs = f.rs();
    for (size_t i = 0; i + 1 < basis.size(); ++i) {
        require_config(rs->total_order_key(basis[i + 1].lead) < rs->total_order_key(basis[i].lead),
                       "triangular basis must be ordered descending by total order key");
    }
    CharElement residual = f;
    std::vector<SeriesQT> out;
    out.reserve(basis.size());
    for (const auto& b : basis) {
        SeriesQT lead = b.elem->coeff(b.lead);
        require_config(lead.constant_coeff() != 0,
                       "triangular basis lead at " + b.lead.str() + " is not a unit series");
        SeriesQT c = residual.coeff(b.lead) * lead.invert();
        out.push_back(c);
        if (!c.is_zero()) residual -= b.elem->scaled(c);
    }
    if (!residual.is_zero()) {
        // Report the largest offending weight.
        Weight bad = residual.terms().begin()->first;
        OrderKey bk = rs->total_order_key(bad);
        for (const auto& [w, s] : residual.terms()) {
            OrderKey k = rs->total_order_key(w);
            if (bk < k) {
                bad = w;
                bk = k;
            }
        }
        throw ExpansionError(bad);
    }
    return out;
}

std::map<Weight, SeriesQT> schur_expansion(const CharElement& f) {
    std::vector<Weight> doms = f.dominant_support();
    if (doms.empty()) return {};
    // Basis: Schur characters at every dominant weight with key <= the top one.
    std::vector<Weight> all = f.rs()->dominant_weights_key_leq(doms.front());
    std::reverse(all.begin(), all.end());
    std::vector<CharElement> schurs;
    schurs.reserve(all.size());
    for (const auto& w : all) schurs.push_back(schur_char(f.rs(), w, f.trunc()));
    std::vector<TriangularBasisElem> basis;
    for (size_t i = 0; i < all.size(); ++i) basis.push_back({all[i], &schurs[i]});
    std::vector<SeriesQT> coeffs = expand_in_triangular_basis(f, basis);
    std::map<Weight, SeriesQT> out;
    for (size_t i = 0; i < all.size(); ++i)
        if (!coeffs[i].is_zero()) out[all[i]] = coeffs[i];
    return out;
}

} // namespace macd
