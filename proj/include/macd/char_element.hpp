#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "macd/root_system.hpp"
#include "macd/series_qt.hpp"
#include "macd/weight.hpp"

namespace macd {

// Element of Z[P] tensored with truncated (q,t)-series: finitely supported
// map Weight -> SeriesQT. Multiplication convolves weights additively and
// series multiplicatively. Immutable value semantics; all series share the
// element's truncation.
class CharElement {
public:
    CharElement() = default;
    CharElement(std::shared_ptr<const RootSystem> rs, Trunc t) : rs_(std::move(rs)), trunc_(t) {}

    static CharElement zero(std::shared_ptr<const RootSystem> rs, Trunc t) { return CharElement(rs, t); }
    static CharElement one(std::shared_ptr<const RootSystem> rs, Trunc t);
    // c * e^w
    static CharElement exponential(std::shared_ptr<const RootSystem> rs, const Weight& w, const SeriesQT& c);

    const std::shared_ptr<const RootSystem>& rs() const { return rs_; }
    const Trunc& trunc() const { return trunc_; }
    const std::map<Weight, SeriesQT>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SeriesQT coeff(const Weight& w) const;
    void add_term(const Weight& w, const SeriesQT& s);

    CharElement& operator+=(const CharElement& o);
    CharElement& operator-=(const CharElement& o);
    CharElement operator+(const CharElement& o) const;
    CharElement operator-(const CharElement& o) const;
    CharElement operator*(const CharElement& o) const;
    CharElement operator-() const;
    CharElement scaled(const SeriesQT& s) const;
    CharElement scaled(const Rational& r) const;

    CharElement truncated(Trunc t) const;
    CharElement at_t_zero() const;
    bool w_invariant() const;
    // Weights in the support that are dominant, descending by total_order_key.
    std::vector<Weight> dominant_support() const;

    bool operator==(const CharElement& o) const;
    bool operator!=(const CharElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::shared_ptr<const RootSystem> rs_;
    Trunc trunc_;
    std::map<Weight, SeriesQT> terms_;
};

// m_lambda: sum of e^mu over the Weyl orbit of a dominant lambda.
CharElement monomial_sym(std::shared_ptr<const RootSystem> rs, const Weight& lambda, Trunc t);

// Character of the irreducible L(lambda), multiplicities via Freudenthal.
CharElement schur_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda, Trunc t);

// e^mu -> e^{-mu}; series coefficients untouched.
CharElement bar_involution(const CharElement& f);

// The series attached to weight 0.
SeriesQT constant_term(const CharElement& f);

struct TriangularBasisElem {
    Weight lead;
    const CharElement* elem;
};

struct ExpansionError : std::runtime_error {
    Weight offending;
    explicit ExpansionError(const Weight& w)
        : std::runtime_error("expansion failure: residual support at weight " + w.str()), offending(w) {}
};

// Back-substitution from the top weight downward. Basis must be ordered
// descending by total_order_key; each lead coefficient must be a unit series.
std::vector<SeriesQT> expand_in_triangular_basis(const CharElement& f,
                                                 const std::vector<TriangularBasisElem>& basis);

// Coefficients of f in the Schur basis over the dominant support of f.
std::map<Weight, SeriesQT> schur_expansion(const CharElement& f);

} // namespace macd
