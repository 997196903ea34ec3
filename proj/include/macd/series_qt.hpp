#pragma once

#include <climits>
#include <map>
#include <string>
#include <utility>

#include "macd/rational.hpp"

namespace macd {

// Truncation bounds: exponents with q-exp > nq or t-exp > nt are dropped (unknown).
// INT_MAX marks an unbounded direction (exact scalars).
struct Trunc {
    int nq = INT_MAX;
    int nt = INT_MAX;

    static Trunc bounds(int nq, int nt) { return Trunc{nq, nt}; }
    static Trunc unbounded() { return Trunc{}; }

    bool bounded() const { return nq != INT_MAX && nt != INT_MAX; }

    // Arithmetic propagates the minimum of operand bounds.
    Trunc meet(const Trunc& o) const { return Trunc{std::min(nq, o.nq), std::min(nt, o.nt)}; }

    bool operator==(const Trunc& o) const { return nq == o.nq && nt == o.nt; }
    bool operator!=(const Trunc& o) const { return !(*this == o); }

    std::string str() const {
        auto part = [](int v) { return v == INT_MAX ? std::string("*") : std::to_string(v); };
        return "q" + part(nq) + "t" + part(nt);
    }
};

// Truncated bivariate Laurent series in q and t with exact rational coefficients.
// Finitely many negative q-exponents may be present (Laurent tail); no stored
// coefficient is zero.
class SeriesQT {
public:
    using Key = std::pair<int, int>; // (q-exponent, t-exponent)

    SeriesQT() = default;
    explicit SeriesQT(Trunc t) : trunc_(t) {}

    static SeriesQT zero(Trunc t) { return SeriesQT(t); }
    static SeriesQT constant(const Rational& c, Trunc t);
    static SeriesQT monomial(int qe, int te, const Rational& c, Trunc t);
    static SeriesQT one(Trunc t) { return constant(Rational(1), t); }

    const Trunc& trunc() const { return trunc_; }
    const std::map<Key, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int qe, int te) const;
    Rational constant_coeff() const { return coeff(0, 0); }
    // Lowest retained q-exponent (the Laurent tail bound); 0 for the zero series.
    int floor_q() const;
    bool has_negative_exponents() const;

    void set_coeff(int qe, int te, const Rational& c);
    void add_coeff(int qe, int te, const Rational& c);

    SeriesQT& operator+=(const SeriesQT& o);
    SeriesQT& operator-=(const SeriesQT& o);
    SeriesQT operator+(const SeriesQT& o) const;
    SeriesQT operator-(const SeriesQT& o) const;
    SeriesQT operator*(const SeriesQT& o) const;
    SeriesQT operator-() const;
    SeriesQT scaled(const Rational& r) const;

    // Multiplicative inverse up to truncation. Requires bounded truncation,
    // support in nonnegative exponents, and a nonzero constant coefficient.
    SeriesQT invert() const;

    SeriesQT truncated(Trunc t) const;
    SeriesQT at_t_zero() const;
    // Shift exponents by (dq, dt).
    SeriesQT shifted(int dq, int dt) const;

    Rational eval(const Rational& q0, const Rational& t0) const;

    // Equality of retained coefficients after truncating both to the common bounds.
    bool operator==(const SeriesQT& o) const;
    bool operator!=(const SeriesQT& o) const { return !(*this == o); }

    // Human-readable polynomial string, e.g. "1 - q^3 + 2*q*t".
    std::string str() const;

private:
    Trunc trunc_;
    std::map<Key, Rational> c_;

    bool in_bounds(int qe, int te) const { return qe <= trunc_.nq && te <= trunc_.nt; }
};

} // namespace macd
