#pragma once

#include <gmpxx.h>

#include <string>

#include "macd/errors.hpp"

namespace macd {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    require_config(den != 0, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "num/den" form, den >= 1, always including the denominator.
inline std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "num/den" or a bare integer string.
inline Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            Rational r(mpz_class(s));
            return r;
        }
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        require_config(den != 0, "rational with zero denominator: " + s);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ConfigError("unparseable rational: " + s);
    }
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rational& r) { return is_integer(r) && r >= 0; }

inline long to_long(const Rational& r) {
    require_internal(is_integer(r) && r.get_num().fits_slong_p(), "rational does not fit a long: " + rational_str(r));
    return r.get_num().get_si();
}

// r^k for integer k (k < 0 requires r != 0).
inline Rational rational_pow(const Rational& r, long k) {
    if (k == 0) return Rational(1);
    Rational base = r;
    if (k < 0) {
        require_config(r != 0, "negative power of zero");
        base = Rational(1) / r;
        k = -k;
    }
    Rational out(1);
    for (long i = 0; i < k; ++i) out *= base;
    return out;
}

} // namespace macd
