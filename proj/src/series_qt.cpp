#include "macd/series_qt.hpp"

#include <sstream>

namespace macd {

SeriesQT SeriesQT::constant(const Rational& c, Trunc t) { return monomial(0, 0, c, t); }

SeriesQT SeriesQT::monomial(int qe, int te, const Rational& c, Trunc t) {
    SeriesQT s(t);
    s.set_coeff(qe, te, c);
    return s;
}

Rational SeriesQT::coeff(int qe, int te) const {
    auto it = c_.find({qe, te});
    return it == c_.end() ? Rational(0) : it->second;
}

int SeriesQT::floor_q() const {
    int f = 0;
    bool first = true;
    for (const auto& [k, v] : c_) {
        if (first || k.first < f) f = k.first;
        first = false;
    }
    return f;
}

bool SeriesQT::has_negative_exponents() const {
    for (const auto& [k, v] : c_)
        if (k.first < 0 || k.second < 0) return true;
    return false;
}

void SeriesQT::set_coeff(int qe, int te, const Rational& c) {
    if (!in_bounds(qe, te)) return;
    if (c == 0)
        c_.erase({qe, te});
    else
        c_[{qe, te}] = c;
}

void SeriesQT::add_coeff(int qe, int te, const Rational& c) {
    if (!in_bounds(qe, te) || c == 0) return;
    auto [it, inserted] = c_.emplace(Key{qe, te}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

SeriesQT& SeriesQT::operator+=(const SeriesQT& o) {
    *this = truncated(trunc_.meet(o.trunc_));
    for (const auto& [k, v] : o.c_) add_coeff(k.first, k.second, v);
    return *this;
}

SeriesQT& SeriesQT::operator-=(const SeriesQT& o) {
    *this = truncated(trunc_.meet(o.trunc_));
    for (const auto& [k, v] : o.c_) add_coeff(k.first, k.second, Rational(-v));
    return *this;
}

SeriesQT SeriesQT::operator+(const SeriesQT& o) const {
    SeriesQT r = *this;
    r += o;
    return r;
}

SeriesQT SeriesQT::operator-(const SeriesQT& o) const {
    SeriesQT r = *this;
    r -= o;
    return r;
}

SeriesQT SeriesQT::operator*(const SeriesQT& o) const {
    SeriesQT r(trunc_.meet(o.trunc_));
    for (const auto& [ka, va] : c_)
        for (const auto& [kb, vb] : o.c_)
            r.add_coeff(ka.first + kb.first, ka.second + kb.second, Rational(va * vb));
    return r;
}

SeriesQT SeriesQT::operator-() const {
    SeriesQT r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

SeriesQT SeriesQT::scaled(const Rational& c) const {
    SeriesQT r(trunc_);
    if (c == 0) return r;
    r.c_ = c_;
    for (auto& [k, v] : r.c_) v *= c;
    return r;
}

SeriesQT SeriesQT::invert() const {
    require_config(trunc_.bounded(), "series inversion requires finite truncation bounds");
    require_config(!has_negative_exponents(), "series inversion requires nonnegative exponents");
    Rational c00 = constant_coeff();
    require_internal(c00 != 0, "series inversion requires a nonzero constant coefficient: " + str());
    SeriesQT b(trunc_);
    Rational inv0 = Rational(1) / c00;
    b.set_coeff(0, 0, inv0);
    // b_{ij} = -(1/a00) * sum_{(k,l) < (i,j)} a_{i-k, j-l} b_{kl}, ordered by total degree.
    for (int d = 1; d <= trunc_.nq + trunc_.nt; ++d) {
        for (int i = std::max(0, d - trunc_.nt); i <= std::min(d, trunc_.nq); ++i) {
            int j = d - i;
            Rational acc(0);
            for (const auto& [k, v] : c_) {
                int bi = i - k.first, bj = j - k.second;
                if (k.first == 0 && k.second == 0) continue;
                if (bi < 0 || bj < 0) continue;
                Rational bc = b.coeff(bi, bj);
                if (bc != 0) acc += v * bc;
            }
            if (acc != 0) b.set_coeff(i, j, Rational(-inv0 * acc));
        }
    }
    return b;
}

SeriesQT SeriesQT::truncated(Trunc t) const {
    SeriesQT r(trunc_.meet(t));
    for (const auto& [k, v] : c_)
        if (k.first <= r.trunc_.nq && k.second <= r.trunc_.nt) r.c_[k] = v;
    return r;
}

SeriesQT SeriesQT::at_t_zero() const {
    SeriesQT r(trunc_);
    for (const auto& [k, v] : c_)
        if (k.second == 0) r.c_[k] = v;
    return r;
}

SeriesQT SeriesQT::shifted(int dq, int dt) const {
    SeriesQT r(trunc_);
    for (const auto& [k, v] : c_) r.add_coeff(k.first + dq, k.second + dt, v);
    return r;
}

Rational SeriesQT::eval(const Rational& q0, const Rational& t0) const {
    Rational acc(0);
    for (const auto& [k, v] : c_) acc += v * rational_pow(q0, k.first) * rational_pow(t0, k.second);
    return acc;
}

bool SeriesQT::operator==(const SeriesQT& o) const {
    Trunc t = trunc_.meet(o.trunc_);
    return truncated(t).c_ == o.truncated(t).c_;
}

std::string SeriesQT::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        Rational a = v;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        auto pw = [](const std::string& var, int e) {
            if (e == 0) return std::string();
            if (e == 1) return var;
            return var + "^" + std::to_string(e);
        };
        mono = pw("q", k.first);
        std::string tm = pw("t", k.second);
        if (!mono.empty() && !tm.empty()) mono += "*";
        mono += tm;
        if (mono.empty()) {
            os << (is_integer(a) ? a.get_num().get_str() : rational_str(a));
        } else {
            if (a != 1) os << (is_integer(a) ? a.get_num().get_str() : rational_str(a)) << "*";
            os << mono;
        }
    }
    return os.str();
}

} // namespace macd
