#include "macd/root_system.hpp"

#include <algorithm>
#include <set>

#include "macd/linalg.hpp"

namespace macd {

namespace {

std::vector<std::vector<int>> cartan_for(char type, int n) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B': // alpha_n short
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        c[n - 1][n - 2] = -2;
        break;
    case 'C': // alpha_n long
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        c[n - 2][n - 1] = -2;
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        // Bourbaki: node 2 attached to node 4; chain 1-3-4-5-6(-7)(-8).
        link(0, 2);
        link(1, 3);
        link(2, 3);
        for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'F':
        link(0, 1);
        link(2, 3);
        c[1][2] = -2; // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        c[2][1] = -1;
        break;
    case 'G':
        c[0][1] = -3; // alpha_1 short, alpha_2 long
        c[1][0] = -1;
        break;
    default:
        throw ConfigError(std::string("unknown Lie type: ") + type);
    }
    return c;
}

unsigned long long factorial(int n) {
    unsigned long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

unsigned long long weyl_order_for(char type, int n) {
    switch (type) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1ull << n) * factorial(n);
    case 'D': return (1ull << (n - 1)) * factorial(n);
    case 'E':
        if (n == 6) return 51840ull;
        if (n == 7) return 2903040ull;
        return 696729600ull;
    case 'F': return 1152ull;
    case 'G': return 12ull;
    }
    return 0;
}

bool valid_type_rank(char type, int n) {
    switch (type) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    }
    return false;
}

} // namespace

std::shared_ptr<const RootSystem> RootSystem::build(char lie_type, int rank, int max_rank) {
    require_config(valid_type_rank(lie_type, rank),
                   std::string("invalid simple type: ") + lie_type + std::to_string(rank));
    require_config(rank <= max_rank,
                   "rank " + std::to_string(rank) + " exceeds the configured cap " + std::to_string(max_rank));
    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->type_ = lie_type;
    rs->rank_ = rank;
    rs->cartan_ = cartan_for(lie_type, rank);
    rs->weyl_order_ = weyl_order_for(lie_type, rank);

    // alpha_j = sum_i C_{ij} omega_i: column j.
    for (int j = 0; j < rank; ++j) {
        std::vector<int> col(rank);
        for (int i = 0; i < rank; ++i) col[i] = rs->cartan_[i][j];
        rs->simple_roots_.push_back(Weight(col));
    }

    // Inverse Cartan matrix, exact.
    {
        Mat a(rank, std::vector<Rational>(rank));
        Mat id(rank, std::vector<Rational>(rank, Rational(0)));
        for (int i = 0; i < rank; ++i) {
            id[i][i] = 1;
            for (int j = 0; j < rank; ++j) a[i][j] = rs->cartan_[i][j];
        }
        Mat inv;
        bool ok = mat_solve_multi(a, id, inv);
        require_internal(ok, "Cartan matrix not invertible");
        rs->cartan_inv_ = inv;
    }

    // Symmetrizers: positive solution of d_i C_{ij} = d_j C_{ji}, short roots at 1.
    {
        std::vector<Rational> d(rank, Rational(0));
        d[0] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) {
                    if (i == j || rs->cartan_[i][j] == 0) continue;
                    if (d[i] != 0 && d[j] == 0) {
                        d[j] = d[i] * Rational(rs->cartan_[i][j]) / Rational(rs->cartan_[j][i]);
                        changed = true;
                    }
                }
        }
        Rational mn(0);
        for (auto& x : d) {
            require_internal(x > 0, "symmetrizer solve failed");
            if (mn == 0 || x < mn) mn = x;
        }
        for (auto& x : d) x /= mn;
        rs->sym_ = d;
    }

    // All roots: closure of the simple roots under simple reflections; keep positives.
    {
        std::set<Weight> all(rs->simple_roots_.begin(), rs->simple_roots_.end());
        std::vector<Weight> queue(rs->simple_roots_.begin(), rs->simple_roots_.end());
        while (!queue.empty()) {
            Weight w = queue.back();
            queue.pop_back();
            for (int i = 0; i < rank; ++i) {
                Weight r = rs->simple_reflection(i, w);
                if (all.insert(r).second) queue.push_back(r);
            }
        }
        for (const auto& w : all) {
            auto rc = rs->root_coords(w);
            bool nonneg = true, integral = true;
            for (const auto& x : rc) {
                if (!is_integer(x)) integral = false;
                if (x < 0) nonneg = false;
            }
            require_internal(integral, "non-integral root coordinates");
            if (nonneg) rs->positive_roots_.push_back(w);
        }
        std::sort(rs->positive_roots_.begin(), rs->positive_roots_.end(),
                  [&](const Weight& a, const Weight& b) { return rs->total_order_key(a) < rs->total_order_key(b); });
    }
    return rs;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& name, int max_rank) {
    require_config(name.size() >= 2, "malformed root-system name: " + name);
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int rank = 0;
    try {
        rank = std::stoi(name.substr(1));
    } catch (const std::exception&) {
        throw ConfigError("malformed root-system name: " + name);
    }
    return build(t, rank, max_rank);
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
    // s_i(w) = w - <w, alpha_i^vee> alpha_i; the pairing is the i-th coordinate.
    return w - simple_roots_[i].scaled(w.coords[i]);
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    std::set<Weight> seen{w};
    std::vector<Weight> queue{w};
    while (!queue.empty()) {
        Weight cur = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank_; ++i) {
            Weight r = simple_reflection(i, cur);
            if (seen.insert(r).second) queue.push_back(r);
        }
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

Weight RootSystem::dominant_representative(const Weight& w) const {
    Weight cur = w;
    bool again = true;
    while (again) {
        again = false;
        for (int i = 0; i < rank_; ++i) {
            if (cur.coords[i] < 0) {
                cur = simple_reflection(i, cur);
                again = true;
            }
        }
    }
    return cur;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& la) const {
    auto d = root_coords(la - mu);
    for (const auto& x : d)
        if (!is_integer(x) || x < 0) return false;
    return true;
}

OrderKey RootSystem::total_order_key(const Weight& w) const {
    return OrderKey{height(w), w.coords};
}

std::vector<Rational> RootSystem::root_coords(const Weight& w) const {
    std::vector<Rational> d(rank_, Rational(0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) d[i] += cartan_inv_[i][j] * Rational(w.coords[j]);
    return d;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
    for (const auto& x : root_coords(w))
        if (!is_integer(x)) return false;
    return true;
}

Rational RootSystem::height(const Weight& w) const {
    Rational h(0);
    for (const auto& x : root_coords(w)) h += x;
    return h;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
    // (a, b) = sum_j c_j(b) * a_j * d_j where b = sum c_j alpha_j.
    auto c = root_coords(b);
    Rational r(0);
    for (int j = 0; j < rank_; ++j) r += c[j] * Rational(a.coords[j]) * sym_[j];
    return r;
}

std::vector<Weight> RootSystem::dominant_weights_below(const Weight& la) const {
    require_config(la.dominant(), "dominant_weights_below needs a dominant weight");
    // la - sum d_i alpha_i with 0 <= d_i <= height(la); small box at desk scale.
    Rational h = height(la);
    long bound = to_long(Rational(h.get_num() / h.get_den()));
    std::vector<Weight> out;
    std::vector<long> d(rank_, 0);
    while (true) {
        Weight mu = la;
        for (int i = 0; i < rank_; ++i) mu = mu - simple_roots_[i].scaled(static_cast<int>(d[i]));
        if (mu.dominant()) out.push_back(mu);
        int k = 0;
        while (k < rank_) {
            if (++d[k] <= bound) break;
            d[k] = 0;
            ++k;
        }
        if (k == rank_) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Weight& a, const Weight& b) { return total_order_key(a) < total_order_key(b); });
    return out;
}

std::vector<Weight> RootSystem::dominant_weights_key_leq(const Weight& la) const {
    require_config(la.dominant(), "dominant_weights_key_leq needs a dominant weight");
    OrderKey bound = total_order_key(la);
    // Coordinate box: each omega_i has positive height, so mu_i <= H / min height.
    Rational hmin(0);
    for (int i = 0; i < rank_; ++i) {
        Weight wi = Weight::zero(rank_);
        wi.coords[i] = 1;
        Rational h = height(wi);
        if (hmin == 0 || h < hmin) hmin = h;
    }
    Rational box = bound.height / hmin;
    long cap = to_long(Rational(box.get_num() / box.get_den()));
    std::vector<Weight> out;
    std::vector<long> c(rank_, 0);
    while (true) {
        Weight mu(std::vector<int>(c.begin(), c.end()));
        if (total_order_key(mu) <= bound) out.push_back(mu);
        int k = 0;
        while (k < rank_) {
            if (++c[k] <= cap) break;
            c[k] = 0;
            ++k;
        }
        if (k == rank_) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Weight& a, const Weight& b) { return total_order_key(a) < total_order_key(b); });
    return out;
}

Weight RootSystem::negate_longest(const Weight& la) const {
    require_config(la.dominant(), "negate_longest needs a dominant weight");
    return dominant_representative(-la);
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(rank_, 1)); }

Rational RootSystem::weyl_dimension(const Weight& la) const {
    Rational num(1), den(1);
    Weight r = rho();
    for (const auto& a : positive_roots_) {
        num *= inner(la + r, a);
        den *= inner(r, a);
    }
    return num / den;
}

std::map<Weight, long> RootSystem::irreducible_multiplicities(const Weight& la) const {
    require_config(la.dominant(), "irreducible_multiplicities needs a dominant weight");
    std::vector<Weight> doms = dominant_weights_below(la);
    // Freudenthal, descending from la.
    std::map<Weight, long> mult;
    mult[la] = 1;
    Weight r = rho();
    Rational top = inner(la + r, la + r);
    auto mult_of = [&](const Weight& w) -> long {
        Weight d = dominant_representative(w);
        auto it = mult.find(d);
        return it == mult.end() ? 0 : it->second;
    };
    for (auto it = doms.rbegin(); it != doms.rend(); ++it) {
        const Weight& mu = *it;
        if (mu == la) continue;
        Rational acc(0);
        for (const auto& a : positive_roots_) {
            for (int k = 1;; ++k) {
                Weight w = mu + a.scaled(k);
                long m = mult_of(w);
                // Stop once w leaves the weight diagram: heights of mu + k*alpha rise
                // strictly, so no multiplicity can reappear past la's height.
                if (m == 0) {
                    if (height(w) > height(la)) break;
                    continue;
                }
                acc += Rational(2 * m) * inner(w, a);
            }
        }
        Rational denom = top - inner(mu + r, mu + r);
        require_internal(denom > 0, "Freudenthal denominator not positive");
        Rational m = acc / denom;
        require_internal(is_nonneg_integer(m), "Freudenthal produced a non-integer multiplicity");
        long lm = to_long(m);
        if (lm > 0) mult[mu] = lm;
    }
    return mult;
}

} // namespace macd
