#include "macd/finite_lie.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace macd {

SparseVec FiniteGradedLie::bracket(int i, int j) const {
    auto it = brackets.find({i, j});
    return it == brackets.end() ? SparseVec{} : it->second;
}

std::vector<int> FiniteGradedLie::radical_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (basis[i].q_deg != 0 || basis[i].t_deg != 0) out.push_back(i);
    return out;
}

bool FiniteGradedLie::has_odd_part() const {
    for (const auto& b : basis)
        if (b.odd) return true;
    return false;
}

namespace {

SparseVec sv_scaled(const SparseVec& v, const Rational& c) {
    SparseVec out;
    if (c == 0) return out;
    for (const auto& [k, x] : v) out[k] = x * c;
    return out;
}

void sv_add(SparseVec& a, const SparseVec& b, const Rational& c = Rational(1)) {
    for (const auto& [k, x] : b) {
        Rational nv = a.count(k) ? Rational(a[k] + x * c) : Rational(x * c);
        if (nv == 0)
            a.erase(k);
        else
            a[k] = nv;
    }
}

} // namespace

void FiniteGradedLie::validate(bool exhaustive_jacobi) const {
    int n = dim();
    auto brk = [&](int i, int j) { return bracket(i, j); };
    auto brk_vec = [&](int i, const SparseVec& v) {
        SparseVec out;
        for (const auto& [j, c] : v) sv_add(out, brk(i, j), c);
        return out;
    };
    for (const auto& [key, val] : brackets) {
        auto [i, j] = key;
        const auto& bi = basis[i];
        const auto& bj = basis[j];
        for (const auto& [k, c] : val) {
            const auto& bk = basis[k];
            require_internal(bk.weight == bi.weight + bj.weight && bk.q_deg == bi.q_deg + bj.q_deg &&
                                 bk.t_deg == bi.t_deg + bj.t_deg && bk.odd == (bi.odd != bj.odd),
                             name + ": bracket [" + bi.label + "," + bj.label + "] violates the grading");
        }
        // Super antisymmetry.
        SparseVec other = brk(j, i);
        Rational sign = (bi.odd && bj.odd) ? Rational(1) : Rational(-1);
        SparseVec expect = sv_scaled(val, sign);
        require_internal(other == expect, name + ": bracket table is not super-antisymmetric at [" + bi.label +
                                              "," + bj.label + "]");
    }
    if (exhaustive_jacobi) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
                    SparseVec lhs = brk_vec(x, brk(y, z));
                    SparseVec rhs;
                    for (const auto& [k, c] : brk(x, y)) sv_add(rhs, brk(k, z), c);
                    Rational sgn = (basis[x].odd && basis[y].odd) ? Rational(-1) : Rational(1);
                    sv_add(rhs, brk_vec(y, brk(x, z)), sgn);
                    require_internal(lhs == rhs, name + ": Jacobi identity fails on (" + basis[x].label + "," +
                                                     basis[y].label + "," + basis[z].label + ")");
                }
    }
    if (tau) {
        require_internal(static_cast<int>(tau->size()) == n, name + ": anti-involution has wrong size");
        auto tau_vec = [&](const SparseVec& v) {
            SparseVec out;
            for (const auto& [k, c] : v) {
                auto [k2, c2] = (*tau)[k];
                sv_add(out, SparseVec{{k2, c2}}, c);
            }
            return out;
        };
        for (int i = 0; i < n; ++i) {
            auto [i2, ci] = (*tau)[i];
            auto [i3, ci2] = (*tau)[i2];
            require_internal(i3 == i && Rational(ci * ci2) == 1, name + ": tau is not an involution");
            require_internal(basis[i2].q_deg == basis[i].q_deg && basis[i2].t_deg == basis[i].t_deg &&
                                 basis[i2].weight == -basis[i].weight,
                             name + ": tau must fix gradings and negate weights");
            for (int j = 0; j < n; ++j) {
                auto [j2, cj] = (*tau)[j];
                SparseVec lhs = sv_scaled(brk(i2, j2), Rational(ci * cj));
                SparseVec rhs = sv_scaled(tau_vec(brk(i, j)), Rational(-1));
                require_internal(lhs == rhs, name + ": tau is not an anti-involution at [" + basis[i].label +
                                                 "," + basis[j].label + "]");
            }
        }
    }
}

GradedLieData FiniteGradedLie::character_data(Trunc t) const {
    GradedLieData data(rs, name + "|chars|" + t.str(), t, tau.has_value());
    for (int i : radical_indices()) {
        const auto& b = basis[i];
        data.add_entry(b.q_deg, b.t_deg, b.weight, b.odd ? 0 : 1, b.odd ? 1 : 0);
    }
    data.validate();
    return data;
}

void FiniteModule::validate() const {
    int n = dim();
    int ld = lie->dim();
    require_internal(static_cast<int>(action.size()) == ld, name + ": one action matrix per Lie basis element");
    for (int g = 0; g < ld; ++g) {
        const auto& bg = lie->basis[g];
        require_internal(static_cast<int>(action[g].size()) == n, name + ": action matrix size");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (action[g][i][j] == 0) continue;
                require_internal(!bg.odd, name + ": odd element " + bg.label + " acts on an even module");
                require_internal(basis[i].weight == basis[j].weight + bg.weight &&
                                     basis[i].q_deg == basis[j].q_deg + bg.q_deg &&
                                     basis[i].t_deg == basis[j].t_deg + bg.t_deg,
                                 name + ": action of " + bg.label + " violates the grading");
            }
    }
    for (int x = 0; x < ld; ++x)
        for (int y = 0; y < ld; ++y) {
            Mat lhs(n, std::vector<Rational>(n, Rational(0)));
            for (const auto& [k, c] : lie->bracket(x, y))
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) lhs[i][j] += c * action[k][i][j];
            Mat rhs = mat_mul(action[x], action[y]);
            Mat yx = mat_mul(action[y], action[x]);
            Rational sgn = (lie->basis[x].odd && lie->basis[y].odd) ? Rational(1) : Rational(-1);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rhs[i][j] += sgn * yx[i][j];
            require_internal(lhs == rhs, name + ": representation axiom fails on (" + lie->basis[x].label + "," +
                                             lie->basis[y].label + ")");
        }
}

CharElement FiniteModule::character(Trunc t) const {
    CharElement out(lie->rs, t);
    for (const auto& b : basis) out.add_term(b.weight, SeriesQT::monomial(b.q_deg, b.t_deg, Rational(1), t));
    return out;
}

// ---------------------------------------------------------------------------
// Chevalley structure constants via the extraspecial-pair recursion.

namespace {

struct ChevalleyConstants {
    std::shared_ptr<const RootSystem> rs;
    std::vector<Weight> pos;              // positive roots in total order
    std::map<Weight, int> pos_index;
    std::set<Weight> roots;               // all roots
    std::map<std::pair<int, int>, Rational> npos; // (i,j), i<j, alpha_i+alpha_j a root

    explicit ChevalleyConstants(std::shared_ptr<const RootSystem> r) : rs(std::move(r)) {
        pos = rs->positive_roots();
        for (size_t i = 0; i < pos.size(); ++i) {
            pos_index[pos[i]] = static_cast<int>(i);
            roots.insert(pos[i]);
            roots.insert(-pos[i]);
        }
        build();
    }

    bool is_root(const Weight& w) const { return roots.count(w) > 0; }
    bool is_positive(const Weight& w) const { return pos_index.count(w) > 0; }

    // Largest p >= 0 with beta - p*alpha a root.
    int chain_down(const Weight& alpha, const Weight& beta) const {
        int p = 0;
        Weight w = beta - alpha;
        while (is_root(w)) {
            ++p;
            w = w - alpha;
        }
        return p;
    }

    void build() {
        // Process sums in increasing total order; extraspecial pairs get p+1.
        for (size_t gi = 0; gi < pos.size(); ++gi) {
            const Weight& gamma = pos[gi];
            std::vector<std::pair<int, int>> special;
            for (size_t a = 0; a < pos.size(); ++a)
                for (size_t b = a + 1; b < pos.size(); ++b)
                    if (pos[a] + pos[b] == gamma) special.push_back({static_cast<int>(a), static_cast<int>(b)});
            if (special.empty()) continue;
            std::sort(special.begin(), special.end());
            auto [ai, bi] = special.front();
            npos[{ai, bi}] = Rational(chain_down(pos[ai], pos[bi]) + 1);
            for (size_t s = 1; s < special.size(); ++s) {
                auto [xi, et] = special[s];
                const Weight& alpha = pos[ai];
                const Weight& x = pos[xi];
                const Weight& e = pos[et];
                // Jacobi on (x_{-alpha}, x_xi, x_eta), all landing on x_beta.
                Rational acc(0);
                if (is_root(x - alpha)) acc += n(-alpha, x) * n(x - alpha, e);
                if (is_root(e - alpha)) acc += n(-alpha, e) * n(x, e - alpha);
                Rational denom = n(-alpha, gamma);
                require_internal(denom != 0, "extraspecial recursion hit a zero divisor");
                npos[{xi, et}] = acc / denom;
            }
        }
    }

    Rational n(const Weight& a, const Weight& b) const {
        require_internal(is_root(a) && is_root(b) && is_root(a + b), "structure constant of a non-root sum");
        bool pa = is_positive(a), pb = is_positive(b);
        if (pa && pb) {
            int ia = pos_index.at(a), ib = pos_index.at(b);
            if (ia < ib) {
                auto it = npos.find({ia, ib});
                return it == npos.end() ? Rational(0) : it->second;
            }
            auto it = npos.find({ib, ia});
            return it == npos.end() ? Rational(0) : Rational(-it->second);
        }
        if (!pa && !pb) return -n(-a, -b);
        if (!pa) return -n(b, a);
        // a positive, b negative, a + b a nonzero root.
        Weight bp = -b;
        Weight delta = a + b;
        if (is_positive(delta)) {
            // Triple (a, -bp, -delta): N(a,-bp) = -N(bp,delta) (delta,delta)/(a,a).
            return -n(bp, delta) * rs->inner(delta, delta) / rs->inner(a, a);
        }
        Weight dp = -delta;
        // Triple (a, -bp, dp): N(a,-bp) = N(dp,a) (dp,dp)/(bp,bp).
        return n(dp, a) * rs->inner(dp, dp) / rs->inner(bp, bp);
    }
};

} // namespace

std::shared_ptr<const FiniteGradedLie> semisimple_lie(std::shared_ptr<const RootSystem> rs) {
    auto lie = std::make_shared<FiniteGradedLie>();
    lie->name = rs->name();
    lie->rs = rs;
    int r = rs->rank();
    const auto& pos = rs->positive_roots();
    int np = static_cast<int>(pos.size());

    for (int i = 0; i < r; ++i) lie->basis.push_back({"h" + std::to_string(i + 1), Weight::zero(r), 0, 0, false});
    for (int i = 0; i < np; ++i) lie->basis.push_back({"x[" + pos[i].str() + "]", pos[i], 0, 0, false});
    for (int i = 0; i < np; ++i) lie->basis.push_back({"x[-" + pos[i].str() + "]", -pos[i], 0, 0, false});

    auto root_index = [&](const Weight& w) {
        for (int i = 0; i < np; ++i) {
            if (pos[i] == w) return r + i;
            if (-pos[i] == w) return r + np + i;
        }
        return -1;
    };

    ChevalleyConstants cc(rs);
    auto set_bracket = [&](int i, int j, SparseVec v) {
        if (!v.empty()) lie->brackets[{i, j}] = std::move(v);
    };

    // [h_i, x_gamma] = <gamma, alpha_i^vee> x_gamma.
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < np; ++k) {
            for (int sgn : {1, -1}) {
                Weight g = sgn == 1 ? pos[k] : -pos[k];
                int gi = root_index(g);
                if (g.coords[i] != 0) {
                    set_bracket(i, gi, {{gi, Rational(g.coords[i])}});
                    set_bracket(gi, i, {{gi, Rational(-g.coords[i])}});
                }
            }
        }
    }
    // Root-root brackets.
    auto coroot = [&](const Weight& a) {
        // h_a = sum_i c_i h_i with c_i = (root coords)_i * d_i / d_a.
        auto rc = rs->root_coords(a);
        Rational da = rs->inner(a, a) / 2;
        SparseVec v;
        for (int i = 0; i < r; ++i) {
            Rational c = rc[i] * rs->symmetrizers()[i] / da;
            require_internal(is_integer(c), "coroot coefficients must be integers");
            if (c != 0) v[i] = c;
        }
        return v;
    };
    std::vector<Weight> all;
    for (int k = 0; k < np; ++k) {
        all.push_back(pos[k]);
        all.push_back(-pos[k]);
    }
    for (const auto& a : all) {
        for (const auto& b : all) {
            int ia = root_index(a), ib = root_index(b);
            if (ia == ib) continue;
            Weight s = a + b;
            if (s.is_zero()) {
                // [x_a, x_{-a}] = h_a for positive a; the reverse order flips the sign.
                SparseVec h = coroot(cc.is_positive(a) ? a : b);
                if (cc.is_positive(a))
                    set_bracket(ia, ib, h);
                else
                    set_bracket(ia, ib, sv_scaled(h, Rational(-1)));
            } else if (cc.is_root(s)) {
                Rational c = cc.n(a, b);
                require_internal(is_integer(c) && c != 0, "Chevalley constant must be a nonzero integer at " +
                                                              a.str() + " + " + b.str());
                set_bracket(ia, ib, {{root_index(s), c}});
            }
        }
    }
    lie->chevalley_e.resize(r);
    lie->chevalley_f.resize(r);
    lie->chevalley_h.resize(r);
    for (int i = 0; i < r; ++i) {
        lie->chevalley_e[i] = root_index(rs->simple_roots()[i]);
        lie->chevalley_f[i] = root_index(-rs->simple_roots()[i]);
        lie->chevalley_h[i] = i;
    }
    // Cartan anti-involution: h fixed, x_alpha <-> x_{-alpha}.
    std::vector<std::pair<int, Rational>> tau(lie->dim());
    for (int i = 0; i < r; ++i) tau[i] = {i, Rational(1)};
    for (int k = 0; k < np; ++k) {
        tau[r + k] = {r + np + k, Rational(1)};
        tau[r + np + k] = {r + k, Rational(1)};
    }
    lie->tau = tau;
    return lie;
}

// ---------------------------------------------------------------------------
// Current-type builders. The coefficient algebra is a super-commutative
// monomial table; the unit sits at index 0.

namespace {

struct MonomialAlgebra {
    struct Mono {
        std::string label;
        int q = 0, t = 0;
        bool odd = false;
    };
    std::vector<Mono> monos; // monos[0] = unit
    // product[i][j] = index of m_i * m_j, or -1 when truncated away / zero.
    std::vector<std::vector<std::pair<int, Rational>>> product;
};

std::shared_ptr<const FiniteGradedLie> current_lie(const std::shared_ptr<const RootSystem>& rs,
                                                   const MonomialAlgebra& alg, const std::string& name) {
    auto g = semisimple_lie(rs);
    auto lie = std::make_shared<FiniteGradedLie>();
    lie->name = name;
    lie->rs = rs;
    int gd = g->dim();
    int nm = static_cast<int>(alg.monos.size());
    auto idx = [&](int gi, int mi) { return mi * gd + gi; };
    for (int mi = 0; mi < nm; ++mi)
        for (int gi = 0; gi < gd; ++gi) {
            const auto& gb = g->basis[gi];
            const auto& mb = alg.monos[mi];
            std::string label = mi == 0 ? gb.label : gb.label + "*" + mb.label;
            lie->basis.push_back({label, gb.weight, mb.q, mb.t, mb.odd});
        }
    for (int mi = 0; mi < nm; ++mi)
        for (int mj = 0; mj < nm; ++mj) {
            auto [mk, mc] = alg.product[mi][mj];
            if (mk < 0 || mc == 0) continue;
            for (int gi = 0; gi < gd; ++gi)
                for (int gj = 0; gj < gd; ++gj) {
                    SparseVec br = g->bracket(gi, gj);
                    if (br.empty()) continue;
                    SparseVec out;
                    for (const auto& [k, c] : br) out[idx(k, mk)] = c * mc;
                    lie->brackets[{idx(gi, mi), idx(gj, mj)}] = std::move(out);
                }
        }
    lie->chevalley_e = g->chevalley_e;
    lie->chevalley_f = g->chevalley_f;
    lie->chevalley_h = g->chevalley_h;
    // tau(a (x) m) = tau_g(a) (x) m.
    std::vector<std::pair<int, Rational>> tau(lie->dim());
    for (int mi = 0; mi < nm; ++mi)
        for (int gi = 0; gi < gd; ++gi) {
            auto [g2, c] = (*g->tau)[gi];
            tau[idx(gi, mi)] = {idx(g2, mi), c};
        }
    lie->tau = tau;
    return lie;
}

} // namespace

std::shared_ptr<const FiniteGradedLie> truncated_current_lie(std::shared_ptr<const RootSystem> rs, int n) {
    require_config(n >= 2, "truncated current algebra needs n >= 2");
    MonomialAlgebra alg;
    for (int i = 0; i < n; ++i) alg.monos.push_back({i == 0 ? "1" : "x^" + std::to_string(i), i, 0, false});
    alg.product.assign(n, std::vector<std::pair<int, Rational>>(n, {-1, Rational(0)}));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) alg.product[i][j] = {i + j, Rational(1)};
    return current_lie(rs, alg, rs->name() + ":trunc_x" + std::to_string(n));
}

std::shared_ptr<const FiniteGradedLie> truncated_super_current_lie(std::shared_ptr<const RootSystem> rs, int n) {
    require_config(n >= 1, "truncated super current algebra needs n >= 1");
    MonomialAlgebra alg;
    // x^i at (i, 0) even for i < n, then x^i xi at (i, 1) odd.
    for (int i = 0; i < n; ++i) alg.monos.push_back({i == 0 ? "1" : "x^" + std::to_string(i), i, 0, false});
    for (int i = 0; i < n; ++i)
        alg.monos.push_back({i == 0 ? "xi" : "x^" + std::to_string(i) + "*xi", i, 1, true});
    int m = 2 * n;
    alg.product.assign(m, std::vector<std::pair<int, Rational>>(m, {-1, Rational(0)}));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i + j < n) {
                alg.product[i][j] = {i + j, Rational(1)};            // x^i x^j
                alg.product[i][n + j] = {n + i + j, Rational(1)};    // x^i * x^j xi
                alg.product[n + i][j] = {n + i + j, Rational(1)};    // x^i xi * x^j
            }
            // xi * xi = 0.
        }
    return current_lie(rs, alg, rs->name() + ":poly_x_xi_trunc" + std::to_string(n));
}

std::shared_ptr<const FiniteGradedLie> two_step_polynomial_current_lie(std::shared_ptr<const RootSystem> rs,
                                                                      int num_generators) {
    require_config(num_generators >= 1, "two_step_polynomial_current_lie needs at least one generator");
    MonomialAlgebra alg;
    alg.monos.push_back({"1", 0, 0, false});
    std::map<std::pair<int, int>, int> pair_index;
    for (int i = 0; i < num_generators; ++i) alg.monos.push_back({"x" + std::to_string(i + 1), 1, 0, false});
    for (int i = 0; i < num_generators; ++i)
        for (int j = i; j < num_generators; ++j) {
            pair_index[{i, j}] = static_cast<int>(alg.monos.size());
            alg.monos.push_back({"x" + std::to_string(i + 1) + "x" + std::to_string(j + 1), 2, 0, false});
        }
    int m = static_cast<int>(alg.monos.size());
    alg.product.assign(m, std::vector<std::pair<int, Rational>>(m, {-1, Rational(0)}));
    for (int k = 0; k < m; ++k) {
        alg.product[0][k] = {k, Rational(1)};
        alg.product[k][0] = {k, Rational(1)};
    }
    for (int i = 0; i < num_generators; ++i)
        for (int j = 0; j < num_generators; ++j)
            alg.product[1 + i][1 + j] = {pair_index[{std::min(i, j), std::max(i, j)}], Rational(1)};
    return current_lie(rs, alg, rs->name() + ":poly" + std::to_string(num_generators) + "_deg2");
}

// ---------------------------------------------------------------------------
// T(3) and representation utilities.

namespace {

// Matrices of the defining representation C^{n+1} for a type-A Chevalley basis,
// built by bracket recursion from the simple generators.
std::vector<Mat> type_a_vector_rep(const std::shared_ptr<const FiniteGradedLie>& g) {
    const auto& rs = g->rs;
    require_config(rs->lie_type() == 'A', "vector representation is built for type A only");
    int r = rs->rank();
    int n = r + 1;
    int gd = g->dim();
    auto zero = [&]() { return Mat(n, std::vector<Rational>(n, Rational(0))); };
    std::vector<Mat> rep(gd);
    std::vector<bool> have(gd, false);
    for (int i = 0; i < r; ++i) {
        Mat h = zero(), e = zero(), f = zero();
        h[i][i] = 1;
        h[i + 1][i + 1] = -1;
        e[i][i + 1] = 1;
        f[i + 1][i] = 1;
        rep[g->chevalley_h[i]] = h;
        rep[g->chevalley_e[i]] = e;
        rep[g->chevalley_f[i]] = f;
        have[g->chevalley_h[i]] = have[g->chevalley_e[i]] = have[g->chevalley_f[i]] = true;
    }
    auto commutator = [&](const Mat& a, const Mat& b) {
        Mat ab = mat_mul(a, b), ba = mat_mul(b, a);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ab[i][j] -= ba[i][j];
        return ab;
    };
    // Non-simple root vectors: rho(x_{a+b}) = [rho(x_a), rho(x_b)] / N(a,b),
    // resolved in increasing height.
    bool progress = true;
    while (progress) {
        progress = false;
        for (int k = 0; k < gd; ++k) {
            if (have[k]) continue;
            for (int i = 0; i < r && !have[k]; ++i) {
                for (int sgn : {1, -1}) {
                    int simple = sgn == 1 ? g->chevalley_e[i] : g->chevalley_f[i];
                    // Find partner b with [simple, b] having a component on k.
                    for (int b = 0; b < gd && !have[k]; ++b) {
                        if (!have[b]) continue;
                        SparseVec br = g->bracket(simple, b);
                        auto it = br.find(k);
                        if (it == br.end() || br.size() != 1) continue;
                        Mat m = commutator(rep[simple], rep[b]);
                        Rational inv = Rational(1) / it->second;
                        for (auto& row : m)
                            for (auto& x : row) x *= inv;
                        rep[k] = m;
                        have[k] = true;
                        progress = true;
                    }
                }
            }
        }
        if (std::all_of(have.begin(), have.end(), [](bool b) { return b; })) break;
    }
    require_internal(std::all_of(have.begin(), have.end(), [](bool b) { return b; }),
                     "vector representation recursion incomplete");
    return rep;
}

} // namespace

std::shared_ptr<const FiniteGradedLie> t3_lie() {
    auto rs = RootSystem::build('A', 2);
    auto g = semisimple_lie(rs);
    auto rep = type_a_vector_rep(g);
    auto lie = std::make_shared<FiniteGradedLie>();
    lie->name = "t3";
    lie->rs = rs;
    lie->basis = g->basis;
    lie->brackets = g->brackets;
    lie->chevalley_e = g->chevalley_e;
    lie->chevalley_f = g->chevalley_f;
    lie->chevalley_h = g->chevalley_h;
    lie->tau = std::nullopt; // no anti-involution

    int gd = g->dim();
    std::vector<Weight> vw = {Weight({1, 0}), Weight({-1, 1}), Weight({0, -1})};
    // x_1, x_2, x_3 at q^1; wedge pairs at q^2 ordered (12), (13), (23).
    for (int i = 0; i < 3; ++i) lie->basis.push_back({"v" + std::to_string(i + 1), vw[i], 1, 0, false});
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [a, b] : pairs)
        lie->basis.push_back(
            {"w" + std::to_string(a + 1) + std::to_string(b + 1), vw[a] + vw[b], 2, 0, false});
    auto vidx = [&](int i) { return gd + i; };
    auto widx = [&](int a, int b) {
        // signed index of e_a ^ e_b
        for (size_t p = 0; p < pairs.size(); ++p) {
            if (pairs[p] == std::make_pair(a, b)) return std::make_pair(gd + 3 + static_cast<int>(p), Rational(1));
            if (pairs[p] == std::make_pair(b, a)) return std::make_pair(gd + 3 + static_cast<int>(p), Rational(-1));
        }
        return std::make_pair(-1, Rational(0));
    };
    auto set_bracket = [&](int i, int j, SparseVec v) {
        if (v.empty()) return;
        lie->brackets[{i, j}] = v;
        Rational sgn(-1); // all elements here are even
        lie->brackets[{j, i}] = sv_scaled(v, sgn);
    };
    // [g, v_j] = sum_i rep(g)_{ij} v_i; [g, e_a ^ e_b] by the derivation rule.
    for (int gi = 0; gi < gd; ++gi) {
        for (int j = 0; j < 3; ++j) {
            SparseVec v;
            for (int i = 0; i < 3; ++i)
                if (rep[gi][i][j] != 0) v[vidx(i)] = rep[gi][i][j];
            if (!v.empty()) set_bracket(gi, vidx(j), v);
        }
        for (size_t p = 0; p < pairs.size(); ++p) {
            auto [a, b] = pairs[p];
            SparseVec v;
            for (int i = 0; i < 3; ++i) {
                if (rep[gi][i][a] != 0) {
                    auto [wi, c] = widx(i, b);
                    if (wi >= 0) sv_add(v, SparseVec{{wi, c}}, rep[gi][i][a]);
                }
                if (rep[gi][i][b] != 0) {
                    auto [wi, c] = widx(a, i);
                    if (wi >= 0) sv_add(v, SparseVec{{wi, c}}, rep[gi][i][b]);
                }
            }
            if (!v.empty()) set_bracket(gi, gd + 3 + static_cast<int>(p), v);
        }
    }
    // [v_a, v_b] = e_a ^ e_b.
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            auto [wi, c] = widx(a, b);
            set_bracket(vidx(a), vidx(b), {{wi, c}});
        }
    return lie;
}

FiniteModule trivial_module(std::shared_ptr<const FiniteGradedLie> lie) {
    FiniteModule m;
    m.name = "C";
    m.lie = lie;
    m.basis.push_back({"1", Weight::zero(lie->rs->rank()), 0, 0});
    m.action.assign(lie->dim(), Mat(1, std::vector<Rational>(1, Rational(0))));
    return m;
}

FiniteModule irreducible_sl2_module(std::shared_ptr<const FiniteGradedLie> lie, int mtop) {
    require_config(lie->rs->rank() == 1 && lie->rs->lie_type() == 'A',
                   "built-in irreducible modules need a rank-1 type A semisimple part");
    require_config(mtop >= 0, "highest weight must be dominant");
    FiniteModule m;
    m.name = "L(" + std::to_string(mtop) + "w)";
    m.lie = lie;
    int n = mtop + 1;
    for (int k = 0; k < n; ++k) m.basis.push_back({"v" + std::to_string(k), Weight({mtop - 2 * k}), 0, 0});
    m.action.assign(lie->dim(), Mat(n, std::vector<Rational>(n, Rational(0))));
    int e = lie->chevalley_e[0], f = lie->chevalley_f[0], h = lie->chevalley_h[0];
    for (int k = 0; k < n; ++k) {
        m.action[h][k][k] = mtop - 2 * k;
        if (k > 0) m.action[e][k - 1][k] = Rational(static_cast<long>(k) * (mtop - k + 1));
        if (k + 1 < n) m.action[f][k + 1][k] = 1;
    }
    return m;
}

FiniteModule dual_module(const FiniteModule& m) {
    require_config(m.lie->tau.has_value(), "dual_module needs an anti-involution on the Lie algebra");
    FiniteModule d;
    d.name = m.name + "^v";
    d.lie = m.lie;
    int n = m.dim();
    for (const auto& b : m.basis) d.basis.push_back({b.label + "*", -b.weight, -b.q_deg, -b.t_deg});
    d.action.assign(m.lie->dim(), Mat(n, std::vector<Rational>(n, Rational(0))));
    for (int g = 0; g < m.lie->dim(); ++g) {
        auto [g2, c] = (*m.lie->tau)[g];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d.action[g][i][j] = c * m.action[g2][j][i];
    }
    return d;
}

FiniteModule hom_module(const FiniteModule& m, const FiniteModule& n) {
    require_internal(m.lie.get() == n.lie.get(), "hom_module needs modules over the same Lie algebra");
    FiniteModule h;
    h.name = "Hom(" + m.name + "," + n.name + ")";
    h.lie = m.lie;
    int md = m.dim(), nd = n.dim();
    for (int a = 0; a < md; ++a)
        for (int b = 0; b < nd; ++b)
            h.basis.push_back({m.basis[a].label + "*->" + n.basis[b].label,
                               n.basis[b].weight - m.basis[a].weight, n.basis[b].q_deg - m.basis[a].q_deg,
                               n.basis[b].t_deg - m.basis[a].t_deg});
    auto idx = [&](int a, int b) { return a * nd + b; };
    h.action.assign(m.lie->dim(), Mat(md * nd, std::vector<Rational>(md * nd, Rational(0))));
    for (int g = 0; g < m.lie->dim(); ++g) {
        for (int a = 0; a < md; ++a)
            for (int b = 0; b < nd; ++b) {
                // g . phi_{ab} = sum_e rhoN(g)_{eb} phi_{ae} - sum_c rhoM(g)_{ac} phi_{cb}
                for (int e = 0; e < nd; ++e)
                    if (n.action[g][e][b] != 0) h.action[g][idx(a, e)][idx(a, b)] += n.action[g][e][b];
                for (int c = 0; c < md; ++c)
                    if (m.action[g][a][c] != 0) h.action[g][idx(c, b)][idx(a, b)] -= m.action[g][a][c];
            }
    }
    return h;
}

FiniteModule induced_module(const FiniteModule& fiber, int qmax) {
    const auto& lie = fiber.lie;
    std::vector<int> rad = lie->radical_indices();
    for (int i : rad) {
        require_config(!lie->basis[i].odd && lie->basis[i].t_deg == 0,
                       "induced_module supports even, t-degree-zero radicals");
    }
    // Monomials: sorted multisets of radical indices with bounded total q-degree.
    std::vector<std::vector<int>> monos;
    std::map<std::vector<int>, int> mono_index;
    std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& cur, int start, int q) {
        mono_index[cur] = static_cast<int>(monos.size());
        monos.push_back(cur);
        for (size_t s = start; s < rad.size(); ++s) {
            int nq = q + lie->basis[rad[s]].q_deg;
            if (nq > qmax) continue;
            cur.push_back(rad[s]);
            gen(cur, static_cast<int>(s), nq);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    gen(cur, 0, 0);

    FiniteModule ind;
    ind.name = "Ind(" + fiber.name + ")q<=" + std::to_string(qmax);
    ind.lie = lie;
    int fd = fiber.dim();
    auto idx = [&](int mi, int vi) { return mi * fd + vi; };
    for (size_t mi = 0; mi < monos.size(); ++mi) {
        for (int vi = 0; vi < fd; ++vi) {
            Weight w = fiber.basis[vi].weight;
            int q = fiber.basis[vi].q_deg;
            std::string label = "[";
            for (int b : monos[mi]) {
                w = w + lie->basis[b].weight;
                q += lie->basis[b].q_deg;
                label += lie->basis[b].label + " ";
            }
            label += "]" + fiber.basis[vi].label;
            ind.basis.push_back({label, w, q, 0});
        }
    }

    // Normal ordering of radical words: u_a m with insertion by brackets.
    std::function<std::map<std::vector<int>, Rational>(int, const std::vector<int>&)> insert_gen =
        [&](int a, const std::vector<int>& mono) -> std::map<std::vector<int>, Rational> {
        std::map<std::vector<int>, Rational> out;
        if (mono.empty() || a <= mono.front()) {
            std::vector<int> nm;
            nm.push_back(a);
            nm.insert(nm.end(), mono.begin(), mono.end());
            out[nm] = 1;
            return out;
        }
        // a * b rest = b * (a rest) + [a,b] rest
        int b = mono.front();
        std::vector<int> rest(mono.begin() + 1, mono.end());
        for (const auto& [sub, c] : insert_gen(a, rest)) {
            std::vector<int> nm;
            nm.push_back(b);
            nm.insert(nm.end(), sub.begin(), sub.end());
            // still need b at the head position: recurse to place b correctly
            // (b <= all of sub's head by construction except when brackets landed lower)
            for (const auto& [sub2, c2] : insert_gen(nm.front(), std::vector<int>(nm.begin() + 1, nm.end()))) {
                Rational nc = c * c2;
                auto [it, ins] = out.emplace(sub2, nc);
                if (!ins) {
                    it->second += nc;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
        for (const auto& [k, c] : lie->bracket(a, b)) {
            for (const auto& [sub, c2] : insert_gen(k, rest)) {
                Rational nc = c * c2;
                auto [it, ins] = out.emplace(sub, nc);
                if (!ins) {
                    it->second += nc;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
        return out;
    };

    int total = static_cast<int>(ind.basis.size());
    ind.action.assign(lie->dim(), Mat(total, std::vector<Rational>(total, Rational(0))));
    for (int g = 0; g < lie->dim(); ++g) {
        const auto& bg = lie->basis[g];
        bool is_radical = bg.q_deg != 0 || bg.t_deg != 0;
        for (size_t mi = 0; mi < monos.size(); ++mi) {
            int mq = 0;
            for (int b : monos[mi]) mq += lie->basis[b].q_deg;
            for (int vi = 0; vi < fd; ++vi) {
                int colv = idx(static_cast<int>(mi), vi);
                if (is_radical) {
                    if (bg.odd) continue;
                    if (mq + bg.q_deg > qmax) continue; // quotient by high degrees
                    for (const auto& [nm, c] : insert_gen(g, monos[mi])) {
                        auto it = mono_index.find(nm);
                        require_internal(it != mono_index.end() || true, "");
                        if (it == mono_index.end()) continue; // truncated away
                        ind.action[g][idx(it->second, vi)][colv] += c;
                    }
                } else {
                    // Derivation across the word plus the fiber action.
                    for (size_t pos = 0; pos < monos[mi].size(); ++pos) {
                        for (const auto& [k, c] : lie->bracket(g, monos[mi][pos])) {
                            std::vector<int> nm = monos[mi];
                            nm.erase(nm.begin() + static_cast<long>(pos));
                            // reinsert k in order
                            for (const auto& [nm2, c2] : insert_gen(k, nm)) {
                                auto it = mono_index.find(nm2);
                                if (it == mono_index.end()) continue;
                                ind.action[g][idx(it->second, vi)][colv] += c * c2;
                            }
                        }
                    }
                    for (int vj = 0; vj < fd; ++vj) {
                        if (fiber.action[g][vj][vi] != 0)
                            ind.action[g][idx(static_cast<int>(mi), vj)][colv] += fiber.action[g][vj][vi];
                    }
                }
            }
        }
    }
    return ind;
}

} // namespace macd
