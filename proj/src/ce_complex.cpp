#include "macd/ce_complex.hpp"

#include <algorithm>
#include <functional>

#include "macd/char_element.hpp"
#include "macd/lie_data.hpp"
#include "macd/pairing.hpp"

namespace macd {

namespace {

// Letters anticommute exactly when both come from even Lie generators
// (exterior direction); odd generators give symmetric letters.
struct LetterRules {
    const FiniteGradedLie* lie;
    bool anticommuting(int a) const { return !lie->basis[a].odd; }

    // Sorts a generator word into canonical order; returns the sign, or 0 when
    // an anticommuting letter repeats.
    Rational canonicalize(std::vector<int>& w) const {
        Rational sign(1);
        for (size_t i = 1; i < w.size(); ++i)
            for (size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
                if (anticommuting(w[j]) && anticommuting(w[j - 1])) sign = -sign;
                std::swap(w[j], w[j - 1]);
            }
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == w[i + 1] && anticommuting(w[i])) return Rational(0);
        return sign;
    }
};

struct BucketKey {
    int degree, qpow, tpow;
    Weight weight;
    bool operator<(const BucketKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (qpow != o.qpow) return qpow < o.qpow;
        if (tpow != o.tpow) return tpow < o.tpow;
        return weight < o.weight;
    }
};

using Elem = std::pair<std::vector<int>, int>; // (generator word, coefficient index)

struct Bucket {
    std::vector<Elem> elems;
    std::map<Elem, int> index;
};

} // namespace

struct CEBuilder {
    CEComplex* cx;
    const FiniteGradedLie& lie;
    const FiniteModule& coeff;
    Trunc trunc;
    int max_degree;
    std::vector<int> rad;
    std::map<BucketKey, Bucket> buckets;
    // f_{ab}^c over ordered radical pairs, indexed by c.
    std::map<int, std::vector<std::tuple<int, int, Rational>>> cobracket;
    LetterRules rules;

    CEBuilder(CEComplex* c, const FiniteModule& k)
        : cx(c), lie(*c->lie()), coeff(k), trunc(c->trunc()), max_degree(c->max_degree()),
          rules{c->lie().get()} {
        rad = lie.radical_indices();
        for (int a : rad)
            for (int b : rad) {
                for (const auto& [t, f] : lie.bracket(a, b)) cobracket[t].push_back({a, b, f});
            }
        enumerate();
        build_blocks();
        restrict_differential();
    }

    void enumerate() {
        int kq = 0, kt = 0;
        for (const auto& b : coeff.basis) {
            kq = std::max(kq, b.q_deg);
            kt = std::max(kt, b.t_deg);
        }
        int qcap = trunc.nq + kq, tcap = trunc.nt + kt;
        int dcap = max_degree >= 0 ? max_degree : static_cast<int>(1e9);
        std::vector<int> word;
        std::function<void(size_t, int, int)> gen = [&](size_t start, int qs, int ts) {
            place(word);
            if (static_cast<int>(word.size()) >= dcap) return;
            for (size_t s = start; s < rad.size(); ++s) {
                int a = rad[s];
                if (!word.empty() && word.back() == a && rules.anticommuting(a)) continue;
                int nq = qs + lie.basis[a].q_deg, nt = ts + lie.basis[a].t_deg;
                if (nq > qcap || nt > tcap) continue;
                word.push_back(a);
                gen(s, nq, nt);
                word.pop_back();
            }
        };
        gen(0, 0, 0);
    }

    void place(const std::vector<int>& word) {
        int qs = 0, ts = 0;
        Weight ws = Weight::zero(lie.rs->rank());
        for (int a : word) {
            qs += lie.basis[a].q_deg;
            ts += lie.basis[a].t_deg;
            ws = ws + lie.basis[a].weight;
        }
        for (int k = 0; k < coeff.dim(); ++k) {
            int qpow = qs - coeff.basis[k].q_deg;
            int tpow = ts - coeff.basis[k].t_deg;
            if (qpow > trunc.nq || tpow > trunc.nt) continue;
            BucketKey key{static_cast<int>(word.size()), qpow, tpow, coeff.basis[k].weight - ws};
            Bucket& b = buckets[key];
            Elem e{word, k};
            b.index[e] = static_cast<int>(b.elems.size());
            b.elems.push_back(std::move(e));
        }
    }

    // Lie derivative of a cochain element along Lie basis element g (even),
    // emitted into (bucket element index -> coefficient) per target bucket.
    void lie_derivative(int g, const Elem& e, const BucketKey& key,
                        std::map<std::pair<BucketKey, int>, Rational>& out) {
        const auto& [word, k] = e;
        BucketKey tkey{key.degree, key.qpow, key.tpow, key.weight + lie.basis[g].weight};
        auto emit = [&](std::vector<int> nw, int nk, const Rational& c) {
            if (c == 0) return;
            Rational s = rules.canonicalize(nw);
            if (s == 0) return;
            auto bit = buckets.find(tkey);
            require_internal(bit != buckets.end(), "Lie derivative left the enumerated cochain space");
            auto iit = bit->second.index.find({nw, nk});
            require_internal(iit != bit->second.index.end(), "Lie derivative target element missing");
            auto keypair = std::make_pair(tkey, iit->second);
            Rational nv = (out.count(keypair) ? out[keypair] : Rational(0)) + s * c;
            if (nv == 0)
                out.erase(keypair);
            else
                out[keypair] = nv;
        };
        // Coadjoint action on each letter: g . u^a = -sum_b (coeff of u_a in [g, u_b]) u^b.
        for (size_t pos = 0; pos < word.size(); ++pos) {
            int a = word[pos];
            for (int b : rad) {
                SparseVec br = lie.bracket(g, b);
                auto it = br.find(a);
                if (it == br.end()) continue;
                std::vector<int> nw = word;
                nw[pos] = b;
                emit(std::move(nw), k, Rational(-it->second));
            }
        }
        // Coefficient action.
        for (int r = 0; r < coeff.dim(); ++r) {
            if (coeff.action[g][r][k] != 0) emit(word, r, coeff.action[g][r][k]);
        }
    }

    // Differential of a cochain element, in (target bucket element -> coefficient) form.
    void differential(const Elem& e, const BucketKey& key,
                      std::map<int, Rational>& out, const Bucket* target) {
        const auto& [word, k] = e;
        auto emit = [&](std::vector<int> nw, int nk, const Rational& c) {
            if (c == 0) return;
            Rational s = rules.canonicalize(nw);
            if (s == 0) return;
            if (!target) {
                require_internal(false, "differential left the enumerated cochain space");
            }
            auto iit = target->index.find({nw, nk});
            require_internal(iit != target->index.end(), "differential target element missing");
            Rational nv = (out.count(iit->second) ? out[iit->second] : Rational(0)) + s * c;
            if (nv == 0)
                out.erase(iit->second);
            else
                out[iit->second] = nv;
        };
        // Cobracket part: replace letter c by -1/2 f_{ab}^c u^a u^b with the
        // derivation prefix sign.
        Rational prefix(1);
        for (size_t pos = 0; pos < word.size(); ++pos) {
            int cgen = word[pos];
            auto it = cobracket.find(cgen);
            if (it != cobracket.end()) {
                for (const auto& [a, b, f] : it->second) {
                    std::vector<int> nw;
                    nw.reserve(word.size() + 1);
                    nw.insert(nw.end(), word.begin(), word.begin() + static_cast<long>(pos));
                    nw.push_back(a);
                    nw.push_back(b);
                    nw.insert(nw.end(), word.begin() + static_cast<long>(pos) + 1, word.end());
                    emit(std::move(nw), k, Rational(prefix * f * Rational(-1, 2)));
                }
            }
            if (rules.anticommuting(cgen)) prefix = -prefix;
        }
        // Action part: u^a at the front, coefficient moved by u_a.
        for (int a : rad) {
            if (lie.basis[a].odd) continue; // even coefficient modules
            for (int r = 0; r < coeff.dim(); ++r) {
                if (coeff.action[a][r][k] == 0) continue;
                std::vector<int> nw;
                nw.reserve(word.size() + 1);
                nw.push_back(a);
                nw.insert(nw.end(), word.begin(), word.end());
                emit(std::move(nw), r, coeff.action[a][r][k]);
            }
        }
    }

    void build_blocks() {
        std::vector<int> gens;
        for (size_t i = 0; i < lie.chevalley_e.size(); ++i) {
            gens.push_back(lie.chevalley_e[i]);
            gens.push_back(lie.chevalley_f[i]);
        }
        Weight zero = Weight::zero(lie.rs->rank());
        for (const auto& [key, bucket] : buckets) {
            if (!(key.weight == zero)) continue;
            if (max_degree >= 0 && key.degree > max_degree) continue;
            long n = static_cast<long>(bucket.elems.size());
            if (n == 0) continue;
            // Joint kernel of the raising and lowering actions.
            std::vector<std::vector<Rational>> rows;
            for (int g : gens) {
                std::map<int, std::map<std::pair<BucketKey, int>, Rational>> cols;
                std::map<std::pair<BucketKey, int>, int> rowindex;
                for (long c = 0; c < n; ++c) {
                    lie_derivative(g, bucket.elems[c], key, cols[static_cast<int>(c)]);
                    for (const auto& [tk, v] : cols[static_cast<int>(c)])
                        if (!rowindex.count(tk)) {
                            int idx = static_cast<int>(rowindex.size());
                            rowindex[tk] = idx;
                        }
                }
                size_t base = rows.size();
                rows.resize(base + rowindex.size(), std::vector<Rational>(n, Rational(0)));
                for (long c = 0; c < n; ++c)
                    for (const auto& [tk, v] : cols[static_cast<int>(c)]) rows[base + rowindex[tk]][c] = v;
            }
            std::vector<std::vector<Rational>> kernel =
                rows.empty() ? std::vector<std::vector<Rational>>() : mat_kernel(rows);
            if (rows.empty()) {
                // No equations: everything is invariant.
                kernel.assign(n, std::vector<Rational>(n, Rational(0)));
                for (long i = 0; i < n; ++i) kernel[i][i] = 1;
            }
            if (kernel.empty()) continue;
            CEComplex::Block blk;
            blk.degree = key.degree;
            blk.qpow = key.qpow;
            blk.tpow = key.tpow;
            blk.elems = bucket.elems;
            blk.dim = static_cast<long>(kernel.size());
            blk.basis.assign(n, std::vector<Rational>(kernel.size(), Rational(0)));
            for (size_t c = 0; c < kernel.size(); ++c)
                for (long r = 0; r < n; ++r) blk.basis[r][c] = kernel[c][r];
            cx->block_index_[{blk.degree, blk.qpow, blk.tpow}] = static_cast<int>(cx->blocks_.size());
            cx->blocks_.push_back(std::move(blk));
        }
    }

    void restrict_differential() {
        Weight zero = Weight::zero(lie.rs->rank());
        for (auto& blk : cx->blocks_) {
            if (max_degree >= 0 && blk.degree + 1 > max_degree) continue;
            BucketKey skey{blk.degree, blk.qpow, blk.tpow, zero};
            auto tit = cx->block_index_.find({blk.degree + 1, blk.qpow, blk.tpow});
            BucketKey tkey{blk.degree + 1, blk.qpow, blk.tpow, zero};
            auto tbucket = buckets.find(tkey);
            long tn = tbucket == buckets.end() ? 0 : static_cast<long>(tbucket->second.elems.size());
            // d in element coordinates applied to the invariant basis.
            Mat dmat(tn, std::vector<Rational>(blk.dim, Rational(0)));
            for (long col = 0; col < blk.dim; ++col) {
                std::map<int, Rational> acc;
                for (size_t r = 0; r < blk.elems.size(); ++r) {
                    if (blk.basis[r][col] == 0) continue;
                    std::map<int, Rational> de;
                    differential(blk.elems[r], skey,
                                 de, tbucket == buckets.end() ? nullptr : &tbucket->second);
                    for (const auto& [ti, v] : de) {
                        Rational nv = (acc.count(ti) ? acc[ti] : Rational(0)) + v * blk.basis[r][col];
                        if (nv == 0)
                            acc.erase(ti);
                        else
                            acc[ti] = nv;
                    }
                }
                for (const auto& [ti, v] : acc) dmat[ti][col] = v;
            }
            if (tit == cx->block_index_.end()) {
                // Target invariant block is empty; the image of an invariant
                // cochain must vanish there.
                for (const auto& row : dmat)
                    for (const auto& v : row)
                        require_internal(v == 0, "differential image escapes the invariant complex");
                blk.d.clear();
                continue;
            }
            CEComplex::Block& tblk = cx->blocks_[tit->second];
            bool ok = mat_solve_multi(tblk.basis, dmat, blk.d);
            require_internal(ok, "differential image is not invariant");
        }
        // d^2 = 0 on every consecutive restricted pair.
        for (const auto& blk : cx->blocks_) {
            if (blk.d.empty()) continue;
            auto tit = cx->block_index_.find({blk.degree + 1, blk.qpow, blk.tpow});
            if (tit == cx->block_index_.end()) continue;
            const CEComplex::Block& tblk = cx->blocks_[tit->second];
            if (tblk.d.empty()) continue;
            Mat sq = mat_mul(tblk.d, blk.d);
            for (const auto& row : sq)
                for (const auto& v : row) require_internal(v == 0, "d^2 != 0 on the relative complex");
        }
    }
};

CEComplex::CEComplex(std::shared_ptr<const FiniteGradedLie> lie, const FiniteModule& coefficients, Trunc trunc,
                     int max_degree)
    : lie_(std::move(lie)), trunc_(trunc), max_degree_(max_degree) {
    require_config(trunc_.bounded() || !lie_->has_odd_part(),
                   "super algebras need finite truncation bounds for the symmetric part");
    if (!trunc_.bounded()) {
        // Even algebras have a finite exterior algebra; pick covering bounds.
        int q = 0, t = 0;
        for (int a : lie_->radical_indices()) {
            q += lie_->basis[a].q_deg;
            t += lie_->basis[a].t_deg;
        }
        for (const auto& b : coefficients.basis) {
            q += std::abs(b.q_deg);
            t += std::abs(b.t_deg);
        }
        trunc_ = trunc_.meet(Trunc::bounds(q, t));
    }
    if (lie_->has_odd_part()) {
        for (int a : lie_->radical_indices()) {
            const auto& b = lie_->basis[a];
            require_config(b.odd ? b.t_deg == 1 : b.t_deg == 0,
                           "super complexes assume odd generators at t-degree 1 and even at t-degree 0");
        }
        for (const auto& b : coefficients.basis)
            require_config(b.t_deg == 0, "super complexes assume t-degree-zero coefficients");
    }
    CEBuilder builder(this, coefficients);
}

long CEComplex::cochain_dim(int degree) const {
    long total = 0;
    for (const auto& b : blocks_)
        if (b.degree == degree) total += b.dim;
    return total;
}

std::map<std::tuple<int, int, int>, long> CEComplex::cochain_block_dims() const {
    std::map<std::tuple<int, int, int>, long> out;
    for (const auto& b : blocks_) out[{b.degree, b.qpow, b.tpow}] = b.dim;
    return out;
}

CohomologyTable CEComplex::cohomology() const {
    CohomologyTable table;
    Weight zero = Weight::zero(lie_->rs->rank());
    for (const auto& blk : blocks_) {
        if (max_degree_ >= 0 && blk.degree >= max_degree_) {
            // H at the top retained degree needs the outgoing differential.
            continue;
        }
        long rank_out = blk.d.empty() ? 0 : mat_rank(blk.d);
        long rank_in = 0;
        auto pit = block_index_.find({blk.degree - 1, blk.qpow, blk.tpow});
        if (pit != block_index_.end() && !blocks_[pit->second].d.empty()) rank_in = mat_rank(blocks_[pit->second].d);
        long h = blk.dim - rank_out - rank_in;
        require_internal(h >= 0, "negative cohomology dimension");
        if (h > 0) table.dims[{blk.degree, blk.qpow, blk.tpow, zero}] = h;
    }
    return table;
}

SeriesQT CEComplex::cochain_euler(bool super_sign) const {
    SeriesQT out(trunc_);
    for (const auto& blk : blocks_) {
        int sign = (blk.degree + (super_sign ? blk.tpow : 0)) % 2 == 0 ? 1 : -1;
        out.add_coeff(blk.qpow, blk.tpow, Rational(sign * blk.dim));
    }
    return out;
}

bool CEComplex::express_invariant(int degree, int qpow, int tpow, const std::vector<Rational>& mono_coords,
                                  std::vector<Rational>& coords_out, bool& d_zero) const {
    auto it = block_index_.find({degree, qpow, tpow});
    if (it == block_index_.end()) return false;
    const Block& blk = blocks_[it->second];
    if (!mat_solve(blk.basis, mono_coords, coords_out)) return false;
    d_zero = true;
    if (!blk.d.empty()) {
        for (size_t r = 0; r < blk.d.size(); ++r) {
            Rational acc(0);
            for (size_t c = 0; c < coords_out.size(); ++c) acc += blk.d[r][c] * coords_out[c];
            if (acc != 0) d_zero = false;
        }
    }
    return true;
}

SeriesQT ext_euler(const std::shared_ptr<const FiniteGradedLie>& lie, const FiniteModule& m,
                   const FiniteModule& n, Trunc trunc) {
    require_config(lie->tau.has_value(), "ext_euler needs an anti-involution on the Lie algebra");
    FiniteModule hom = hom_module(m, dual_module(n));
    if (hom.dim() == 0) return SeriesQT::zero(trunc);
    CEComplex cx(lie, hom, trunc);
    CohomologyTable h = cx.cohomology();
    bool super = lie->has_odd_part();
    SeriesQT out(trunc);
    for (const auto& [key, dim] : h.dims) {
        auto [deg, qp, tp, w] = key;
        int sign = (deg + (super ? tp : 0)) % 2 == 0 ? 1 : -1;
        out.add_coeff(qp, tp, Rational(sign * dim));
    }
    return out;
}

EulerPairingReport verify_euler_vs_pairing(const std::shared_ptr<const FiniteGradedLie>& lie,
                                           const FiniteModule& m, const FiniteModule& n, Trunc trunc) {
    EulerPairingReport rep;
    rep.euler = ext_euler(lie, m, n, trunc);
    GradedLieData data = lie->character_data(trunc);
    rep.pairing = pair_characters(data, m.character(trunc), n.character(trunc));
    rep.pass = rep.euler == rep.pairing;
    return rep;
}

PhiCocycleReport phi_cocycle_check(std::shared_ptr<const RootSystem> rs, int num_even_generators) {
    require_config(num_even_generators >= 2, "phi cocycle requires two independent linear maps");
    auto lie = two_step_polynomial_current_lie(rs, num_even_generators);
    FiniteModule triv = trivial_module(lie);
    CEComplex cx(lie, triv, Trunc::bounds(3, 0), 3);
    PhiCocycleReport rep;
    rep.c1_empty = cx.cochain_dim(1) == 0;

    // Killing form on the semisimple slice.
    int gd = semisimple_lie(rs)->dim();
    Mat kap(gd, std::vector<Rational>(gd, Rational(0)));
    std::vector<Mat> ad(gd, Mat(gd, std::vector<Rational>(gd, Rational(0))));
    for (int a = 0; a < gd; ++a)
        for (int j = 0; j < gd; ++j)
            for (const auto& [k, c] : lie->bracket(a, j))
                if (k < gd) ad[a][k][j] = c;
    for (int a = 0; a < gd; ++a)
        for (int b = 0; b < gd; ++b) {
            Mat p = mat_mul(ad[a], ad[b]);
            Rational tr(0);
            for (int i = 0; i < gd; ++i) tr += p[i][i];
            kap[a][b] = tr;
        }
    Mat id(gd, std::vector<Rational>(gd, Rational(0)));
    for (int i = 0; i < gd; ++i) id[i][i] = 1;
    Mat kinv;
    require_internal(mat_solve_multi(kap, id, kinv), "Killing form must be nondegenerate");

    // phi = sum kappa^{ab} (u_a x1)* ^ (u_b x2)*; layer i sits at indices i*gd..(i+1)*gd-1.
    auto bit = std::find_if(cx.blocks().begin(), cx.blocks().end(), [](const CEComplex::Block& b) {
        return b.degree == 2 && b.qpow == 2 && b.tpow == 0;
    });
    require_internal(bit != cx.blocks().end(), "phi block missing from the complex");
    std::vector<Rational> coords(bit->elems.size(), Rational(0));
    bool any = false;
    for (int a = 0; a < gd; ++a)
        for (int b = 0; b < gd; ++b) {
            if (kinv[a][b] == 0) continue;
            std::vector<int> word = {gd + a, 2 * gd + b};
            for (size_t e = 0; e < bit->elems.size(); ++e)
                if (bit->elems[e].first == word && bit->elems[e].second == 0) {
                    coords[e] += kinv[a][b];
                    any = true;
                }
        }
    require_internal(any, "phi has no support in the enumerated complex");
    std::vector<Rational> inv_coords;
    bool d_zero = false;
    bool expressed = cx.express_invariant(2, 2, 0, coords, inv_coords, d_zero);
    bool nonzero = false;
    for (const auto& c : inv_coords) nonzero = nonzero || c != 0;
    rep.phi_invariant_nonzero = expressed && nonzero;
    rep.d_phi_zero = expressed && d_zero;
    rep.h2_dim_at_block = cx.cohomology().dim(2, 2, 0);
    rep.pass = rep.c1_empty && rep.phi_invariant_nonzero && rep.d_phi_zero && rep.h2_dim_at_block >= 1;
    return rep;
}

} // namespace macd
