#include "macd/pairing.hpp"

#include <map>
#include <mutex>

namespace macd {

const CharElement& cached_pairing_kernel(const GradedLieData& data) {
    static std::map<std::string, CharElement> cache;
    static std::mutex mu;
    std::string key = data.name() + "|" + data.trunc().str();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, pairing_kernel(data)).first;
    return it->second;
}

SeriesQT pair_characters(const GradedLieData& data, const CharElement& f, const CharElement& g) {
    require_config(f.trunc() == data.trunc() && g.trunc() == data.trunc(),
                   "pairing operands must match the data truncation " + data.trunc().str());
    require_config(f.w_invariant(), "pairing requires a W-invariant first operand");
    require_config(g.w_invariant(), "pairing requires a W-invariant second operand");
    const CharElement& kernel = cached_pairing_kernel(data);
    CharElement h = f * bar_involution(g);
    // [h * kernel]_1 without materializing the product.
    SeriesQT acc = SeriesQT::zero(data.trunc());
    for (const auto& [w, s] : h.terms()) {
        SeriesQT k = kernel.coeff(-w);
        if (!k.is_zero()) acc += s * k;
    }
    return acc.scaled(Rational(1, static_cast<long>(data.rs()->weyl_order())));
}

namespace {

// prod over r >= 0 of (1 - q^r e^alpha) / (1 - t q^r e^alpha), all alpha in Phi,
// truncated; factors with r > Nq contribute 1.
CharElement macdonald_weight_product(const std::shared_ptr<const RootSystem>& rs, Trunc tr) {
    CharElement prod = CharElement::one(rs, tr);
    for (const auto& pa : rs->positive_roots()) {
        for (const Weight& a : {pa, -pa}) {
            for (int r = 0; r <= tr.nq; ++r) {
                CharElement num(rs, tr);
                num.add_term(Weight::zero(rs->rank()), SeriesQT::one(tr));
                num.add_term(a, SeriesQT::monomial(r, 0, Rational(-1), tr));
                prod = prod * num;
                if (tr.nt >= 1) {
                    CharElement den(rs, tr);
                    int kmax = tr.nt;
                    if (r > 0) kmax = std::min(kmax, tr.nq / r);
                    for (int k = 0; k <= kmax; ++k)
                        den.add_term(a.scaled(k), SeriesQT::monomial(r * k, k, Rational(1), tr));
                    prod = prod * den;
                }
            }
        }
    }
    return prod;
}

// (prod_{r>0}(1-q^r) / prod_{r>=0}(1-t q^r))^{rank}, truncated.
SeriesQT macdonald_prefactor(int rank, Trunc tr) {
    SeriesQT pf = SeriesQT::one(tr);
    for (int r = 1; r <= tr.nq; ++r) {
        SeriesQT f = SeriesQT::one(tr);
        f.add_coeff(r, 0, Rational(-1));
        pf = pf * f;
    }
    for (int r = 0; r <= tr.nq; ++r) {
        SeriesQT g = SeriesQT::zero(tr);
        int kmax = tr.nt;
        if (r > 0) kmax = std::min(kmax, tr.nq / r);
        if (kmax < 0) kmax = 0;
        for (int k = 0; k <= kmax; ++k) g.add_coeff(r * k, k, Rational(1));
        pf = pf * g;
    }
    SeriesQT out = SeriesQT::one(tr);
    for (int i = 0; i < rank; ++i) out = out * pf;
    return out;
}

} // namespace

SeriesQT macdonald_qt_pair(std::shared_ptr<const RootSystem> rs, const CharElement& f, const CharElement& g,
                           Trunc tr) {
    GradedLieData data = current_algebra_data(rs, AlgebraSpec::poly_x_xi(), tr);
    SeriesQT via_kernel = pair_characters(data, f, g);

    // Closed-form product path.
    CharElement h = f * bar_involution(g) * macdonald_weight_product(rs, tr);
    SeriesQT via_product =
        constant_term(h).scaled(Rational(1, static_cast<long>(rs->weyl_order()))) * macdonald_prefactor(rs->rank(), tr);

    require_internal(via_kernel == via_product,
                     "macdonald_qt_pair path disagreement: kernel " + via_kernel.str() + " vs product " +
                         via_product.str());
    return via_kernel;
}

} // namespace macd
