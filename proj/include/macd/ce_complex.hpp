#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "macd/finite_lie.hpp"
#include "macd/series_qt.hpp"

namespace macd {

// Cohomology dimensions of the relative complex, keyed by
// (cohomological degree, q-power, t-power, weight) with powers in the output
// convention (negated cochain grading, nonnegative in practice). The weight
// is always zero on the invariant complex; kept for the record.
struct CohomologyTable {
    std::map<std::tuple<int, int, int, Weight>, long> dims;

    long dim(int degree, int qpow, int tpow) const {
        long total = 0;
        for (const auto& [k, v] : dims)
            if (std::get<0>(k) == degree && std::get<1>(k) == qpow && std::get<2>(k) == tpow) total += v;
        return total;
    }
    long dim_degree(int degree) const {
        long total = 0;
        for (const auto& [k, v] : dims)
            if (std::get<0>(k) == degree) total += v;
        return total;
    }
    bool empty() const { return dims.empty(); }
};

// Relative Chevalley-Eilenberg complex of (Lambda, Lambda_0) with coefficients
// in K: Lambda_0-invariant cochains on the radical, exterior on even
// generators and symmetric on odd ones, with exact differential matrices.
// d^2 = 0 is asserted at construction.
class CEComplex {
public:
    // trunc bounds the retained (q,t) output powers (and with it the symmetric
    // degree for super algebras); max_degree < 0 means all degrees.
    CEComplex(std::shared_ptr<const FiniteGradedLie> lie, const FiniteModule& coefficients, Trunc trunc,
              int max_degree = -1);

    const std::shared_ptr<const FiniteGradedLie>& lie() const { return lie_; }
    const Trunc& trunc() const { return trunc_; }
    int max_degree() const { return max_degree_; }

    // Invariant cochain dimension per degree / per graded block (output powers).
    long cochain_dim(int degree) const;
    std::map<std::tuple<int, int, int>, long> cochain_block_dims() const;

    CohomologyTable cohomology() const;

    // Euler characteristic per (q,t) block from cochain dimensions alone.
    SeriesQT cochain_euler(bool super_sign) const;

    struct Block {
        int degree = 0;
        int qpow = 0, tpow = 0; // output powers
        long dim = 0;           // invariant dimension
        // Weight-zero cochain elements: (generator index monomial, coefficient index).
        std::vector<std::pair<std::vector<int>, int>> elems;
        Mat basis; // columns: invariant vectors in element coordinates
        Mat d;     // restricted differential into the (degree+1) block, inv coords
    };
    const std::vector<Block>& blocks() const { return blocks_; }

    // Expresses an invariant cochain, given in monomial coordinates of the
    // matching block, on the invariant basis; also returns d of it.
    bool express_invariant(int degree, int qpow, int tpow, const std::vector<Rational>& mono_coords,
                           std::vector<Rational>& coords_out, bool& d_zero) const;

private:
    std::shared_ptr<const FiniteGradedLie> lie_;
    Trunc trunc_;
    int max_degree_;
    std::vector<Block> blocks_;
    std::map<std::tuple<int, int, int>, int> block_index_; // (degree,qpow,tpow) -> blocks_ position

    friend struct CEBuilder;
};

// Euler characteristic of Ext(M, N^dual): builds Hom(M, dual(N)), runs the
// relative complex, and alternates cohomology dimensions per graded block.
SeriesQT ext_euler(const std::shared_ptr<const FiniteGradedLie>& lie, const FiniteModule& m,
                   const FiniteModule& n, Trunc trunc);

struct EulerPairingReport {
    SeriesQT euler;
    SeriesQT pairing;
    bool pass = false;
};

// Compares ext_euler with the constant-term pairing on characters.
EulerPairingReport verify_euler_vs_pairing(const std::shared_ptr<const FiniteGradedLie>& lie,
                                           const FiniteModule& m, const FiniteModule& n, Trunc trunc);

struct PhiCocycleReport {
    bool d_phi_zero = false;
    bool c1_empty = false;
    bool phi_invariant_nonzero = false;
    long h2_dim_at_block = 0;
    bool pass = false;
};

// Assembles phi = sum_i kappa^{ab} (u_a x)* ^ (u_b y)* over g (x) C[x_1..x_m]
// truncated at degree 2 and certifies the nontrivial relative 2-cocycle.
PhiCocycleReport phi_cocycle_check(std::shared_ptr<const RootSystem> rs, int num_even_generators);

} // namespace macd
