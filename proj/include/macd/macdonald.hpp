#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "macd/char_element.hpp"
#include "macd/lie_data.hpp"
#include "macd/pairing.hpp"

namespace macd {

// Output of the triangular orthogonalization at one dominant weight.
//   P          unitriangular orthogonal element, lead coefficient 1 at lambda
//   raw_norm   pair(P, P), unit constant coefficient
//   norm       invert(raw_norm): the reported norm series z_lambda
//   Q          P * norm (the dual polynomial, lead coefficient z_lambda)
//   incomparable_residue   coefficients produced against weights below lambda
//                          in the total order but dominance-incomparable to it
struct MacdonaldResult {
    Weight lambda;
    CharElement P;
    SeriesQT raw_norm;
    SeriesQT norm;
    CharElement Q;
    std::map<Weight, SeriesQT> comparable_coeffs;
    std::map<Weight, SeriesQT> incomparable_residue;
};

struct BggTransition {
    std::vector<Weight> weights; // ascending by total order key
    // m[i][j] = coefficient of the weight[i]-row against Q_{weight[j]}
    std::vector<std::vector<SeriesQT>> m;
    const SeriesQT& entry(size_t la_idx, size_t mu_idx) const { return m[la_idx][mu_idx]; }
};

struct BggRow {
    Weight lambda, mu;
    bool pass = true;
    std::string detail; // first offending coefficient when failing
};

struct BggReport {
    std::vector<BggRow> rows;
    bool all_pass = true;
};

struct NormProductRow {
    Weight lambda;
    bool pass = true;
    SeriesQT got, expected;
};

struct NormProductReport {
    std::vector<NormProductRow> rows;
    bool all_pass = true;
};

// Generalized Macdonald polynomials over one algebra datum, with a memoized
// recursion over dominant weights in total order. The recursion per chain is
// sequential; the memo table is internally synchronized.
class MacdonaldTable {
public:
    explicit MacdonaldTable(GradedLieData data);

    const GradedLieData& data() const { return data_; }

    const MacdonaldResult& polynomial(const Weight& lambda);
    SeriesQT norm(const Weight& lambda) { return polynomial(lambda).norm; }
    CharElement dual_polynomial(const Weight& lambda) { return polynomial(lambda).Q; }

    // s_lambda times the PBW character of U(Lambda_{>0}).
    CharElement projective_character(const Weight& lambda) const;

    // Transition coefficients m_{lambda,mu} computed two independent ways
    // (pairing against P_mu, and expansion over the Q basis); disagreement is
    // a hard error.
    BggTransition bgg_transition(const Weight& lambda_max);

    // Checks that every retained m_{lambda,mu} coefficient is a nonnegative
    // integer equal to the corresponding Schur coefficient of P_mu.
    BggReport verify_bgg(const Weight& lambda_max);

    // Allows injecting a precomputed result (cache restore).
    void restore(MacdonaldResult r);
    bool cached(const Weight& lambda) const;

private:
    GradedLieData data_;
    bool coset_filter_;
    std::map<Weight, MacdonaldResult> memo_;
    mutable std::mutex mu_;

    std::vector<Weight> lower_weights(const Weight& lambda) const;
    const MacdonaldResult& polynomial_locked(const Weight& lambda);
};

// For POLY_X data over rs: compares the norm of every dominant lambda with
// key <= key(lambda_max) against prod_i prod_{j=1}^{lambda_i} (1-q^j)^{-1}.
NormProductReport verify_norm_product(std::shared_ptr<const RootSystem> rs, const Weight& lambda_max, int Nq);

} // namespace macd
