#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "macd/lie_data.hpp"
#include "macd/linalg.hpp"
#include "macd/root_system.hpp"
#include "macd/weight.hpp"

namespace macd {

struct LieBasisElem {
    std::string label;
    Weight weight;
    int q_deg = 0;
    int t_deg = 0;
    bool odd = false;
};

using SparseVec = std::map<int, Rational>; // index -> coefficient

// Finite-dimensional graded Lie (super)algebra given by structure constants,
// with a designated semisimple (0,0)-slice carrying Chevalley generators.
// Basis layout: the semisimple part occupies the leading indices.
class FiniteGradedLie {
public:
    std::string name;
    std::shared_ptr<const RootSystem> rs;
    std::vector<LieBasisElem> basis;
    // brackets[{i,j}] = [u_i, u_j]; stored for all ordered pairs with nonzero value.
    std::map<std::pair<int, int>, SparseVec> brackets;
    std::vector<int> chevalley_e, chevalley_f, chevalley_h; // one index per simple root
    // Anti-involution tau as a signed basis map, when present.
    std::optional<std::vector<std::pair<int, Rational>>> tau;

    int dim() const { return static_cast<int>(basis.size()); }
    SparseVec bracket(int i, int j) const;
    std::vector<int> radical_indices() const; // (q,t) != (0,0)
    bool has_odd_part() const;

    // Graded Jacobi identity on all basis triples, grading additivity,
    // closure of the (0,0)-slice, and the anti-involution law when present.
    void validate(bool exhaustive_jacobi = true) const;

    // Weight table of the radical as pairing data.
    GradedLieData character_data(Trunc t) const;
};

// Module with an explicit exact-rational action matrix per Lie basis element.
// Purely even; odd Lie elements must act by zero.
class FiniteModule {
public:
    struct BasisElem {
        std::string label;
        Weight weight;
        int q_deg = 0;
        int t_deg = 0;
    };

    std::string name;
    std::shared_ptr<const FiniteGradedLie> lie;
    std::vector<BasisElem> basis;
    std::vector<Mat> action; // action[g] is dim x dim, column-acts on basis vectors

    int dim() const { return static_cast<int>(basis.size()); }
    void validate() const; // representation axiom and grading additivity
    CharElement character(Trunc t) const;
};

// Chevalley-basis semisimple Lie algebra of the given root system:
// h_1..h_r, then x_alpha over positive roots, then x_{-alpha}.
std::shared_ptr<const FiniteGradedLie> semisimple_lie(std::shared_ptr<const RootSystem> rs);

// g (x) C[x]/(x^n): radical slices g x^r at q-degree r, 1 <= r < n.
std::shared_ptr<const FiniteGradedLie> truncated_current_lie(std::shared_ptr<const RootSystem> rs, int n);

// g (x) C[x, xi]/(x^n) with odd xi: even slices g x^r (1 <= r < n) and odd
// slices g x^r xi (0 <= r < n) at t-degree 1.
std::shared_ptr<const FiniteGradedLie> truncated_super_current_lie(std::shared_ptr<const RootSystem> rs, int n);

// g (x) A with A = C[x_1..x_m] truncated at total degree 2.
std::shared_ptr<const FiniteGradedLie> two_step_polynomial_current_lie(std::shared_ptr<const RootSystem> rs,
                                                                      int num_generators);

// sl3 + vector representation at q^1 + its dual at q^2, bracket
// [x_i, x_j] = x_{ij}; no anti-involution.
std::shared_ptr<const FiniteGradedLie> t3_lie();

// Irreducible L(m w) over a rank-1 semisimple part, radical acting by zero.
FiniteModule irreducible_sl2_module(std::shared_ptr<const FiniteGradedLie> lie, int m);
FiniteModule trivial_module(std::shared_ptr<const FiniteGradedLie> lie);

// Graded linear dual with gradings negated and the action twisted by tau.
FiniteModule dual_module(const FiniteModule& m);

// Hom(M, N) with gradings grading(N) - grading(M).
FiniteModule hom_module(const FiniteModule& m, const FiniteModule& n);

// U(radical) (x) fiber truncated at q-degree qmax, for even radicals; the
// fiber must have the radical acting by zero.
FiniteModule induced_module(const FiniteModule& fiber, int qmax);

} // namespace macd
