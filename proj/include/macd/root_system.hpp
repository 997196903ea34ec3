#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "macd/rational.hpp"
#include "macd/weight.hpp"

namespace macd {

// (height, lex) key refining dominance: mu < la in dominance implies
// height(mu) < height(la); ties broken lexicographically on coordinates.
struct OrderKey {
    Rational height;
    std::vector<int> lex;

    bool operator<(const OrderKey& o) const {
        if (height != o.height) return height < o.height;
        return lex < o.lex;
    }
    bool operator==(const OrderKey& o) const { return height == o.height && lex == o.lex; }
    bool operator<=(const OrderKey& o) const { return *this < o || *this == o; }
};

// Root-system, Weyl-group, and weight-ordering combinatorics for a simple
// Lie algebra of bounded rank. Immutable after construction.
class RootSystem {
public:
    static std::shared_ptr<const RootSystem> build(char lie_type, int rank, int max_rank = 8);
    // Parses "A1", "G2", ...
    static std::shared_ptr<const RootSystem> build(const std::string& name, int max_rank = 8);

    char lie_type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    // Simple root alpha_j in fundamental-weight coordinates (column j of the Cartan matrix).
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    unsigned long long weyl_order() const { return weyl_order_; }
    // Symmetrizers d_i = (alpha_i, alpha_i)/2, normalized so short roots have d = 1.
    const std::vector<Rational>& symmetrizers() const { return sym_; }

    Weight simple_reflection(int i, const Weight& w) const;
    std::vector<Weight> weyl_orbit(const Weight& w) const;
    Weight dominant_representative(const Weight& w) const;

    // mu <= la iff la - mu is a nonnegative integer combination of simple roots.
    bool dominance_leq(const Weight& mu, const Weight& la) const;
    OrderKey total_order_key(const Weight& w) const;
    // All dominant mu <= la in dominance order, ascending by total_order_key (la included).
    std::vector<Weight> dominant_weights_below(const Weight& la) const;
    // All dominant mu with key(mu) <= key(la), ascending by total_order_key.
    std::vector<Weight> dominant_weights_key_leq(const Weight& la) const;
    // -w0(la): highest weight of the linear dual irreducible.
    Weight negate_longest(const Weight& la) const;

    // Coordinates of w in the simple-root basis (rational).
    std::vector<Rational> root_coords(const Weight& w) const;
    bool in_root_lattice(const Weight& w) const;
    Rational height(const Weight& w) const;
    // W-invariant inner product with (alpha, alpha) = 2 for short roots.
    Rational inner(const Weight& a, const Weight& b) const;
    Weight rho() const;
    Rational weyl_dimension(const Weight& la) const;
    // Weight multiplicities of the irreducible L(la) at dominant weights (Freudenthal).
    std::map<Weight, long> irreducible_multiplicities(const Weight& la) const;

private:
    RootSystem() = default;

    char type_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<Rational>> cartan_inv_;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> positive_roots_;
    std::vector<Rational> sym_;
    unsigned long long weyl_order_ = 0;
};

} // namespace macd
