#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "macd/char_element.hpp"
#include "macd/root_system.hpp"

namespace macd {

// Coefficient algebra of a current-type graded Lie (super)algebra g (x) A.
struct AlgebraSpec {
    enum class Kind { PolyX, PolyXXi, TruncX, PolyXY, Explicit };

    struct Slice {
        int q = 0;
        int t = 0;
        int even = 0;
        int odd = 0;
    };

    Kind kind = Kind::PolyX;
    int trunc_n = 0;                  // TruncX: A = C[x]/(x^n)
    std::vector<Slice> explicit_dims; // Explicit: graded dimensions of A_+
    std::string explicit_label;

    std::string label() const;
    static AlgebraSpec poly_x() { return AlgebraSpec{Kind::PolyX, 0, {}, {}}; }
    static AlgebraSpec poly_x_xi() { return AlgebraSpec{Kind::PolyXXi, 0, {}, {}}; }
    static AlgebraSpec trunc_x(int n);
    static AlgebraSpec poly_xy() { return AlgebraSpec{Kind::PolyXY, 0, {}, {}}; }
    static AlgebraSpec explicit_spec(std::vector<Slice> dims, std::string label);
};

// Weight-multiplicity table of a graded Lie (super)algebra: for each
// (q_deg, t_deg) != (0,0), a finite Lambda_0-stable weight multiset split
// into even and odd multiplicities.
class GradedLieData {
public:
    GradedLieData(std::shared_ptr<const RootSystem> rs, std::string name, Trunc t, bool anti_involution)
        : rs_(std::move(rs)), name_(std::move(name)), trunc_(t), has_anti_involution_(anti_involution) {}

    const std::shared_ptr<const RootSystem>& rs() const { return rs_; }
    const std::string& name() const { return name_; }
    const Trunc& trunc() const { return trunc_; }
    bool has_anti_involution() const { return has_anti_involution_; }

    using Slice = std::map<Weight, std::pair<long, long>>; // weight -> (even, odd)
    const std::map<std::pair<int, int>, Slice>& table() const { return table_; }

    void add_entry(int q_deg, int t_deg, const Weight& w, long even_mult, long odd_mult);
    // W-stability of each slice; mirror symmetry when an anti-involution is claimed.
    void validate() const;
    // True iff every table weight lies in the root lattice.
    bool root_lattice_supported() const;

private:
    std::shared_ptr<const RootSystem> rs_;
    std::string name_;
    Trunc trunc_;
    bool has_anti_involution_;
    std::map<std::pair<int, int>, Slice> table_;
};

// Lambda_{(q,t)} = g (x) A_{(q,t)}: adjoint weights of g times dim A_{(q,t)}.
GradedLieData current_algebra_data(std::shared_ptr<const RootSystem> rs, const AlgebraSpec& spec, Trunc t);

// The 11-flagged example over sl3: slice q^1 = vector-representation weights,
// slice q^2 = its dual, all even, no anti-involution.
GradedLieData t3_data(Trunc t);

// prod_{alpha in Phi}(1 - e^alpha) * prod over table entries of
// (1 - q^a t^b e^mu)^{even} * (1 - q^a t^b e^mu)^{-odd}, truncated.
CharElement pairing_kernel(const GradedLieData& data);

} // namespace macd
