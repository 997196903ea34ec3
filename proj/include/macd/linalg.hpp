#pragma once

#include <vector>

#include "macd/rational.hpp"

namespace macd {

// Dense exact-rational matrix helpers. Sizes here are desk scale; ranks use
// fraction-free (Bareiss) elimination on an integerized copy.
using Mat = std::vector<std::vector<Rational>>;

long mat_rank(const Mat& a);
Rational mat_det(const Mat& a); // square only

// Basis of the right kernel {x : a x = 0}, columns as vectors.
std::vector<std::vector<Rational>> mat_kernel(const Mat& a);

// Solves a x = b exactly; returns false if inconsistent. Any solution accepted
// (minimal tail of free variables set to zero).
bool mat_solve(const Mat& a, const std::vector<Rational>& b, std::vector<Rational>& x);

// Solves A X = B column-by-column; false on inconsistency.
bool mat_solve_multi(const Mat& a, const Mat& b, Mat& x);

Mat mat_mul(const Mat& a, const Mat& b);

} // namespace macd
