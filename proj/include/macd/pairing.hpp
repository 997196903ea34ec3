#pragma once

#include <memory>

#include "macd/char_element.hpp"
#include "macd/lie_data.hpp"

namespace macd {

// Kernel of the algebra, computed once per (name, truncation) and shared
// behind a lock; safe for concurrent callers.
const CharElement& cached_pairing_kernel(const GradedLieData& data);

// <f, g> = constant_term(f * bar(g) * kernel) / |W|. Requires W-invariant
// operands at the data's truncation.
SeriesQT pair_characters(const GradedLieData& data, const CharElement& f, const CharElement& g);

// The (q,t) pairing over g (x) C[x,xi], computed through the kernel and
// cross-asserted against the closed-form product
//   (prod_{r>0}(1-q^r) / prod_{r>=0}(1-t q^r))^{rank} *
//   [f gbar prod_{r>=0, alpha in Phi} (1-q^r e^alpha)/(1-t q^r e^alpha)]_1 / |W|.
// Disagreement is a hard error.
SeriesQT macdonald_qt_pair(std::shared_ptr<const RootSystem> rs, const CharElement& f, const CharElement& g,
                           Trunc t);

} // namespace macd
