#pragma once

#include "tlmine/model.hpp"

#include <span>
#include <vector>

namespace tlmine {

/// Intersection of two strictly increasing sequences. Uses a linear merge,
/// or galloping search from the shorter side when the sizes are skewed.
std::vector<TidOrdinal> intersect(std::span<const TidOrdinal> a, std::span<const TidOrdinal> b);

/// Same as intersect, writing into `out` (cleared first) to reuse storage.
void intersect_into(std::span<const TidOrdinal> a, std::span<const TidOrdinal> b,
                    std::vector<TidOrdinal>& out);

} // namespace tlmine
