#pragma once

#include <optional>
#include <vector>

#include "pfh/qt_fraction.hpp"

namespace pfh {

using QTMatrix = std::vector<std::vector<QTFraction>>;

/// Rank over Q(q,t) by Gaussian elimination.
int rank(QTMatrix a);
/// Some x with a x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<std::vector<QTFraction>> solve(QTMatrix a, std::vector<QTFraction> b);

}  // namespace pfh
