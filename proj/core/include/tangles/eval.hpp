#pragma once

#include <span>

namespace tangles {

// Mutual information over the arithmetic mean of the two entropies. 0 when
// either labeling is constant. Throws kLengthMismatch.
double nmi(std::span<const int> labels_a, std::span<const int> labels_b);

// Pearson correlation of average ranks. 0 when either side has no variance.
// Throws kLengthMismatch for unequal lengths or fewer than two values.
double spearman_rho(std::span<const double> x, std::span<const double> y);

}  // namespace tangles
