#pragma once

// Orders w_i of the image of J in degree 2i - 1, two ways: the denominator of
// b_i / 2i and the gcd of n^{i+j} - n^j over n.

#include "f1geom/core.hpp"

namespace f1 {

/// Bernoulli number b_i (b_1 = -1/2) from sum_{j<=m} C(m+1, j) b_j = 0.
Rational bernoulli(int i);

/// Denominator of b_i / (2i) for even i >= 2.
Integer w_bernoulli(int i);

/// gcd of n^{i+j} - n^j over 2 <= n <= nmax.
Integer w_gcd(int i, int j, long nmax);

struct StableGcd {
  Integer value;
  int j = 0;
};

/// w_gcd with j raised from i + 8 until the value repeats (j capped at 40).
StableGcd w_gcd_stable(int i, long nmax = 200);

}  // namespace f1
