#pragma once

// The quadric Q: xy - zt + uv = 0 in P^5, cut into the locally closed pieces
//   S1 = {x != 0} ~ A^4, S2 = {x = 0, z != 0} ~ A^3,
//   S3 = {x = z = 0, u != 0} ~ A^2, S4 = {x = z = u = 0} ~ P^2.

#include "f1geom/f1_points.hpp"
#include "f1geom/zeta_engine.hpp"

#include <array>
#include <string>

namespace f1 {

struct Stratum {
  std::string name;
  Fan fan;  // the toric model of the stratum
  CountPolynomial count_poly;
};

const std::array<Stratum, 4>& quadric_strata();

/// x^4 + x^3 + 2x^2 + x + 1.
CountPolynomial quadric_count_poly();

/// Glued F_1^n-point counts of the four strata.
std::array<Integer, 4> quadric_stratum_f1_counts(CyclotomicIndex n);

/// #X(R_n) as the disjoint union of the strata.
Integer quadric_f1_count(CyclotomicIndex n);

}  // namespace f1
