#pragma once

// Brute-force point counts over prime fields; ground truth for the counting
// polynomials.

#include "f1geom/lattice_fan.hpp"
#include "f1geom/zeta_engine.hpp"

#include <array>
#include <vector>

namespace f1 {

/// Z/p for a prime p <= 10^4, checked by trial division.
class PrimeField {
 public:
  explicit PrimeField(long p);
  long value() const noexcept { return p_; }

  long reduce(long a) const noexcept { return ((a % p_) + p_) % p_; }
  long mul(long a, long b) const noexcept { return (a * b) % p_; }
  long pow(long a, long e) const;
  long inverse(long a) const;

 private:
  long p_;
};

bool is_prime(long n);

/// #P(fan)(F_p) from every monoid homomorphism S_tau -> (F_p, x) of every
/// maximal cone, glued on (vanishing face, torus values).
Integer toric_count_fq(const Fan& f, const PrimeField& p);

/// #Q(F_p) for Q: xy - zt + uv = 0 in P^5. Requires p <= 11.
Integer quadric_count_fq(const PrimeField& p);

/// Counts of the strata {x != 0}, {x = 0, z != 0}, {x = z = 0, u != 0} and
/// {x = z = u = 0} of Q(F_p).
std::array<Integer, 4> quadric_stratum_counts_fq(const PrimeField& p);

/// #P^d(F_p) by normalizing every nonzero vector of F_p^{d+1}.
Integer projective_count_fq(int d, const PrimeField& p);

struct OracleComparison {
  long prime = 0;
  Integer formula;
  Integer oracle;

  bool agrees() const { return formula == oracle; }
};

std::vector<OracleComparison> compare_with_oracle(const CountPolynomial& formula, const Fan& f,
                                                  const std::vector<long>& primes);

}  // namespace f1
