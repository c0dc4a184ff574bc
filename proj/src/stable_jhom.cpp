#include "f1geom/stable_jhom.hpp"

#include <vector>

namespace f1 {

namespace {

void require_even(int i) {
  if (i < 2 || i % 2 != 0) throw Error(ErrorKind::InvalidArgument, "i must be even and >= 2, got " + std::to_string(i));
}

}  // namespace

Rational bernoulli(int i) {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "negative Bernoulli index");
  if (i > 1 && i % 2 == 1) return 0;
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= i; ++m) {
    Rational sum = 0;
    Integer binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      sum += Rational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b.push_back(-sum / Rational(m + 1));
  }
  return b[static_cast<std::size_t>(i)];
}

Integer w_bernoulli(int i) {
  require_even(i);
  const Rational q = bernoulli(i) / Rational(2 * i);
  return denominator(q);
}

Integer w_gcd(int i, int j, long nmax) {
  require_even(i);
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "j must be >= 1");
  if (nmax < 3) throw Error(ErrorKind::InvalidArgument, "nmax must be >= 3");
  Integer g = 0;
  for (long n = 2; n <= nmax; ++n) {
    const Integer base = n;
    const Integer low = pow(base, static_cast<unsigned>(j));
    g = gcd(g, low * pow(base, static_cast<unsigned>(i)) - low);
  }
  return g;
}

StableGcd w_gcd_stable(int i, long nmax) {
  constexpr int kMaxJ = 40;
  int j = i + 8;
  Integer g = w_gcd(i, j, nmax);
  while (j < kMaxJ) {
    Integer next = w_gcd(i, j + 1, nmax);
    if (next == g) break;
    g = std::move(next);
    ++j;
  }
  return {g, j};
}

}  // namespace f1
