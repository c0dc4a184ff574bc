#include "f1geom/quadric_strata.hpp"

namespace f1 {

namespace {

Stratum make_stratum(std::string name, Fan fan) {
  CountPolynomial poly = fan_count_poly(fan);
  return {std::move(name), std::move(fan), std::move(poly)};
}

}  // namespace

const std::array<Stratum, 4>& quadric_strata() {
  static const std::array<Stratum, 4> strata{
      make_stratum("S1", standard_fan(StandardFan::Affine, 4)),
      make_stratum("S2", standard_fan(StandardFan::Affine, 3)),
      make_stratum("S3", standard_fan(StandardFan::Affine, 2)),
      make_stratum("S4", standard_fan(StandardFan::Projective, 2)),
  };
  return strata;
}

CountPolynomial quadric_count_poly() {
  CountPolynomial total;
  for (const auto& s : quadric_strata()) total += s.count_poly;
  return total;
}

std::array<Integer, 4> quadric_stratum_f1_counts(CyclotomicIndex n) {
  std::array<Integer, 4> counts;
  const auto& strata = quadric_strata();
  for (std::size_t i = 0; i < strata.size(); ++i) counts[i] = Integer(glued_points(strata[i].fan, n).size());
  return counts;
}

Integer quadric_f1_count(CyclotomicIndex n) {
  Integer total = 0;
  for (const auto& c : quadric_stratum_f1_counts(n)) total += c;
  return total;
}

}  // namespace f1
