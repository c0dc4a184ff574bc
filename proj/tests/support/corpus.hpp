#pragma once

#include "f1geom/hermitian_lattice.hpp"
#include "f1geom/lattice_fan.hpp"

#include <string>
#include <utility>
#include <vector>

namespace f1::testing {

struct NamedFan {
  std::string name;
  Fan fan;
};

inline std::vector<NamedFan> corpus_fans() {
  std::vector<NamedFan> out;
  for (int d = 1; d <= 3; ++d) {
    out.push_back({"P" + std::to_string(d), standard_fan(StandardFan::Projective, d)});
    out.push_back({"A" + std::to_string(d), standard_fan(StandardFan::Affine, d)});
    out.push_back({"Gm" + std::to_string(d), standard_fan(StandardFan::Torus, d)});
  }
  const Fan p1 = standard_fan(StandardFan::Projective, 1);
  out.push_back({"P1xP1", fan_product(p1, p1)});
  out.push_back({"A1xGm", fan_product(standard_fan(StandardFan::Affine, 1), standard_fan(StandardFan::Torus, 1))});
  return out;
}

inline std::vector<NamedFan> corpus_fans_up_to_rank(int max_rank) {
  std::vector<NamedFan> out;
  for (auto& f : corpus_fans())
    if (f.fan.rank() <= max_rank) out.push_back(std::move(f));
  return out;
}

// Every Phi with t <= 3 drawn from the rank-two vectors with entries in
// {-1, 0, 1} (one of each pair +-v), and every subset of {1, 2, 3} in rank one.
inline std::vector<PhiSystem> phi_corpus() {
  std::vector<PhiSystem> out;
  const std::vector<IntVector> rank2{make_vector({0, 1}), make_vector({1, -1}), make_vector({1, 0}),
                                     make_vector({1, 1})};
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<IntVector> v;
    for (unsigned i = 0; i < 4; ++i)
      if (mask & (1U << i)) v.push_back(rank2[i]);
    if (v.size() <= 3) out.emplace_back(2, std::move(v));
  }
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<IntVector> v;
    for (long i = 0; i < 3; ++i)
      if (mask & (1U << i)) v.push_back(make_vector({i + 1}));
    out.emplace_back(1, std::move(v));
  }
  return out;
}

}  // namespace f1::testing
