#pragma once

#include "f1geom/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace f1 {

/// Divides out the content of v. Throws DegenerateRay for the zero vector.
LatticeVector primitive(const LatticeVector& v);

/// A simplicial cone in N_R = R^rank, stored as its sorted primitive rays.
class Cone {
 public:
  Cone() = default;

  /// Primitivizes and sorts the rays. Throws DegenerateRay for a zero ray and
  /// InvalidArgument for repeated, mis-sized or linearly dependent rays.
  Cone(int rank, std::vector<LatticeVector> rays);

  static Cone zero(int rank) { return Cone(rank, {}); }

  int rank() const noexcept { return rank_; }
  int dim() const noexcept { return static_cast<int>(rays_.size()); }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }

  /// dim x rank matrix with one ray per row.
  IntMatrix ray_matrix() const;

  bool has_ray(const LatticeVector& ray) const;

  /// The face spanned by the rays whose bit is set in `mask`.
  Cone face(unsigned long mask) const;

  std::string to_string() const;

  friend bool operator==(const Cone& a, const Cone& b);
  friend bool operator<(const Cone& a, const Cone& b);
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

 private:
  int rank_ = 0;
  std::vector<LatticeVector> rays_;
};

/// True iff the rays extend to a Z-basis of Z^rank (all Smith divisors 1).
bool is_regular(const Cone& c);

/// All 2^dim faces, the zero cone and c included, in canonical order.
std::vector<Cone> faces(const Cone& c);

/// True iff the intersection of the two cones is the cone on their common
/// rays. Decided exactly from the extreme rays of the cone of nonnegative
/// relations between the two ray sets.
bool meet_in_common_face(const Cone& a, const Cone& b);

class Fan {
 public:
  Fan() = default;

  /// Stores the cones as given (deduplicated, canonically ordered); no face
  /// closure and no validation. Use make_fan for checked construction.
  static Fan from_cones(int rank, std::vector<Cone> cones);

  int rank() const noexcept { return rank_; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  bool contains(const Cone& c) const;

  /// Cones that are not a proper face of another cone of the fan.
  std::vector<Cone> maximal_cones() const;

  /// Distinct rays of all cones, lexicographically sorted.
  std::vector<LatticeVector> rays() const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.cones_ == b.cones_;
  }

 private:
  int rank_ = 0;
  std::vector<Cone> cones_;
};

/// Reason the fan is invalid, or nullopt when it is a valid regular fan.
std::optional<std::string> fan_defect(const Fan& f);

bool is_valid_fan(const Fan& f);

/// Face-closes the given cones and validates. Throws FanError naming the
/// offending cone (pair) when the result is not a valid regular fan.
Fan make_fan(int rank, const std::vector<Cone>& maximal_cones);

/// Wall criterion: full-dimensional maximal cones, every codimension-one cone
/// in exactly two of them, and a connected adjacency graph.
bool is_complete(const Fan& f);

/// Generators of S_tau = tau^dual ∩ M for a regular cone tau.
struct MonoidPresentation {
  Cone cone;
  int rank = 0;
  std::vector<LatticeVector> affine_gens;  // <affine_gens[a], ray_b> = delta_ab
  std::vector<LatticeVector> unit_gens;    // Hermite-reduced basis of the annihilator of the cone
  IntMatrix coordinate_map;                // rank x rank; coordinates of m in (affine, unit) basis

  /// Coordinates of m on affine_gens followed by unit_gens.
  IntVector coordinates(const LatticeVector& m) const;
};

/// Throws NotRegular for a singular cone and BadRank on a rank mismatch.
MonoidPresentation dual_monoid(const Cone& c, int rank);

enum class StandardFan { Projective, Affine, Torus };

/// Fans of P^d, A^d and G_m^d. Throws BadRank for d < 1.
Fan standard_fan(StandardFan kind, int d);

Fan fan_product(const Fan& f, const Fan& g);

}  // namespace f1
