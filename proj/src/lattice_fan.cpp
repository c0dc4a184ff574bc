#include "f1geom/lattice_fan.hpp"

#include "f1geom/integer_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace f1 {

LatticeVector primitive(const LatticeVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd_value<Integer>(g, v(i));
  if (g == 0) throw Error(ErrorKind::DegenerateRay, "zero vector has no primitive generator");
  LatticeVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

Cone::Cone(int rank, std::vector<LatticeVector> rays) : rank_(rank) {
  if (rank < 0) throw Error(ErrorKind::BadRank, "negative rank");
  if (static_cast<int>(rays.size()) > rank)
    throw Error(ErrorKind::InvalidArgument, "more rays than the ambient rank");
  for (auto& r : rays) {
    if (r.size() != rank)
      throw Error(ErrorKind::InvalidArgument,
                  "ray " + format_vector(r) + " does not have " + std::to_string(rank) + " coordinates");
    r = primitive(r);
  }
  std::sort(rays.begin(), rays.end(), LexLess{});
  for (std::size_t i = 1; i < rays.size(); ++i)
    if (same_vector(rays[i - 1], rays[i]))
      throw Error(ErrorKind::InvalidArgument, "repeated ray " + format_vector(rays[i]));
  rays_ = std::move(rays);
  if (!rays_.empty() && exact_rank<Rational>(to_rational(ray_matrix())) != dim())
    throw Error(ErrorKind::InvalidArgument, "rays of " + to_string() + " are linearly dependent");
}

IntMatrix Cone::ray_matrix() const {
  IntMatrix m(dim(), rank_);
  for (int i = 0; i < dim(); ++i) m.row(i) = rays_[i].transpose();
  return m;
}

bool Cone::has_ray(const LatticeVector& ray) const {
  return std::binary_search(rays_.begin(), rays_.end(), ray, LexLess{});
}

Cone Cone::face(unsigned long mask) const {
  Cone out;
  out.rank_ = rank_;
  for (int i = 0; i < dim(); ++i)
    if (mask & (1UL << i)) out.rays_.push_back(rays_[i]);
  return out;
}

std::string Cone::to_string() const {
  std::ostringstream out;
  out << '{';
  for (int i = 0; i < dim(); ++i) out << (i ? "," : "") << format_vector(rays_[i]);
  out << '}';
  return out.str();
}

bool operator==(const Cone& a, const Cone& b) {
  if (a.rank_ != b.rank_ || a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (!same_vector(a.rays_[i], b.rays_[i])) return false;
  return true;
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.rays_.begin(), a.rays_.end(), b.rays_.begin(), b.rays_.end(),
                                      LexLess{});
}

bool is_regular(const Cone& c) {
  if (c.dim() == 0) return true;
  const auto divisors = elementary_divisors<Integer>(c.ray_matrix());
  if (static_cast<int>(divisors.size()) != c.dim()) return false;
  return std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; });
}

std::vector<Cone> faces(const Cone& c) {
  std::vector<Cone> out;
  const unsigned long count = 1UL << c.dim();
  out.reserve(count);
  for (unsigned long mask = 0; mask < count; ++mask) out.push_back(c.face(mask));
  std::sort(out.begin(), out.end());
  return out;
}

bool meet_in_common_face(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) return false;
  std::vector<LatticeVector> cols;
  std::vector<bool> common;
  for (const auto& r : a.rays()) {
    cols.push_back(r);
    common.push_back(b.has_ray(r));
  }
  const std::size_t split = cols.size();
  for (const auto& r : b.rays()) {
    cols.push_back(-r);
    common.push_back(a.has_ray(r));
  }
  const int d = a.rank();
  const int n = static_cast<int>(cols.size());
  if (n == 0) return true;

  // If the distinct rays are independent, coordinates are unique and the
  // intersection is spanned by the shared rays.
  {
    std::set<LatticeVector, LexLess> distinct(a.rays().begin(), a.rays().end());
    distinct.insert(b.rays().begin(), b.rays().end());
    RatMatrix m(d, static_cast<Eigen::Index>(distinct.size()));
    Eigen::Index j = 0;
    for (const auto& r : distinct) m.col(j++) = r.cast<Rational>();
    if (exact_rank<Rational>(m) == static_cast<Eigen::Index>(distinct.size())) return true;
  }

  RatMatrix relation(d, n);
  for (int j = 0; j < n; ++j) relation.col(j) = cols[j].cast<Rational>();
  const Eigen::Index max_support = exact_rank<Rational>(relation) + 1;

  // Extreme rays of { z >= 0 : relation z = 0 } have minimal support S with a
  // one-dimensional kernel on S, spanned by a vector of constant sign.
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    const int support = __builtin_popcountl(mask);
    if (support < 2 || support > max_support) continue;
    const unsigned long a_part = mask & ((1UL << split) - 1);
    if (a_part == 0 || a_part == mask) continue;
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (mask & (1UL << j)) idx.push_back(j);
    RatMatrix sub(d, support);
    for (int k = 0; k < support; ++k) sub.col(k) = relation.col(idx[k]);
    RatMatrix kernel = field_kernel<Rational>(sub);
    if (kernel.cols() != 1) continue;
    int sign = 0;
    bool extreme = true;
    for (int k = 0; k < support; ++k) {
      const Rational& z = kernel(k, 0);
      const int s = z > 0 ? 1 : (z < 0 ? -1 : 0);
      if (s == 0 || (sign != 0 && s != sign)) {
        extreme = false;
        break;
      }
      sign = s;
    }
    if (!extreme) continue;
    for (int j : idx)
      if (!common[j]) return false;
  }
  return true;
}

Fan Fan::from_cones(int rank, std::vector<Cone> cones) {
  Fan f;
  f.rank_ = rank;
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  f.cones_ = std::move(cones);
  return f;
}

bool Fan::contains(const Cone& c) const { return std::binary_search(cones_.begin(), cones_.end(), c); }

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones_) {
    bool is_face = false;
    for (const auto& other : cones_) {
      if (other.dim() <= c.dim()) continue;
      if (std::all_of(c.rays().begin(), c.rays().end(), [&](const auto& r) { return other.has_ray(r); })) {
        is_face = true;
        break;
      }
    }
    if (!is_face) out.push_back(c);
  }
  return out;
}

std::vector<LatticeVector> Fan::rays() const {
  std::set<LatticeVector, LexLess> all;
  for (const auto& c : cones_) all.insert(c.rays().begin(), c.rays().end());
  return {all.begin(), all.end()};
}

std::optional<std::string> fan_defect(const Fan& f) {
  if (f.rank() < 1) return "fan rank must be at least 1";
  for (const auto& c : f.cones()) {
    if (c.rank() != f.rank()) return "cone " + c.to_string() + " has the wrong ambient rank";
    if (!is_regular(c)) return "cone " + c.to_string() + " is not regular";
    for (const auto& face : faces(c))
      if (!f.contains(face)) return "face " + face.to_string() + " of cone " + c.to_string() + " is missing";
  }
  const auto& cones = f.cones();
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (!meet_in_common_face(cones[i], cones[j]))
        return "cones " + cones[i].to_string() + " and " + cones[j].to_string() +
               " do not meet in a common face";
  return std::nullopt;
}

bool is_valid_fan(const Fan& f) { return !fan_defect(f).has_value(); }

Fan make_fan(int rank, const std::vector<Cone>& maximal_cones) {
  if (rank < 1) throw Error(ErrorKind::BadRank, "fan rank must be at least 1");
  std::vector<Cone> all;
  for (const auto& c : maximal_cones) {
    if (c.rank() != rank) throw Error(ErrorKind::FanError, "cone " + c.to_string() + " has the wrong ambient rank");
    if (c.dim() >= static_cast<int>(8 * sizeof(unsigned long) - 1))
      throw Error(ErrorKind::TooLarge, "cone dimension too large");
    if (!is_regular(c)) throw Error(ErrorKind::FanError, "cone " + c.to_string() + " is not regular");
    auto fs = faces(c);
    all.insert(all.end(), fs.begin(), fs.end());
  }
  all.push_back(Cone::zero(rank));
  Fan f = Fan::from_cones(rank, std::move(all));
  if (auto defect = fan_defect(f)) throw Error(ErrorKind::FanError, *defect);
  return f;
}

bool is_complete(const Fan& f) {
  const int d = f.rank();
  const auto maximal = f.maximal_cones();
  if (maximal.empty()) return false;
  for (const auto& c : maximal)
    if (c.dim() != d) return false;

  std::map<Cone, std::vector<std::size_t>> walls;
  for (const auto& c : f.cones())
    if (c.dim() == d - 1) walls[c];
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (int drop = 0; drop < d; ++drop) {
      const unsigned long mask = ((1UL << d) - 1) & ~(1UL << drop);
      walls[maximal[i].face(mask)].push_back(i);
    }

  std::vector<std::size_t> parent(maximal.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [wall, owners] : walls) {
    if (owners.size() != 2) return false;
    parent[find(owners[0])] = find(owners[1]);
  }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < maximal.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

IntVector MonoidPresentation::coordinates(const LatticeVector& m) const {
  if (m.size() != rank) throw Error(ErrorKind::InvalidArgument, "dual vector has the wrong rank");
  return coordinate_map * m;
}

MonoidPresentation dual_monoid(const Cone& c, int rank) {
  if (c.rank() != rank) throw Error(ErrorKind::BadRank, "cone rank does not match " + std::to_string(rank));
  if (!is_regular(c)) throw Error(ErrorKind::NotRegular, "cone " + c.to_string() + " is not regular");
  const int r = c.dim();
  MonoidPresentation out;
  out.cone = c;
  out.rank = rank;

  IntMatrix basis(rank, rank);
  if (r == 0) {
    basis = IntMatrix::Identity(rank, rank);
  } else {
    // rays * V = [H | 0] with H unimodular lower triangular; rescaling the
    // first block by H^-1 gives rays * W = [I | 0].
    const IntMatrix rays = c.ray_matrix();
    const auto col = column_hermite_form<Integer>(rays);
    const IntMatrix h = col.form.leftCols(r);
    const IntMatrix h_inv = unimodular_inverse(h);
    basis.leftCols(r) = col.transform.leftCols(r) * h_inv;
    if (r < rank) basis.rightCols(rank - r) = integer_kernel<Integer>(rays);
  }
  for (int a = 0; a < r; ++a) out.affine_gens.push_back(basis.col(a));
  for (int u = r; u < rank; ++u) out.unit_gens.push_back(basis.col(u));
  out.coordinate_map = unimodular_inverse(basis);
  return out;
}

Fan standard_fan(StandardFan kind, int d) {
  if (d < 1) throw Error(ErrorKind::BadRank, "standard fans need d >= 1");
  std::vector<LatticeVector> basis;
  for (int i = 0; i < d; ++i) {
    LatticeVector e = LatticeVector::Zero(d);
    e(i) = 1;
    basis.push_back(e);
  }
  switch (kind) {
    case StandardFan::Torus:
      return make_fan(d, {Cone::zero(d)});
    case StandardFan::Affine:
      return make_fan(d, {Cone(d, basis)});
    case StandardFan::Projective: {
      std::vector<LatticeVector> rays = basis;
      rays.push_back(-LatticeVector::Ones(d));
      std::vector<Cone> maximal;
      for (int skip = 0; skip <= d; ++skip) {
        std::vector<LatticeVector> chosen;
        for (int i = 0; i <= d; ++i)
          if (i != skip) chosen.push_back(rays[i]);
        maximal.emplace_back(d, std::move(chosen));
      }
      return make_fan(d, maximal);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown standard fan");
}

Fan fan_product(const Fan& f, const Fan& g) {
  const int d = f.rank() + g.rank();
  std::vector<Cone> cones;
  cones.reserve(f.cones().size() * g.cones().size());
  for (const auto& a : f.cones())
    for (const auto& b : g.cones()) {
      std::vector<LatticeVector> rays;
      for (const auto& r : a.rays()) {
        LatticeVector v = LatticeVector::Zero(d);
        v.head(f.rank()) = r;
        rays.push_back(v);
      }
      for (const auto& r : b.rays()) {
        LatticeVector v = LatticeVector::Zero(d);
        v.tail(g.rank()) = r;
        rays.push_back(v);
      }
      cones.emplace_back(d, std::move(rays));
    }
  return Fan::from_cones(d, std::move(cones));
}

}  // namespace f1
