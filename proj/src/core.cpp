#include "f1geom/core.hpp"

#include <sstream>

namespace f1 {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateRay: return "DegenerateRay";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::NotInMonoid: return "NotInMonoid";
    case ErrorKind::PoleAt: return "PoleAt";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::InconsistentSamples: return "InconsistentSamples";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FanError: return "FanError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

IntVector make_vector(std::initializer_list<long> coords) {
  IntVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long c : coords) v(i++) = c;
  return v;
}

std::string format_vector(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v(i);
  }
  out << ')';
  return out.str();
}

}  // namespace f1
