#pragma once

// JSON documents for fans and short-vector systems.
//   fan: {"rank": d, "rays": [[...], ...], "cones": [[ray indices], ...]}
//   phi: {"rank": m, "vectors": [[...], ...]}

#include "f1geom/hermitian_lattice.hpp"
#include "f1geom/lattice_fan.hpp"

#include <string>
#include <string_view>

namespace f1 {

/// Rays are primitivized and the cones face-closed and validated. Syntax
/// errors raise ParseError with line and column, schema errors ParseError
/// with the field path, and geometric problems FanError.
Fan parse_fan(std::string_view text);

/// Canonical form: rays sorted lexicographically, maximal cones as sorted
/// index lists in sorted order, one ray per line.
std::string serialize_fan(const Fan& f);

/// Antipodal pairs, zero and repeated vectors raise ParseError.
PhiSystem parse_phi(std::string_view text);

std::string serialize_phi(const PhiSystem& phi);

/// Whole file as a string; ParseError when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace f1
