#include "f1geom/fan_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <fstream>
#include <sstream>

namespace f1 {

namespace {

using Json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // byte is one past the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto before = text.substr(0, end);
    const long line = 1 + std::count(before.begin(), before.end(), '\n');
    const std::size_t last_newline = before.rfind('\n');
    const std::size_t column = last_newline == std::string_view::npos ? end + 1 : end - last_newline;
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
  }
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object()) schema_error("<root>", "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(key, "missing");
  return *it;
}

void reject_unknown_keys(const Json& doc, std::initializer_list<const char*> known) {
  for (const auto& item : doc.items())
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return item.key() == k; }))
      schema_error(item.key(), "unknown field");
}

long integer_field(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) schema_error(field, "expected an integer");
  if (value.is_number_unsigned() && value.get<unsigned long long>() > static_cast<unsigned long long>(LONG_MAX))
    schema_error(field, "integer out of range");
  return value.get<long>();
}

int rank_field(const Json& doc) {
  const long rank = integer_field(require(doc, "rank"), "rank");
  if (rank < 1 || rank > 64) schema_error("rank", "must lie in [1, 64]");
  return static_cast<int>(rank);
}

std::vector<LatticeVector> vector_list(const Json& doc, const char* key, int rank) {
  const Json& list = require(doc, key);
  if (!list.is_array()) schema_error(key, "expected an array");
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = std::string(key) + "[" + std::to_string(i) + "]";
    if (!list[i].is_array()) schema_error(field, "expected an array of integers");
    if (list[i].size() != static_cast<std::size_t>(rank))
      schema_error(field, "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(list[i].size()));
    LatticeVector v(rank);
    for (int j = 0; j < rank; ++j)
      v(j) = integer_field(list[i][static_cast<std::size_t>(j)], field + "[" + std::to_string(j) + "]");
    out.push_back(std::move(v));
  }
  return out;
}

std::string json_vector(const IntVector& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v(i).str();
  }
  return out + "]";
}

}  // namespace

Fan parse_fan(std::string_view text) {
  const Json doc = parse_document(text);
  const int rank = rank_field(doc);
  reject_unknown_keys(doc, {"rank", "rays", "cones"});
  const auto rays = vector_list(doc, "rays", rank);

  const Json& cones = require(doc, "cones");
  if (!cones.is_array()) schema_error("cones", "expected an array");
  std::vector<Cone> maximal;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string field = "cones[" + std::to_string(i) + "]";
    if (!cones[i].is_array()) schema_error(field, "expected an array of ray indices");
    std::vector<LatticeVector> chosen;
    for (std::size_t j = 0; j < cones[i].size(); ++j) {
      const std::string sub = field + "[" + std::to_string(j) + "]";
      const long index = integer_field(cones[i][j], sub);
      if (index < 0 || index >= static_cast<long>(rays.size()))
        schema_error(sub, "ray index " + std::to_string(index) + " out of range");
      chosen.push_back(rays[static_cast<std::size_t>(index)]);
    }
    try {
      maximal.emplace_back(rank, std::move(chosen));
    } catch (const Error& e) {
      throw Error(ErrorKind::FanError, field + ": " + e.what());
    }
  }
  try {
    return make_fan(rank, maximal);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::FanError) throw;
    throw Error(ErrorKind::FanError, e.what());
  }
}

std::string serialize_fan(const Fan& f) {
  const auto rays = f.rays();
  auto index_of = [&](const LatticeVector& r) {
    return std::lower_bound(rays.begin(), rays.end(), r, LexLess{}) - rays.begin();
  };
  std::vector<std::vector<long>> cones;
  for (const auto& c : f.maximal_cones()) {
    if (c.dim() == 0) continue;
    std::vector<long> idx;
    for (const auto& r : c.rays()) idx.push_back(index_of(r));
    std::sort(idx.begin(), idx.end());
    cones.push_back(std::move(idx));
  }
  std::sort(cones.begin(), cones.end());

  std::ostringstream out;
  out << "{\n  \"rank\": " << f.rank() << ",\n  \"rays\": [";
  for (std::size_t i = 0; i < rays.size(); ++i) out << (i ? ",\n    " : "\n    ") << json_vector(rays[i]);
  out << (rays.empty() ? "],\n" : "\n  ],\n") << "  \"cones\": [";
  for (std::size_t i = 0; i < cones.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < cones[i].size(); ++j) out << (j ? ", " : "") << cones[i][j];
    out << "]";
  }
  out << (cones.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

PhiSystem parse_phi(std::string_view text) {
  const Json doc = parse_document(text);
  const int rank = rank_field(doc);
  reject_unknown_keys(doc, {"rank", "vectors"});
  auto vectors = vector_list(doc, "vectors", rank);
  try {
    return PhiSystem(rank, std::move(vectors));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string("field 'vectors': ") + e.what());
  }
}

std::string serialize_phi(const PhiSystem& phi) {
  std::ostringstream out;
  out << "{\n  \"rank\": " << phi.rank() << ",\n  \"vectors\": [";
  const auto& v = phi.vectors();
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ",\n    " : "\n    ") << json_vector(v[i]);
  out << (v.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace f1
