#include "toric/fan_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace toric {

namespace {

using json = nlohmann::json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Integer to_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      auto u = j.get<unsigned long long>();
      if (u > static_cast<unsigned long long>(LLONG_MAX)) return *Integer::parse(std::to_string(u));
      return Integer(static_cast<long long>(u));
    }
    return Integer(j.get<long long>());
  }
  if (j.is_string()) {
    if (auto v = Integer::parse(j.get<std::string>())) return *v;
    throw ParseError(where, "string is not a decimal integer");
  }
  if (j.is_number_float()) throw ParseError(where, "expected an integer (write values beyond 64 bits as strings)");
  throw ParseError(where, "expected an integer");
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(name, "missing field");
  return *it;
}

void write_integer(std::ostream& os, const Integer& x) {
  if (x.is_small()) {
    os << x;
  } else {
    os << '"' << x << '"';
  }
}

}  // namespace

FanFile parse_fan_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(position(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
  for (const auto& item : doc.items()) {
    if (item.key() != "rank" && item.key() != "rays" && item.key() != "max_cones") {
      throw ParseError(item.key(), "unknown field");
    }
  }

  FanFile out;
  const json& rank = field(doc, "rank");
  if (!rank.is_number_integer() || rank.get<long long>() < 0) {
    throw ParseError("rank", "expected a nonnegative integer");
  }
  out.rank = static_cast<Index>(rank.get<long long>());

  const json& rays = field(doc, "rays");
  if (!rays.is_array()) throw ParseError("rays", "expected a list of integer vectors");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string where = "rays[" + std::to_string(i) + "]";
    const json& r = rays[i];
    if (!r.is_array()) throw ParseError(where, "expected a list of integers");
    if (static_cast<Index>(r.size()) != out.rank) {
      throw ParseError(where, "expected " + std::to_string(out.rank) + " entries, found " + std::to_string(r.size()));
    }
    IntVector v(out.rank);
    bool zero = true;
    for (std::size_t k = 0; k < r.size(); ++k) {
      v(static_cast<Index>(k)) = to_integer(r[k], where + "[" + std::to_string(k) + "]");
      zero = zero && v(static_cast<Index>(k)).is_zero();
    }
    if (zero) throw ParseError(where, "zero vector is not a ray");
    out.rays.push_back(std::move(v));
  }

  const json& cones = field(doc, "max_cones");
  if (!cones.is_array()) throw ParseError("max_cones", "expected a list of ray-index lists");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string where = "max_cones[" + std::to_string(i) + "]";
    const json& c = cones[i];
    if (!c.is_array()) throw ParseError(where, "expected a list of ray indices");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      if (!c[k].is_number_integer() || c[k].get<long long>() < 0) throw ParseError(at, "expected a ray index");
      auto x = c[k].get<unsigned long long>();
      if (x >= out.rays.size()) throw ParseError(at, "ray index " + std::to_string(x) + " out of range");
      idx.push_back(static_cast<std::size_t>(x));
    }
    out.max_cones.push_back(std::move(idx));
  }
  return out;
}

FanFile read_fan_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fan_file(ss.str());
}

std::string format_fan(const Fan& f) {
  std::ostringstream os;
  os << "{\n  \"rank\": " << f.ambient_rank() << ",\n  \"rays\": [";
  const auto& rays = f.rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    os << (i == 0 ? "\n    [" : ",\n    [");
    for (Index k = 0; k < rays[i].size(); ++k) {
      if (k > 0) os << ", ";
      write_integer(os, rays[i](k));
    }
    os << ']';
  }
  os << (rays.empty() ? "],\n" : "\n  ],\n");
  os << "  \"max_cones\": [";
  auto cones = f.max_cone_rays();
  // The fan {0} is written with no cones.
  if (cones.size() == 1 && cones.front().empty()) cones.clear();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    os << (i == 0 ? "\n    [" : ",\n    [");
    for (std::size_t k = 0; k < cones[i].size(); ++k) {
      if (k > 0) os << ", ";
      os << cones[i][k];
    }
    os << ']';
  }
  os << (cones.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

void write_fan_file(const Fan& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open " + path + " for writing");
  out << format_fan(f);
  out.flush();
  if (!out) throw WriteError("failed writing " + path);
}

}  // namespace toric
