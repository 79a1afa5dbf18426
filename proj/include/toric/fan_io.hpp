#pragma once

#include "toric/fan.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Contents of a fan file before validation.
struct FanFile {
  Index rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
};

/// Parses the JSON fan format. Integers beyond 64 bits are accepted as
/// decimal strings. Throws ParseError naming the field or text position.
FanFile parse_fan_file(std::string_view text);
FanFile read_fan_file(const std::string& path);

/// Canonical text: primitive rays sorted lexicographically, sorted max cones.
std::string format_fan(const Fan& f);
/// Throws WriteError.
void write_fan_file(const Fan& f, const std::string& path);

}  // namespace toric
