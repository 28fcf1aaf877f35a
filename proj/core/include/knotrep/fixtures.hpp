#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotrep/knot_input.hpp"

namespace knotrep {

/// A knot from the built-in table (data/fixtures/*.braid).
struct Fixture {
  std::string name;
  /// First comment line of the file, without the leading '#'.
  std::string description;
  BraidWord braid;
};

/// Parses the fixture text format: '#' comment lines, blank lines, and one
/// braid line in the parse_braid syntax.
Fixture parse_fixture(std::string_view name, std::string_view text);

const std::vector<Fixture>& fixtures();
std::vector<std::string> fixture_names();
/// Throws InputError for an unknown name.
const Fixture& fixture(std::string_view name);

}  // namespace knotrep
