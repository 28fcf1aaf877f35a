#include "knotrep/fixtures.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "knotrep/errors.hpp"

namespace knotrep {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& fixture_sources();
}

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Fixture parse_fixture(std::string_view name, std::string_view text) {
  Fixture f;
  f.name = std::string(name);
  std::istringstream in{std::string(text)};
  std::string line, body;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (f.description.empty()) f.description = trim(line.substr(1));
      continue;
    }
    if (!body.empty()) throw SyntaxError("fixture " + f.name + ": more than one braid line");
    body = line;
  }
  if (body.empty()) throw SyntaxError("fixture " + f.name + ": no braid line");
  f.braid = parse_braid(body);
  return f;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = [] {
    std::vector<Fixture> out;
    for (const auto& [name, text] : detail::fixture_sources()) out.push_back(parse_fixture(name, text));
    return out;
  }();
  return table;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixtures()) out.push_back(f.name);
  return out;
}

const Fixture& fixture(std::string_view name) {
  const auto& all = fixtures();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
  if (it == all.end()) {
    std::string known;
    for (const auto& f : all) known += (known.empty() ? "" : ", ") + f.name;
    throw InputError("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
  }
  return *it;
}

}  // namespace knotrep
