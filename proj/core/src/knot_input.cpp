#include "knotrep/knot_input.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>

#include "knotrep/errors.hpp"

namespace knotrep {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

int exponent_sum(const Word& w) {
  int s = 0;
  for (int l : w) s += l > 0 ? 1 : -1;
  return s;
}

int exponent_sum(const Word& w, int generator) {
  int s = 0;
  for (int l : w) {
    if (l == generator) ++s;
    if (l == -generator) --s;
  }
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    os << (i ? " " : "") << "x" << std::abs(w[i]);
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

namespace {

std::optional<long> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// One passage of the knot through a crossing, in traversal order.
struct Passage {
  int crossing;
  bool over;
};

// Builds the Wirtinger presentation from the cyclic sequence of passages.
// Arc 0 is the arc containing the traversal start.
WirtingerPresentation wirtinger_from_traversal(int crossing_count, const std::vector<Passage>& passages,
                                               const std::vector<int>& signs) {
  WirtingerPresentation w;
  if (crossing_count == 0) return w;

  std::vector<int> over_arc(static_cast<std::size_t>(crossing_count), -1);
  std::vector<int> in_arc(static_cast<std::size_t>(crossing_count), -1);
  std::vector<int> out_arc(static_cast<std::size_t>(crossing_count), -1);
  std::vector<int> under_order;
  int arc = 0;
  for (const auto& p : passages) {
    const auto c = static_cast<std::size_t>(p.crossing);
    if (p.over) {
      over_arc[c] = arc;
    } else {
      in_arc[c] = arc;
      ++arc;
      out_arc[c] = arc;
      under_order.push_back(p.crossing);
    }
  }
  // The arc after the last under-pass is arc 0 again.
  const int arcs = arc;
  auto wrap = [arcs](int a) { return a == arcs ? 0 : a; };

  w.generator_count = arcs;
  for (int c : under_order) {
    const auto ci = static_cast<std::size_t>(c);
    const int xk = wrap(out_arc[ci]) + 1;
    const int xi = wrap(in_arc[ci]) + 1;
    const int xj = wrap(over_arc[ci]) + 1;
    const int e = signs[ci];
    w.relators.push_back({xk, e * xj, -xi, -e * xj});
    w.writhe += e;
  }
  // Relator r reads x_{r+1} = x_j^e x_r x_j^-e, so conjugating x_1 once around
  // the knot by W = w_last ... w_first returns x_1; W x_1^-writhe commutes with
  // the meridian and has exponent sum zero.
  for (auto it = under_order.rbegin(); it != under_order.rend(); ++it) {
    const auto ci = static_cast<std::size_t>(*it);
    w.longitude.push_back(signs[ci] * (wrap(over_arc[ci]) + 1));
  }
  for (int k = 0; k < std::abs(w.writhe); ++k) w.longitude.push_back(w.writhe > 0 ? -1 : 1);
  return w;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  std::string cleaned(text);
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '{' || ch == '}' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  }
  std::istringstream is(cleaned);
  std::string tok;
  BraidWord b;
  std::optional<int> strands;
  static const std::regex artin(R"(([sS])(\d+)(\^-1)?)");
  while (is >> tok) {
    std::smatch m;
    if (tok.front() == '@') {
      auto v = parse_int(std::string_view(tok).substr(1));
      if (!v || *v < 1) throw SyntaxError("bad strand count token '" + tok + "'");
      if (strands) throw SyntaxError("strand count given twice");
      strands = static_cast<int>(*v);
    } else if (std::regex_match(tok, m, artin)) {
      int g = std::stoi(m[2].str());
      if (g == 0) throw SyntaxError("braid generator index must be positive: '" + tok + "'");
      const bool inv = (m[1].str() == "S") != m[3].matched;
      b.letters.push_back(inv ? -g : g);
    } else if (auto v = parse_int(tok)) {
      if (*v == 0) throw SyntaxError("braid letter 0 is not allowed");
      b.letters.push_back(static_cast<int>(*v));
    } else {
      throw SyntaxError("unrecognised braid token '" + tok + "'");
    }
  }
  int max_gen = 0;
  for (int l : b.letters) max_gen = std::max(max_gen, std::abs(l));
  b.strands = strands.value_or(max_gen + 1);
  if (max_gen > b.strands - 1) {
    throw SyntaxError("braid letter " + std::to_string(max_gen) + " needs at least " + std::to_string(max_gen + 1) +
                      " strands");
  }
  // Closure must be a single cycle.
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : b.letters) {
    const int i = std::abs(l) - 1;
    for (int& p : perm) {
      if (p == i) p = i + 1;
      else if (p == i + 1) p = i;
    }
  }
  int len = 0;
  int pos = 0;
  do {
    pos = perm[static_cast<std::size_t>(pos)];
    ++len;
  } while (pos != 0);
  if (len != b.strands) throw NotAKnot("braid closure has more than one component");
  return b;
}

WirtingerPresentation braid_to_wirtinger(const BraidWord& braid) {
  for (int l : braid.letters) {
    if (l == 0 || std::abs(l) > braid.strands - 1) throw SyntaxError("braid letter out of range");
  }
  const int n = static_cast<int>(braid.letters.size());
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) signs[static_cast<std::size_t>(c)] = braid.letters[static_cast<std::size_t>(c)] > 0 ? 1 : -1;

  // Strands run downwards. At a positive letter the strand moving from
  // position i to i+1 passes under; at a negative letter it passes over.
  std::vector<Passage> passages;
  int pos = 0;
  int rounds = 0;
  do {
    for (int c = 0; c < n; ++c) {
      const int l = braid.letters[static_cast<std::size_t>(c)];
      const int i = std::abs(l) - 1;
      if (pos == i) {
        passages.push_back({c, l < 0});
        pos = i + 1;
      } else if (pos == i + 1) {
        passages.push_back({c, l > 0});
        pos = i;
      }
    }
    ++rounds;
  } while (pos != 0 && rounds <= braid.strands);
  if (pos != 0 || rounds != braid.strands) throw NotAKnot("braid closure has more than one component");
  return wirtinger_from_traversal(n, passages, signs);
}

PDCode parse_pd_code(std::string_view text) {
  static const std::regex tuple(R"(X\s*[\[\(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\]\)])");
  std::string s(text);
  PDCode pd;
  std::string rest;
  std::size_t last = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), tuple); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    rest += s.substr(last, static_cast<std::size_t>(m.position()) - last);
    last = static_cast<std::size_t>(m.position() + m.length());
    std::array<std::int64_t, 4> x{};
    for (int k = 0; k < 4; ++k) x[static_cast<std::size_t>(k)] = std::stoll(m[k + 1].str());
    pd.crossings.push_back(x);
  }
  rest += s.substr(last);
  // Whatever is left may only be separators and an optional PD[...] wrapper.
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const char ch = rest[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']' || ch == '(' ||
        ch == ')' || ch == ';')
      continue;
    if (rest.compare(i, 2, "PD") == 0) {
      ++i;
      continue;
    }
    throw SyntaxError("unexpected text in PD code near '" + rest.substr(i, 12) + "'");
  }
  return pd;
}

WirtingerPresentation pd_to_wirtinger(const PDCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return WirtingerPresentation{};

  // Occurrences of each label as (crossing, slot).
  std::map<std::int64_t, std::vector<std::pair<int, int>>> where;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) where[pd.crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]].push_back({c, s});
  for (const auto& [label, occ] : where) {
    if (occ.size() != 2) {
      throw InconsistentDiagram("arc label " + std::to_string(label) + " appears " + std::to_string(occ.size()) +
                                " times (expected 2)");
    }
  }

  auto other_end = [&](std::int64_t label, std::pair<int, int> here) {
    const auto& occ = where.at(label);
    return occ[0] == here ? occ[1] : occ[0];
  };

  // Walk the diagram from the incoming under-arc of crossing 0.
  std::vector<Passage> passages;
  std::vector<std::int64_t> entry_labels;
  std::vector<int> signs(static_cast<std::size_t>(n), 0);
  std::vector<std::array<bool, 4>> visited(static_cast<std::size_t>(n), {false, false, false, false});
  std::pair<int, int> at{0, 0};
  std::size_t steps = 0;
  do {
    const auto [c, slot] = at;
    const auto ci = static_cast<std::size_t>(c);
    if (slot == 2) throw InconsistentDiagram("under-strand orientation conflict at crossing " + std::to_string(c + 1));
    const int exit = slot == 0 ? 2 : (slot == 1 ? 3 : 1);
    if (visited[ci][static_cast<std::size_t>(slot)] || visited[ci][static_cast<std::size_t>(exit)]) {
      throw InconsistentDiagram("strand revisits crossing " + std::to_string(c + 1));
    }
    visited[ci][static_cast<std::size_t>(slot)] = visited[ci][static_cast<std::size_t>(exit)] = true;
    const bool over = slot != 0;
    // Under-strand runs south to north (a -> c); the over-strand going west to
    // east (d -> b) makes a positive crossing.
    if (over) signs[ci] = slot == 3 ? 1 : -1;
    passages.push_back({c, over});
    entry_labels.push_back(pd.crossings[ci][static_cast<std::size_t>(slot)]);
    const std::int64_t label = pd.crossings[ci][static_cast<std::size_t>(exit)];
    at = other_end(label, {c, exit});
    ++steps;
  } while (at != std::pair<int, int>{0, 0} && steps <= static_cast<std::size_t>(2 * n));

  if (passages.size() != static_cast<std::size_t>(2 * n)) {
    if (passages.size() > static_cast<std::size_t>(2 * n)) throw InconsistentDiagram("traversal does not close up");
    throw NotAKnot("PD code describes a link with more than one component");
  }

  // Start at the smallest label.
  const auto start = static_cast<std::ptrdiff_t>(
      std::min_element(entry_labels.begin(), entry_labels.end()) - entry_labels.begin());
  std::rotate(passages.begin(), passages.begin() + start, passages.end());
  return wirtinger_from_traversal(n, passages, signs);
}

std::string validate(const WirtingerPresentation& w) {
  auto check_word = [&](const Word& word) {
    for (int l : word)
      if (l == 0 || std::abs(l) > w.generator_count) return false;
    return true;
  };
  for (std::size_t r = 0; r < w.relators.size(); ++r) {
    if (!check_word(w.relators[r])) return "relator " + std::to_string(r + 1) + " uses an unknown generator";
    if (exponent_sum(w.relators[r]) != 0) return "relator " + std::to_string(r + 1) + " is not null-homologous";
  }
  if (!check_word(w.longitude)) return "longitude uses an unknown generator";
  if (exponent_sum(w.longitude) != 0) return "longitude has nonzero exponent sum";
  if (w.meridian < 1 || w.meridian > w.generator_count) return "meridian index out of range";
  return {};
}

}  // namespace knotrep
