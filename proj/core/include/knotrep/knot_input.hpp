#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotrep {

/// A word in the Wirtinger generators: letter +k stands for x_k and -k for
/// x_k^-1, generators numbered from 1.
using Word = std::vector<int>;

Word inverse(const Word& w);
/// Sum of the letter signs; the image of the word in H_1 of the complement.
int exponent_sum(const Word& w);
/// Signed occurrence count of generator k.
int exponent_sum(const Word& w, int generator);

struct BraidWord {
  int strands = 1;
  /// Nonzero, |g| <= strands - 1; the sign is the crossing sign.
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Crossings as (a, b, c, d): counterclockwise arc labels starting from the
/// incoming under-arc, so the under-strand runs a -> c.
struct PDCode {
  std::vector<std::array<std::int64_t, 4>> crossings;
};

struct WirtingerPresentation {
  int generator_count = 1;
  /// One relator x_k x_j^e x_i^-1 x_j^-e per crossing, in the order the
  /// under-passes are met along the knot.
  std::vector<Word> relators;
  int meridian = 1;
  /// Null-homologous longitude based at the start of arc 1.
  Word longitude;
  int writhe = 0;
};

/// Accepts whitespace- or comma-separated signed integers ("1 -2 1 -2"),
/// Artin letters ("s1 s2^-1", "S2" for an inverse) and an optional strand
/// count "@s". Without "@" the strand count is max|g| + 1.
/// Throws SyntaxError or NotAKnot.
BraidWord parse_braid(std::string_view text);

WirtingerPresentation braid_to_wirtinger(const BraidWord& braid);

/// Parses "X[1,4,2,5], X[3,6,4,1], ..." (brackets or parentheses, optional
/// PD[...] wrapper). Throws SyntaxError.
PDCode parse_pd_code(std::string_view text);

/// Throws InconsistentDiagram or NotAKnot.
WirtingerPresentation pd_to_wirtinger(const PDCode& pd);

inline WirtingerPresentation parse_pd(std::string_view text) { return pd_to_wirtinger(parse_pd_code(text)); }

/// Checks the structural invariants: letters in range, every relator and the
/// longitude have zero exponent sum. Returns an empty string when valid.
std::string validate(const WirtingerPresentation& w);

std::string to_string(const Word& w);

}  // namespace knotrep
