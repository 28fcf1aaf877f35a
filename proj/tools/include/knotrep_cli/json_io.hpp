#pragma once

#include <nlohmann/json.hpp>

#include "knotrep/counting.hpp"
#include "knotrep/cover_homology.hpp"
#include "knotrep/faithful_rep.hpp"
#include "knotrep/metabelian_rep.hpp"

namespace knotrep::cli {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json to_json(const mpz_class& v);
mpz_class mpz_from_json(const json& j);

json to_json(const LaurentPoly& p);
json to_json(const QPoly& p);
json to_json(const WirtingerPresentation& w);
WirtingerPresentation presentation_from_json(const json& j);

json to_json(const CoverHomology& c);
json to_json(const CountReport& r);
json to_json(const ExistenceReport& r);

json to_json(const MonomialMatrix& m);
MonomialMatrix monomial_from_json(const json& j);
json to_json(const Character& chi);
Character character_from_json(const json& j);
/// With matrices, also the expanded entries as "z<N>^k" strings.
json to_json(const MetabelianRep& r, bool expanded = false);
MetabelianRep rep_from_json(const json& j);
json to_json(const VerificationReport& v);

json to_json(const NumericRep& r);

}  // namespace knotrep::cli
