#include "knotrep_cli/json_io.hpp"

#include <stdexcept>
#include <string>

#include "knotrep/arith.hpp"

namespace knotrep::cli {

json to_json(const mpz_class& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"valuation", p.valuation()}, {"coeffs", coeffs}, {"text", p.to_string()}};
}

json to_json(const QPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"coeffs", coeffs}, {"text", p.to_string()}};
}

json to_json(const WirtingerPresentation& w) {
  return {{"generator_count", w.generator_count},
          {"relators", w.relators},
          {"meridian", w.meridian},
          {"longitude", w.longitude},
          {"writhe", w.writhe}};
}

WirtingerPresentation presentation_from_json(const json& j) {
  WirtingerPresentation w;
  w.generator_count = j.at("generator_count").get<int>();
  w.relators = j.at("relators").get<std::vector<Word>>();
  w.meridian = j.at("meridian").get<int>();
  w.longitude = j.at("longitude").get<Word>();
  w.writhe = j.at("writhe").get<int>();
  return w;
}

json to_json(const CoverHomology& c) {
  json torsion = json::array();
  for (const auto& d : c.group.torsion) torsion.push_back(to_json(d));
  json out = {{"n", c.n}, {"torsion", torsion}, {"rank", c.group.free_rank}};
  if (auto o = c.group.order()) out["order"] = to_json(*o);
  else out["order"] = "infinite";
  return out;
}

namespace {

json optional_count(const std::optional<mpz_class>& v) { return v ? to_json(*v) : json(nullptr); }

}  // namespace

json to_json(const CountReport& r) {
  return {{"n", r.n},
          {"verdict", to_string(r.verdict)},
          {"direct", optional_count(r.direct)},
          {"mobius", optional_count(r.mobius)},
          {"agree", r.agree}};
}

json to_json(const ExistenceReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back(
        {{"n", v.n}, {"verdict", to_string(v.verdict)}, {"count", optional_count(v.count)}, {"betti", v.betti}});
  }
  return {{"m", r.m ? json(*r.m) : json(nullptr)},
          {"cyclotomic_divisors", r.cyclotomic_divisors},
          {"lambda1_periodic",
           r.lambda1_divides_tm_minus_1 ? json(*r.lambda1_divides_tm_minus_1) : json(nullptr)},
          {"all_roots_cyclotomic", r.all_roots_cyclotomic},
          {"verdicts", verdicts},
          {"notes", r.notes}};
}

json to_json(const MonomialMatrix& m) {
  return {{"n", m.dim()}, {"N", m.root_order()}, {"perm", m.perm()}, {"exps", m.exps()}};
}

MonomialMatrix monomial_from_json(const json& j) {
  return {j.at("perm").get<std::vector<int>>(), j.at("exps").get<std::vector<std::int64_t>>(),
          j.at("N").get<std::int64_t>()};
}

json to_json(const Character& chi) {
  json free = json::array();
  for (const auto& q : chi.free_exponents) free.push_back(q.get_str());
  return {{"n", chi.n}, {"exponents", chi.exponents}, {"free_exponents", free}};
}

Character character_from_json(const json& j) {
  Character chi;
  chi.n = j.at("n").get<int>();
  chi.exponents = j.at("exponents").get<std::vector<std::int64_t>>();
  for (const auto& q : j.value("free_exponents", json::array())) chi.free_exponents.emplace_back(q.get<std::string>());
  return chi;
}

json to_json(const MetabelianRep& r, bool expanded) {
  json images = json::array();
  for (const auto& m : r.images) {
    json img = to_json(m);
    if (expanded) {
      json rows = json::array();
      for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c) {
          const auto e = m.entry_exponent(i, c);
          row.push_back(e < 0 ? std::string("0") : "z" + std::to_string(m.root_order()) + "^" + std::to_string(e));
        }
        rows.push_back(row);
      }
      img["entries"] = rows;
    }
    images.push_back(img);
  }
  return {{"n", r.n},
          {"N", r.root_order},
          {"kind", r.kind == RepKind::SL ? "SL" : "GL"},
          {"z_exponent", r.z_exponent.get_str()},
          {"chi", to_json(r.chi)},
          {"class_id", r.class_id},
          {"images", images}};
}

MetabelianRep rep_from_json(const json& j) {
  MetabelianRep r;
  r.n = j.at("n").get<int>();
  r.root_order = j.at("N").get<std::int64_t>();
  r.kind = j.at("kind").get<std::string>() == "GL" ? RepKind::GL : RepKind::SL;
  r.z_exponent = mpq_class(j.at("z_exponent").get<std::string>());
  r.z_exponent.canonicalize();
  r.chi = character_from_json(j.at("chi"));
  r.class_id = j.at("class_id").get<std::vector<std::int64_t>>();
  for (const auto& img : j.at("images")) r.images.push_back(monomial_from_json(img));
  return r;
}

json to_json(const VerificationReport& v) {
  json failing = json::array();
  for (auto i : v.failing_relators) failing.push_back(i + 1);
  return {{"relators_ok", v.relators_ok},
          {"failing_relators", failing},
          {"meridian_trace_zero", v.meridian_trace_zero},
          {"longitude_identity", v.longitude_identity},
          {"determinants_ok", v.determinants_ok},
          {"determinant_exponents", v.determinant_exponents},
          {"companion_power_ok", v.companion_power_ok},
          {"meridian_order", v.meridian_order},
          {"unitary", v.unitary},
          {"all_pass", v.all_pass()}};
}

json to_json(const NumericRep& r) {
  json blocks = json::array();
  for (const auto& b : r.blocks) blocks.push_back({{"root", {b.root.real(), b.root.imag()}}, {"size", b.size}});
  json images = json::array();
  for (const auto& m : r.images) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(i, c).real(), m(i, c).imag()});
      rows.push_back(row);
    }
    images.push_back(rows);
  }
  return {{"dim", r.dim},
          {"x", {r.x.real(), r.x.imag()}},
          {"blocks", blocks},
          {"tolerance", r.tolerance},
          {"max_relator_residual", r.max_relator_residual},
          {"longitude_residual", r.longitude_residual},
          {"images", images}};
}

}  // namespace knotrep::cli
