#include "knotrep/metabelian_rep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "knotrep/arith.hpp"
#include "knotrep/errors.hpp"
#include "knotrep/laurent.hpp"

namespace knotrep {

namespace {

std::int64_t fraction_to_residue(const mpq_class& q, std::int64_t modulus) {
  mpz_class num = q.get_num() * modulus;
  if (!mpz_divisible_p(num.get_mpz_t(), q.get_den_mpz_t())) {
    throw InvariantViolation("root order does not clear the denominator " + q.get_den().get_str());
  }
  mpz_class r = num / q.get_den();
  return to_int64(mod_floor(r, mpz_class(static_cast<long>(modulus))));
}

MetabelianRep build_rep(const WirtingerPresentation& w, const CoverHomology& c, const Character& chi, RepKind kind,
                        mpq_class z_exponent) {
  const CharacterGroup group(c);
  if (!group.belongs(chi)) throw OrderMismatch("character does not belong to H/(t^" + std::to_string(c.n) + " - 1)");
  const int ord = group.order(chi);
  if (ord != c.n) {
    throw OrderMismatch("character has order " + std::to_string(ord) + ", need " + std::to_string(c.n));
  }
  if (c.generator_images.size() != static_cast<std::size_t>(w.generator_count)) {
    throw DimensionMismatch("cover homology does not match the presentation");
  }
  const int n = c.n;
  MetabelianRep r;
  r.n = n;
  r.chi = chi;
  r.kind = kind;
  z_exponent.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), z_exponent.get_num_mpz_t(), z_exponent.get_den_mpz_t());
  r.z_exponent = z_exponent - fl;

  // values[i][k] = chi(t^k h_i) in [0, 1).
  std::vector<std::vector<mpq_class>> values(c.generator_images.size());
  mpz_class modulus = 2;
  mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), r.z_exponent.get_den_mpz_t());
  for (std::size_t i = 0; i < c.generator_images.size(); ++i) {
    for (int k = 0; k < n; ++k) {
      values[i].push_back(group.value(chi, c.apply_t(c.generator_images[i], k)));
      mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), values[i].back().get_den_mpz_t());
    }
  }
  r.root_order = to_int64(modulus);
  const auto corner = fraction_to_residue(r.z_exponent, r.root_order);
  const MonomialMatrix t = MonomialMatrix::companion(n, corner, r.root_order);
  for (const auto& vals : values) {
    std::vector<std::int64_t> exps;
    for (const auto& v : vals) exps.push_back(fraction_to_residue(v, r.root_order));
    r.images.push_back(t * MonomialMatrix::diagonal(std::move(exps), r.root_order));
  }
  r.class_id = group.orbit_id(chi);

  for (std::size_t i = 0; i < w.relators.size(); ++i) {
    if (!evaluate_word(r, w.relators[i]).is_identity()) {
      throw RelationFailure("relator " + std::to_string(i + 1) + " (" + to_string(w.relators[i]) +
                            ") is not the identity");
    }
  }
  return r;
}

}  // namespace

MetabelianRep build_sl_rep(const WirtingerPresentation& w, const CoverHomology& c, const Character& chi) {
  // z = (-1)^{n+1}.
  return build_rep(w, c, chi, RepKind::SL, mpq_class((c.n + 1) % 2, 2));
}

MetabelianRep build_gl_rep(const WirtingerPresentation& w, const CoverHomology& c, const Character& chi,
                           const mpq_class& z_exponent) {
  return build_rep(w, c, chi, RepKind::GL, z_exponent);
}

MonomialMatrix evaluate_word(const MetabelianRep& r, const Word& word) {
  const int dim = r.images.empty() ? r.n : r.images.front().dim();
  MonomialMatrix acc(dim, r.root_order);
  for (int l : word) {
    const auto idx = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
    if (idx >= r.images.size()) throw std::out_of_range("evaluate_word: generator " + std::to_string(idx + 1));
    acc = acc * (l > 0 ? r.images[idx] : r.images[idx].inverse());
  }
  return acc;
}

VerificationReport verify_rep(const MetabelianRep& r, const WirtingerPresentation& w) {
  VerificationReport v;
  const std::int64_t big = r.root_order;
  for (std::size_t i = 0; i < w.relators.size(); ++i)
    if (!evaluate_word(r, w.relators[i]).is_identity()) v.failing_relators.push_back(i);
  v.relators_ok = v.failing_relators.empty();

  const MonomialMatrix& mu = r.images.at(static_cast<std::size_t>(w.meridian - 1));
  v.meridian_trace_zero = r.n < 2 || mu.trace_exponents().empty();
  v.longitude_identity = evaluate_word(r, w.longitude).is_identity();

  const std::int64_t z = fraction_to_residue(r.z_exponent, big);
  const std::int64_t expected_det = mod_floor(static_cast<std::int64_t>(r.n + 1) * (big / 2) + z, big);
  v.determinants_ok = true;
  for (const auto& img : r.images) {
    v.determinant_exponents.push_back(img.det_exponent());
    if (v.determinant_exponents.back() != expected_det) v.determinants_ok = false;
  }

  v.companion_power_ok = mu.power(r.n).is_scalar(z);
  // alpha(mu)^n = z I, so the order is n times the order of z.
  v.meridian_order = static_cast<std::int64_t>(r.n) * (big / std::gcd(big, z));
  if (!mu.power(v.meridian_order).is_identity()) v.companion_power_ok = false;

  v.unitary = true;
  for (const auto& img : r.images)
    if (!(img * img.conjugate_transpose()).is_identity()) v.unitary = false;
  return v;
}

namespace {

// Power-basis coefficients of zeta_M^e for e in [0, M), reduced mod Phi_M.
const std::vector<CyclotomicInteger>& power_table(std::int64_t m) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::vector<CyclotomicInteger>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  const LaurentPoly phi = cyclotomic(static_cast<int>(m));
  const auto width = static_cast<std::size_t>(phi.top());
  std::vector<CyclotomicInteger> table;
  for (std::int64_t e = 0; e < m; ++e) {
    const LaurentPoly red = LaurentPoly::t(e).mod_monic(phi);
    CyclotomicInteger v(width, 0);
    for (std::size_t c = 0; c < red.coeffs().size(); ++c) {
      v[static_cast<std::size_t>(red.valuation()) + c] = to_int64(red.coeffs()[c]);
    }
    table.push_back(std::move(v));
  }
  return cache.emplace(m, std::move(table)).first->second;
}

}  // namespace

std::vector<CyclotomicInteger> trace_fingerprint(const MetabelianRep& r, int word_length, std::int64_t root_order) {
  if (word_length < 1) throw std::invalid_argument("trace_fingerprint: word length must be positive");
  const std::int64_t m = lcm64(std::max<std::int64_t>(root_order, 1), r.root_order);
  const auto& table = power_table(m);
  std::vector<MonomialMatrix> letters;
  for (const auto& img : r.images) {
    letters.push_back(img.rescaled(m));
    letters.push_back(letters.back().inverse());
  }
  auto trace_of = [&](const MonomialMatrix& a) {
    CyclotomicInteger acc(table.front().size(), 0);
    for (auto e : a.trace_exponents())
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += table[static_cast<std::size_t>(e)][i];
    return acc;
  };
  std::vector<CyclotomicInteger> out;
  // Breadth-first over lengths keeps the documented order.
  std::vector<MonomialMatrix> layer = {MonomialMatrix(letters.empty() ? r.n : letters.front().dim(), m)};
  for (int len = 1; len <= word_length; ++len) {
    std::vector<MonomialMatrix> next;
    next.reserve(layer.size() * letters.size());
    for (const auto& prefix : layer)
      for (const auto& l : letters) {
        next.push_back(prefix * l);
        out.push_back(trace_of(next.back()));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace knotrep
