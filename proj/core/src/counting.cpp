#include "knotrep/counting.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "knotrep/arith.hpp"
#include "knotrep/characters.hpp"
#include "knotrep/errors.hpp"

namespace knotrep {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "FINITE";
    case Verdict::Empty: return "EMPTY";
    case Verdict::PositiveDimensional: return "POSITIVE_DIMENSIONAL";
    case Verdict::InfiniteUnknown: return "INFINITE_UNKNOWN";
  }
  return "?";
}

std::shared_ptr<const CoverHomology> DivisorTower::get(int n) {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  // Computed outside the lock; a racing insert of the same value is harmless.
  auto c = std::make_shared<const CoverHomology>(homology_Ln(module_, n));
  std::unique_lock lock(mutex_);
  return cache_.emplace(n, std::move(c)).first->second;
}

DirectCount count_direct(int n, DivisorTower& tower, std::size_t max_characters) {
  if (n < 1) throw std::invalid_argument("count_direct: n must be positive");
  const auto c = tower.get(n);
  DirectCount out;
  if (!c->group.finite()) {
    out.verdict = infinite_case(n, tower, max_characters);
    return out;
  }
  CharacterStream stream(*c);
  if (stream.size() > static_cast<unsigned long>(max_characters)) return out;

  const CharacterGroup group(*c);
  std::set<std::vector<std::int64_t>> ids;
  while (auto chi = stream.next()) {
    if (group.order(*chi) != n) continue;
    ++out.order_n_characters;
    const auto orbit = group.orbit(*chi);
    if (orbit.size() != static_cast<std::size_t>(n)) {
      throw DivisibilityViolation("t-orbit of an order-" + std::to_string(n) + " character has size " +
                                  std::to_string(orbit.size()));
    }
    ids.insert(group.orbit_id(*chi));
  }
  if (out.order_n_characters % n != 0) {
    throw DivisibilityViolation(out.order_n_characters.get_str() + " characters of order " + std::to_string(n) +
                                " is not divisible by n");
  }
  out.classes = out.order_n_characters / n;
  if (*out.classes != static_cast<unsigned long>(ids.size())) {
    throw DivisibilityViolation("orbit identifiers disagree with the orbit count");
  }
  out.class_ids.assign(ids.begin(), ids.end());
  out.verdict = *out.classes == 0 ? Verdict::Empty : Verdict::Finite;
  return out;
}

mpz_class count_mobius(int n, const std::map<int, std::optional<mpz_class>>& orders) {
  mpz_class sum = 0;
  for (int k : divisors(n)) {
    const int mu = mobius(k);
    const auto it = orders.find(n / k);
    if (it == orders.end()) throw std::invalid_argument("count_mobius: missing order for l = " + std::to_string(n / k));
    if (!it->second) throw InfiniteHomology("H/(t^" + std::to_string(n / k) + " - 1) is infinite");
    if (mu != 0) sum += mu * *it->second;
  }
  if (sum % n != 0) throw DivisibilityViolation("Mobius sum " + sum.get_str() + " not divisible by " + std::to_string(n));
  return sum / n;
}

mpz_class count_mobius(int n, DivisorTower& tower) {
  std::map<int, std::optional<mpz_class>> orders;
  for (int l : divisors(n)) orders[l] = tower.get(l)->group.order();
  return count_mobius(n, orders);
}

Verdict infinite_case(int n, DivisorTower& tower, std::size_t max_characters) {
  const auto c = tower.get(n);
  if (c->group.finite()) throw std::invalid_argument("infinite_case: H/(t^n - 1) is finite");
  CharacterStream stream(*c);
  if (stream.size() > static_cast<unsigned long>(max_characters)) return Verdict::InfiniteUnknown;

  const std::size_t tk = c->group.torsion.size();
  // Pullbacks psi o Pi of torsion characters psi of H/(t^l - 1).
  std::set<std::vector<std::int64_t>> pulled_back;
  for (int l : divisors(n)) {
    if (l == n) continue;
    const auto lower = tower.get(l);
    if (lower->group.free_rank != c->group.free_rank) continue;
    const IntMatrix pi = projection_matrix(tower.module(), *c, *lower);
    const std::size_t lk = lower->group.torsion.size();
    for (std::size_t i = 0; i < tk; ++i)
      for (std::size_t j = lk; j < pi.cols(); ++j)
        if (pi(i, j) != 0) throw InvariantViolation("projection sends torsion to a free coordinate");
    if (CharacterStream(*lower).size() > static_cast<unsigned long>(max_characters)) return Verdict::InfiniteUnknown;
    CharacterStream lower_stream(*lower);
    while (auto psi = lower_stream.next()) {
      std::vector<std::int64_t> e(tk);
      for (std::size_t i = 0; i < tk; ++i) {
        mpq_class v = 0;
        for (std::size_t j = 0; j < lk; ++j) v += mpq_class(pi(i, j) * psi->exponents[j], lower->group.torsion[j]);
        v *= c->group.torsion[i];
        v.canonicalize();
        if (v.get_den() != 1) throw InvariantViolation("pullback is not a character of the torsion subgroup");
        e[i] = to_int64(mod_floor(v.get_num(), c->group.torsion[i]));
      }
      pulled_back.insert(std::move(e));
    }
  }
  while (auto chi = stream.next())
    if (!pulled_back.count(chi->exponents)) return Verdict::PositiveDimensional;
  return Verdict::Empty;
}

CountReport count_report(int n, DivisorTower& tower, std::size_t max_characters) {
  CountReport r;
  r.n = n;
  const DirectCount d = count_direct(n, tower, max_characters);
  r.verdict = d.verdict;
  r.direct = d.classes;
  try {
    r.mobius = count_mobius(n, tower);
  } catch (const InfiniteHomology&) {
  }
  if (r.direct && r.mobius) {
    r.agree = *r.direct == *r.mobius;
  } else {
    // Agreement is vacuous when only one side applies.
    r.agree = !r.direct.has_value() && !r.mobius.has_value();
  }
  if (!r.direct && r.mobius && r.verdict == Verdict::InfiniteUnknown) {
    r.verdict = *r.mobius == 0 ? Verdict::Empty : Verdict::Finite;
    r.agree = true;
  }
  return r;
}

ExistenceReport existence_report(const LaurentPoly& delta, const std::vector<QPoly>& invariant_factors,
                                 DivisorTower& tower, int n_max, std::size_t max_characters) {
  if (n_max < 2) throw std::invalid_argument("existence_report: n_max must be at least 2");
  ExistenceReport out;
  const CyclotomicProfile profile = cyclotomic_root_profile(delta);
  out.cyclotomic_divisors = profile.divisors;
  out.m = profile.m;

  // Divide out every cyclotomic factor; all roots are roots of unity iff a
  // constant remains.
  LaurentPoly rest = delta.shifted(-delta.valuation());
  for (int d : profile.divisors)
    while (auto q = rest.divide_exact(cyclotomic(d))) rest = *q;
  out.all_roots_cyclotomic = rest.span() == 0;

  if (out.m) {
    const QPoly tm = QPoly::monomial(1, *out.m) - QPoly(1);
    out.lambda1_divides_tm_minus_1 = invariant_factors.empty() || invariant_factors.front().divides(tm);
  }

  // Covers are independent; fill the tower concurrently.
  {
    std::vector<std::future<void>> jobs;
    for (int n = 1; n <= n_max; ++n) jobs.push_back(std::async(std::launch::async, [&tower, n] { tower.get(n); }));
    for (auto& j : jobs) j.get();
  }

  for (int n = 2; n <= n_max; ++n) {
    const CountReport r = count_report(n, tower, max_characters);
    if (r.direct && r.mobius && !r.agree) {
      throw InvariantViolation("direct and Mobius counts differ at n = " + std::to_string(n));
    }
    NVerdict v;
    v.n = n;
    v.verdict = r.verdict;
    v.count = r.direct ? r.direct : r.mobius;
    v.betti = tower.get(n)->group.free_rank;
    out.verdicts.push_back(v);
  }

  if (out.lambda1_divides_tm_minus_1.value_or(false)) {
    for (const auto& v : out.verdicts) {
      if (v.n > *out.m && v.verdict != Verdict::Empty) {
        throw InvariantViolation("periodic homology but a nonempty verdict at n = " + std::to_string(v.n));
      }
    }
    out.notes.push_back("largest invariant factor divides t^" + std::to_string(*out.m) +
                        " - 1: no irreducible metabelian representations for n > " + std::to_string(*out.m));
  }
  if (out.all_roots_cyclotomic && out.m) {
    for (const auto& v : out.verdicts) {
      if (std::gcd(v.n, *out.m) == 1 && v.verdict != Verdict::Empty) {
        throw InvariantViolation("n = " + std::to_string(v.n) + " coprime to m but the verdict is nonempty");
      }
    }
  }
  if (!out.m && delta.span() > 0) {
    out.notes.push_back(
        "no root of Delta is a root of unity: every H/(t^n - 1) is finite, so each degree has finitely many "
        "classes; nonemptiness for infinitely many n holds in theory and is checked here only for n <= " +
        std::to_string(n_max));
  }
  if (delta.span() == 0) out.notes.push_back("Delta = 1: the Alexander module vanishes and every degree is empty");
  return out;
}

}  // namespace knotrep
