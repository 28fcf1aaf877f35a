#include "knotrep/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotrep/arith.hpp"
#include "knotrep/errors.hpp"

namespace knotrep {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

// Integer matrix power with torsion columns reduced after every step.
IntMatrix power_reduced(const IntMatrix& t, int l, const std::vector<mpz_class>& torsion) {
  IntMatrix acc = IntMatrix::identity(t.rows());
  for (int s = 0; s < l; ++s) {
    acc = acc * t;
    for (std::size_t r = 0; r < acc.rows(); ++r)
      for (std::size_t j = 0; j < torsion.size(); ++j) acc(r, j) = mod_floor(acc(r, j), torsion[j]);
  }
  return acc;
}

}  // namespace

CharacterGroup::CharacterGroup(const CoverHomology& c) : n_(c.n), free_rank_(c.group.free_rank) {
  for (const auto& d : c.group.torsion) {
    torsion_.push_back(to_int64(d));
    modulus_ = lcm64(modulus_, torsion_.back());
  }
  const std::size_t tk = torsion_.size();
  const std::size_t k = c.group.coordinate_count();
  for (std::size_t i = 0; i < tk; ++i) {
    Row row(tk);
    for (std::size_t j = 0; j < tk; ++j) row[j] = to_int64(mod_floor(c.t_action.matrix(i, j), c.group.torsion[j]));
    for (std::size_t j = tk; j < k; ++j) {
      if (c.t_action.matrix(i, j) != 0) throw InvariantViolation("t maps a torsion element outside the torsion subgroup");
    }
    t_matrix_.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) {
    GroupElement row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = c.t_action.matrix(i, j);
    t_full_.push_back(std::move(row));
  }
  for (int l : divisors(n_)) {
    const IntMatrix p = power_reduced(c.t_action.matrix, l, c.group.torsion);
    std::vector<Row> rows;
    std::vector<GroupElement> full;
    for (std::size_t i = 0; i < k; ++i) {
      Row row(tk);
      GroupElement wide(k);
      for (std::size_t j = 0; j < k; ++j) {
        mpz_class v = p(i, j) - (i == j ? 1 : 0);
        if (j < tk) row[j] = to_int64(mod_floor(v, c.group.torsion[j]));
        wide[j] = v;
      }
      rows.push_back(std::move(row));
      full.push_back(std::move(wide));
    }
    kernel_rows_.emplace_back(l, std::move(rows));
    kernel_full_.push_back(std::move(full));
  }
}

mpz_class CharacterGroup::size() const {
  mpz_class s = 1;
  for (auto d : torsion_) s *= static_cast<long>(d);
  return s;
}

Character CharacterGroup::trivial() const {
  Character chi;
  chi.n = n_;
  chi.exponents.assign(torsion_.size(), 0);
  return chi;
}

bool CharacterGroup::belongs(const Character& chi) const {
  if (chi.n != n_ || chi.exponents.size() != torsion_.size()) return false;
  if (!chi.free_exponents.empty() && chi.free_exponents.size() != static_cast<std::size_t>(free_rank_)) return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    if (chi.exponents[i] < 0 || chi.exponents[i] >= torsion_[i]) return false;
  return true;
}

std::int64_t CharacterGroup::apply_row(const Character& chi, const Row& row) const {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    if (row[j] == 0 || chi.exponents[j] == 0) continue;
    const std::int64_t unit = modulus_ / torsion_[j];
    acc = (acc + mulmod(mulmod(row[j], chi.exponents[j], torsion_[j]), unit, modulus_)) % modulus_;
  }
  return acc;
}

std::int64_t CharacterGroup::evaluate(const Character& chi, const GroupElement& x) const {
  Row row(torsion_.size());
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    row[j] = to_int64(mod_floor(x[j], mpz_class(static_cast<long>(torsion_[j]))));
  }
  return apply_row(chi, row);
}

mpq_class CharacterGroup::value(const Character& chi, const GroupElement& x) const {
  mpq_class v(evaluate(chi, x), modulus_);
  v.canonicalize();
  for (std::size_t f = 0; f < chi.free_exponents.size(); ++f) v += chi.free_exponents[f] * x[torsion_.size() + f];
  // Reduce into [0, 1).
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  v -= fl;
  v.canonicalize();
  return v;
}

Character CharacterGroup::t_act(const Character& chi, int times) const {
  const int steps = ((times % n_) + n_) % n_;
  Character cur = chi;
  const std::size_t tk = torsion_.size();
  for (int s = 0; s < steps; ++s) {
    Character next = cur;
    for (std::size_t i = 0; i < tk; ++i) {
      // (t chi)(u_i) = chi(t u_i) = chi(row i of T).
      const std::int64_t v = apply_row(cur, t_matrix_[i]);
      const std::int64_t unit = modulus_ / torsion_[i];
      if (v % unit != 0) throw InvariantViolation("t-translate is not a character of the same group");
      next.exponents[i] = v / unit;
    }
    next.free_exponents.clear();
    bool nontrivial = false;
    for (int f = 0; f < free_rank_; ++f) {
      next.free_exponents.push_back(value(cur, t_full_[tk + static_cast<std::size_t>(f)]));
      nontrivial = nontrivial || next.free_exponents.back() != 0;
    }
    if (!nontrivial) next.free_exponents.clear();
    cur = std::move(next);
  }
  return cur;
}

bool CharacterGroup::kills(const Character& chi, std::size_t divisor_index) const {
  if (chi.free_exponents.empty()) {
    for (const auto& row : kernel_rows_[divisor_index].second)
      if (apply_row(chi, row) != 0) return false;
    return true;
  }
  for (const auto& row : kernel_full_[divisor_index])
    if (value(chi, row) != 0) return false;
  return true;
}

bool CharacterGroup::factors_through(const Character& chi, int l) const {
  for (std::size_t d = 0; d < kernel_rows_.size(); ++d)
    if (kernel_rows_[d].first == l) return kills(chi, d);
  throw std::invalid_argument("factors_through: l must divide n");
}

int CharacterGroup::order(const Character& chi) const {
  for (std::size_t d = 0; d < kernel_rows_.size(); ++d)
    if (kills(chi, d)) return kernel_rows_[d].first;
  throw InvariantViolation("character does not factor through H/(t^n - 1)");
}

std::vector<Character> CharacterGroup::orbit(const Character& chi) const {
  std::vector<Character> out{chi};
  Character cur = t_act(chi);
  while (!(cur == chi)) {
    out.push_back(cur);
    if (out.size() > static_cast<std::size_t>(n_)) throw InvariantViolation("t-orbit longer than n");
    cur = t_act(cur);
  }
  return out;
}

std::vector<std::int64_t> CharacterGroup::orbit_id(const Character& chi) const {
  std::vector<std::int64_t> best = chi.exponents;
  for (const auto& c : orbit(chi)) best = std::min(best, c.exponents);
  return best;
}

CharacterStream::CharacterStream(const CoverHomology& c) : n_(c.n), partial_(c.group.free_rank > 0) {
  for (const auto& d : c.group.torsion) torsion_.push_back(to_int64(d));
  reset();
}

mpz_class CharacterStream::size() const {
  mpz_class s = 1;
  for (auto d : torsion_) s *= static_cast<long>(d);
  return s;
}

void CharacterStream::reset() {
  current_.assign(torsion_.size(), 0);
  done_ = false;
}

std::optional<Character> CharacterStream::next() {
  if (done_) return std::nullopt;
  Character chi;
  chi.n = n_;
  chi.exponents = current_;
  // Mixed-radix increment, last coordinate fastest.
  std::size_t i = torsion_.size();
  while (true) {
    if (i == 0) {
      done_ = true;
      break;
    }
    --i;
    if (++current_[i] < torsion_[i]) break;
    current_[i] = 0;
  }
  return chi;
}

std::vector<Character> enumerate_characters(const CoverHomology& c, std::size_t limit) {
  CharacterStream stream(c);
  if (stream.size() > static_cast<unsigned long>(limit)) {
    throw std::length_error("too many characters to enumerate: " + stream.size().get_str());
  }
  std::vector<Character> out;
  while (auto chi = stream.next()) out.push_back(std::move(*chi));
  return out;
}

Character t_act(const Character& chi, const CoverHomology& c) { return CharacterGroup(c).t_act(chi); }

int character_order(const Character& chi, const CoverHomology& c) { return CharacterGroup(c).order(chi); }

}  // namespace knotrep
