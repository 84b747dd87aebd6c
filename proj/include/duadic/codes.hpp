#pragma once

// Constacyclic codes in R_{n,lambda^t} = F_q[X]/(X^n - lambda^t), stored by check set.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "duadic/arith.hpp"
#include "duadic/gf.hpp"

namespace duadic {

class CodeSetting;
using SettingPtr = std::shared_ptr<const CodeSetting>;

/// A word of F_q^n, identified with sum a_i X^i.
using Word = std::vector<Elem>;

/// The triple (q, n, lambda). Exponent sets of every algebra R_{n,lambda^t}
/// live in Z_{nr}; the algebra itself depends only on t mod r.
class CodeSetting {
 public:
  /// Throws Usage unless gcd(n, q) = 1, BadLambda for lambda = 0.
  static SettingPtr make(FieldPtr field, std::uint64_t n, Elem lambda);

  const FieldSpec& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint64_t q() const noexcept { return field_->order(); }
  std::uint64_t n() const noexcept { return n_; }
  Elem lambda() const noexcept { return lambda_; }
  std::uint64_t r() const noexcept { return r_; }
  std::uint64_t nr() const noexcept { return n_ * r_; }
  /// Part of n built from primes dividing r.
  std::uint64_t n_r() const noexcept { return n_ / n_r_prime_; }
  /// Largest divisor of n coprime to r.
  std::uint64_t n_r_prime() const noexcept { return n_r_prime_; }

  /// lambda^t for any integer t.
  Elem lambda_power(std::int64_t t) const { return field_->pow(lambda_, t); }
  /// P_{n,lambda^t} = t + rZ_{nr}, sorted.
  std::vector<std::uint64_t> ambient(std::uint64_t t) const;
  /// q-cosets of P_{n,lambda^t}.
  const CosetPartition& cosets(std::uint64_t t) const;
  /// f_Q for the i-th coset of cosets(t).
  const Poly& coset_poly(std::uint64_t t, std::size_t i) const;
  /// The tower is built on first use.
  const FieldTower& tower() const;

  /// X^n - lambda^t.
  Poly modulus_poly(std::int64_t t) const;

  friend bool operator==(const CodeSetting& a, const CodeSetting& b);

 private:
  CodeSetting(FieldPtr field, std::uint64_t n, Elem lambda);

  FieldPtr field_;
  std::uint64_t n_;
  Elem lambda_;
  std::uint64_t r_;
  std::uint64_t n_r_prime_;

  mutable std::once_flag tower_once_;
  mutable std::unique_ptr<FieldTower> tower_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint64_t, CosetPartition> cosets_;
  mutable std::map<std::uint64_t, std::vector<Poly>> coset_polys_;
};

inline const FieldTower& build_tower(const CodeSetting& setting) { return setting.tower(); }

/// Equal settings, or SettingMismatch.
void require_same_setting(const CodeSetting& a, const CodeSetting& b);

/// A mu_q-invariant subset of P_{n,lambda^t}.
struct IndexSet {
  SettingPtr setting;
  std::uint64_t t = 1;              // unit mod nr
  std::vector<std::uint64_t> elems;  // sorted, distinct, all = t mod r

  /// Validates and sorts. NonUnit for bad t, NotClosed for elements outside
  /// P_{n,lambda^t}, NotInvariant unless closed under multiplication by q.
  static IndexSet make(SettingPtr setting, std::int64_t t, std::vector<std::uint64_t> elems);

  std::size_t size() const noexcept { return elems.size(); }
  bool contains(std::uint64_t x) const;
  friend bool operator==(const IndexSet& a, const IndexSet& b);
};

/// Complement in P_{n,lambda^t}.
IndexSet complement(const IndexSet& p);
/// u * P, living in P_{n,lambda^{ut}}.
IndexSet scaled(const IndexSet& p, std::int64_t u);
/// Union of the given cosets of cosets(t).
IndexSet union_of_cosets(SettingPtr setting, std::int64_t t, std::span<const std::size_t> coset_indices);

/// prod_{i in P} (X - theta^i) over F_q, assembled from the coset factors.
Poly poly_from_root_set(const IndexSet& p);

/// The lambda^t-constacyclic code with check set P.
struct ConstaCode {
  IndexSet check;
  Poly check_poly;  // f_P
  Poly generator;   // f_{P-bar}

  const CodeSetting& setting() const { return *check.setting; }
  std::uint64_t t() const noexcept { return check.t; }
  std::size_t n() const { return check.setting->n(); }
  std::size_t dimension() const noexcept { return check.size(); }
};

ConstaCode code_from_check_set(IndexSet p);

/// Generator divides the word; SettingMismatch on a length mismatch.
bool contains(const ConstaCode& code, const Word& w);
/// C subset of D as sets of words: same algebra and P_C subset P_D.
bool is_subcode(const ConstaCode& c, const ConstaCode& d);
/// The rows X^j * generator, j < dim.
std::vector<Word> generator_rows(const ConstaCode& code);

/// phi_t : R_{n,lambda^u} -> R_{n,lambda^{ut}}, a(X) -> a(X^{tbar}), as a monomial map.
struct IsometryDesc {
  SettingPtr setting;
  std::uint64_t t = 1;
  std::uint64_t tbar = 1;
  std::uint64_t source_t = 1;
  std::vector<std::size_t> perm;  // coefficient i moves to position perm[i]
  std::vector<Elem> scalars;      // and is multiplied by scalars[i]
};

IsometryDesc isometry(SettingPtr setting, std::int64_t t, std::int64_t source_t = 1);
Word apply_isometry(const IsometryDesc& iso, const Word& w);
/// The image code C_{tP}; SettingMismatch unless the code lives in the source algebra.
ConstaCode apply_isometry(const IsometryDesc& iso, const ConstaCode& code);

/// Ann(C_P) = C_{P-bar}.
ConstaCode annihilator(const ConstaCode& code);
/// C_P^perp = C_{-P-bar}, a lambda^{-t}-constacyclic code.
ConstaCode dual(const ConstaCode& code);

/// Minimum distance; the zero code has none.
struct Distance {
  bool infinite = false;
  std::uint64_t value = 0;
  static Distance infinity() { return {true, 0}; }
  static Distance of(std::uint64_t d) { return {false, d}; }
  friend bool operator==(const Distance&, const Distance&) = default;
};

/// Largest message space min_distance will enumerate.
inline constexpr std::uint64_t kMaxMessages = std::uint64_t{1} << 25;

/// Exhaustive over messages; TooLarge when q^dim > 2^25.
Distance min_distance(const ConstaCode& code);

/// Euclidean product sum a_i b_i; SettingMismatch on length mismatch.
Elem inner_product(const FieldSpec& field, const Word& a, const Word& b);
std::size_t hamming_weight(const Word& a);
/// a * b in R_{n,lambda^t}.
Word ring_mul(const CodeSetting& setting, std::int64_t t, const Word& a, const Word& b);
/// Coefficients of a polynomial reduced mod X^n - lambda^t, padded to length n.
Word reduce_word(const CodeSetting& setting, std::int64_t t, const Poly& a);

}  // namespace duadic
