#pragma once

// Residue-ring arithmetic on Z_m: units, multiplicative orders, CRT frames and
// the coset/orbit combinatorics used by every other module.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace duadic {

/// Largest modulus accepted by residue arithmetic.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Throws NonUnit when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);
/// Least non-negative representative of v mod m.
std::uint64_t reduce(std::int64_t v, std::uint64_t m);

/// An element of Z_m. Always reduced.
class Residue {
 public:
  Residue(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  bool is_unit() const;
  Residue pow(std::uint64_t exp) const;
  Residue inverse() const;

  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator*(Residue a, Residue b);
  friend Residue operator-(Residue a);
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  struct Raw {};
  Residue(Raw, std::uint64_t value, std::uint64_t modulus) : value_(value), modulus_(modulus) {}

  std::uint64_t value_;
  std::uint64_t modulus_;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Z_m^* with the factorization of its order cached, for repeated order queries.
class UnitGroup {
 public:
  explicit UnitGroup(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return phi_; }
  /// Multiplicative order of t; throws NonUnit.
  std::uint64_t order_of(std::uint64_t t) const;

 private:
  std::uint64_t modulus_;
  std::uint64_t phi_;
  std::vector<std::uint64_t> phi_primes_;
};

/// Least k >= 1 with t^k = 1 in Z_m. Throws NonUnit.
std::uint64_t mult_order(Residue t);

/// 2-adic valuation; t must be positive.
unsigned nu2(std::uint64_t t);

/// Z_m written as a product of pairwise-coprime moduli.
class CrtFrame {
 public:
  /// Frame of prime-power factors of m, primes ascending.
  static CrtFrame prime_powers(std::uint64_t modulus);
  /// Explicit factors; throws BadFrame unless pairwise coprime.
  static CrtFrame from_factors(std::vector<std::uint64_t> factors);

  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }

 private:
  CrtFrame(std::uint64_t modulus, std::vector<std::uint64_t> factors)
      : modulus_(modulus), factors_(std::move(factors)) {}

  std::uint64_t modulus_;
  std::vector<std::uint64_t> factors_;
};

std::vector<Residue> crt_decompose(Residue x, const CrtFrame& frame);
Residue crt_compose(std::span<const Residue> parts, const CrtFrame& frame);

/// Orbits of multiplication by a generator on a closed set of residues.
struct CosetPartition {
  std::uint64_t modulus = 1;
  std::uint64_t generator = 1;
  std::vector<std::uint64_t> ambient;              // sorted
  std::vector<std::vector<std::uint64_t>> cosets;  // each sorted; ordered by front()

  std::size_t size() const noexcept { return cosets.size(); }
  /// Index of the coset containing x; throws NotClosed if x is outside the ambient set.
  std::size_t index_of(std::uint64_t x) const;
  std::uint64_t representative(std::size_t i) const { return cosets[i].front(); }
};

CosetPartition cosets_of(std::span<const std::uint64_t> ambient, Residue generator);

/// An orbit of mu_s on the coset set: coset representatives in the order
/// rep, s*rep, s^2*rep, ... starting from the least representative.
using Orbit = std::vector<std::uint64_t>;

std::vector<Orbit> orbits_on_cosets(const CosetPartition& partition, Residue s);

struct OrbitPairing {
  std::vector<std::uint64_t> first;   // Gamma_1, coset representatives, sorted
  std::vector<std::uint64_t> second;  // Gamma_2 = s * Gamma_1
};

/// Alternating assignment along each orbit; absent if some orbit has odd length.
std::optional<OrbitPairing> pair_even_orbits(std::span<const Orbit> orbits);

}  // namespace duadic
