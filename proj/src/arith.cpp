#include "duadic/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <bit>
#include <tuple>

#include "duadic/error.hpp"

namespace duadic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::BadFrame: return "BadFrame";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::SettingMismatch: return "SettingMismatch";
    case ErrorKind::BadQ: return "BadQ";
    case ErrorKind::BadLambda: return "BadLambda";
    case ErrorKind::NoSplitting: return "NoSplitting";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

void check_modulus(std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::BadFrame, "modulus must be positive");
  if (m > kMaxModulus) throw Error(ErrorKind::TooLarge, "modulus " + std::to_string(m) + " exceeds 2^31");
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
  }
  if (old_r != 1 && m != 1) {
    throw Error(ErrorKind::NonUnit, std::to_string(a) + " is not a unit mod " + std::to_string(m));
  }
  return reduce(old_s, m);
}

std::uint64_t reduce(std::int64_t v, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = v % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

Residue::Residue(std::int64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  check_modulus(modulus);
  value_ = reduce(value, modulus);
}

bool Residue::is_unit() const { return std::gcd(value_, modulus_) == 1; }

Residue Residue::pow(std::uint64_t exp) const { return {Raw{}, pow_mod(value_, exp, modulus_), modulus_}; }

Residue Residue::inverse() const { return {Raw{}, inverse_mod(value_, modulus_), modulus_}; }

namespace {

void same_ring(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorKind::SettingMismatch, "residues from different rings");
}

}  // namespace

Residue operator+(Residue a, Residue b) {
  same_ring(a, b);
  return {Residue::Raw{}, (a.value_ + b.value_) % a.modulus_, a.modulus_};
}

Residue operator-(Residue a, Residue b) {
  same_ring(a, b);
  return {Residue::Raw{}, (a.value_ + a.modulus_ - b.value_) % a.modulus_, a.modulus_};
}

Residue operator*(Residue a, Residue b) {
  same_ring(a, b);
  return {Residue::Raw{}, mul_mod(a.value_, b.value_, a.modulus_), a.modulus_};
}

Residue operator-(Residue a) { return {Residue::Raw{}, (a.modulus_ - a.value_) % a.modulus_, a.modulus_}; }

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

UnitGroup::UnitGroup(std::uint64_t modulus)
    : modulus_(modulus), phi_(euler_phi(modulus)), phi_primes_(prime_divisors(euler_phi(modulus))) {
  check_modulus(modulus);
}

std::uint64_t UnitGroup::order_of(std::uint64_t t) const {
  t %= modulus_;
  if (std::gcd(t, modulus_) != 1) {
    throw Error(ErrorKind::NonUnit, std::to_string(t) + " is not a unit mod " + std::to_string(modulus_));
  }
  std::uint64_t order = phi_;
  for (const std::uint64_t p : phi_primes_) {
    while (order % p == 0 && pow_mod(t, order / p, modulus_) == 1 % modulus_) order /= p;
  }
  return order;
}

std::uint64_t mult_order(Residue t) { return UnitGroup(t.modulus()).order_of(t.value()); }

unsigned nu2(std::uint64_t t) {
  if (t == 0) throw Error(ErrorKind::Usage, "nu2 of zero");
  return static_cast<unsigned>(std::countr_zero(t));
}

CrtFrame CrtFrame::prime_powers(std::uint64_t modulus) {
  check_modulus(modulus);
  std::vector<std::uint64_t> factors;
  for (const auto& pp : factorize(modulus)) factors.push_back(pp.value());
  return {modulus, std::move(factors)};
}

CrtFrame CrtFrame::from_factors(std::vector<std::uint64_t> factors) {
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == 0) throw Error(ErrorKind::BadFrame, "zero factor");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(factors[i], factors[j]) != 1) {
        throw Error(ErrorKind::BadFrame, "factors " + std::to_string(factors[j]) + " and " +
                                             std::to_string(factors[i]) + " are not coprime");
      }
    }
    if (product > kMaxModulus / factors[i]) throw Error(ErrorKind::TooLarge, "frame modulus exceeds 2^31");
    product *= factors[i];
  }
  return {product, std::move(factors)};
}

std::vector<Residue> crt_decompose(Residue x, const CrtFrame& frame) {
  if (x.modulus() != frame.modulus()) throw Error(ErrorKind::BadFrame, "residue modulus differs from frame");
  std::vector<Residue> parts;
  parts.reserve(frame.factors().size());
  for (const std::uint64_t f : frame.factors()) parts.emplace_back(static_cast<std::int64_t>(x.value() % f), f);
  return parts;
}

Residue crt_compose(std::span<const Residue> parts, const CrtFrame& frame) {
  const auto& factors = frame.factors();
  if (parts.size() != factors.size()) throw Error(ErrorKind::BadFrame, "part count differs from frame");
  const std::uint64_t m = frame.modulus();
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].modulus() != factors[i]) throw Error(ErrorKind::BadFrame, "part modulus differs from frame");
    const std::uint64_t rest = m / factors[i];
    const std::uint64_t basis = mul_mod(rest, inverse_mod(rest % factors[i], factors[i]), m);
    x = (x + mul_mod(parts[i].value(), basis, m)) % m;
  }
  return {static_cast<std::int64_t>(x), m};
}

std::size_t CosetPartition::index_of(std::uint64_t x) const {
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (std::binary_search(cosets[i].begin(), cosets[i].end(), x)) return i;
  }
  throw Error(ErrorKind::NotClosed, std::to_string(x) + " lies outside the partitioned set");
}

CosetPartition cosets_of(std::span<const std::uint64_t> ambient, Residue generator) {
  const std::uint64_t m = generator.modulus();
  CosetPartition part;
  part.modulus = m;
  part.generator = generator.value();
  part.ambient.assign(ambient.begin(), ambient.end());
  std::sort(part.ambient.begin(), part.ambient.end());
  part.ambient.erase(std::unique(part.ambient.begin(), part.ambient.end()), part.ambient.end());

  std::vector<bool> seen(part.ambient.size(), false);
  auto position = [&](std::uint64_t x) -> std::size_t {
    const auto it = std::lower_bound(part.ambient.begin(), part.ambient.end(), x);
    if (it == part.ambient.end() || *it != x) {
      throw Error(ErrorKind::NotClosed, "set is not closed under multiplication by " +
                                            std::to_string(generator.value()) + " mod " + std::to_string(m));
    }
    return static_cast<std::size_t>(it - part.ambient.begin());
  };
  for (std::size_t i = 0; i < part.ambient.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint64_t> coset;
    std::uint64_t x = part.ambient[i];
    do {
      const std::size_t pos = position(x);
      if (seen[pos]) {
        throw Error(ErrorKind::NotClosed, "multiplication by " + std::to_string(generator.value()) +
                                              " is not a permutation of the set");
      }
      seen[pos] = true;
      coset.push_back(x);
      x = mul_mod(x, generator.value(), m);
    } while (x != part.ambient[i]);
    std::sort(coset.begin(), coset.end());
    part.cosets.push_back(std::move(coset));
  }
  // Ambient is scanned ascending, so cosets already come ordered by their minimum.
  return part;
}

std::vector<Orbit> orbits_on_cosets(const CosetPartition& partition, Residue s) {
  if (s.modulus() != partition.modulus) throw Error(ErrorKind::SettingMismatch, "multiplier modulus differs");
  const std::size_t k = partition.size();
  std::vector<std::size_t> image(k);
  std::vector<bool> hit(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t y = mul_mod(partition.representative(i), s.value(), partition.modulus);
    const auto& amb = partition.ambient;
    if (!std::binary_search(amb.begin(), amb.end(), y)) {
      throw Error(ErrorKind::NotInvariant, "ambient set is not mu_" + std::to_string(s.value()) + "-invariant");
    }
    image[i] = partition.index_of(y);
    if (hit[image[i]]) throw Error(ErrorKind::NotInvariant, "multiplier does not permute the cosets");
    hit[image[i]] = true;
  }
  std::vector<Orbit> orbits;
  std::vector<bool> seen(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (seen[i]) continue;
    Orbit orbit;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      orbit.push_back(partition.representative(j));
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::optional<OrbitPairing> pair_even_orbits(std::span<const Orbit> orbits) {
  OrbitPairing pairing;
  for (const Orbit& orbit : orbits) {
    if (orbit.size() % 2 != 0) return std::nullopt;
    // Start each orbit at its least representative.
    const auto least = std::min_element(orbit.begin(), orbit.end()) - orbit.begin();
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      const std::uint64_t rep = orbit[(static_cast<std::size_t>(least) + j) % orbit.size()];
      (j % 2 == 0 ? pairing.first : pairing.second).push_back(rep);
    }
  }
  std::sort(pairing.first.begin(), pairing.first.end());
  std::sort(pairing.second.begin(), pairing.second.end());
  return pairing;
}

}  // namespace duadic
