#pragma once

// Finite fields F_{p^m}, dense polynomials over them, and the extension tower
// F_q <= F_{q^d} holding a primitive nr-th root of unity theta with theta^n = lambda.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace duadic {

using u128 = unsigned __int128;

/// Packed field element: coordinates c_0..c_{m-1} over F_p stored as sum c_i p^i.
using Elem = std::uint32_t;

/// Dense polynomials over F_p, coefficients low-to-high, no trailing zeros.
namespace fp {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
/// Remainder of a modulo a nonzero b.
Poly mod(Poly a, const Poly& b, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);

/// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible_exhaustive(const Poly& f, std::uint32_t p);
/// Rabin's test: X^{p^N} = X mod f and gcd(X^{p^{N/l}} - X, f) = 1 for primes l | N.
bool is_irreducible_rabin(const Poly& f, std::uint32_t p);

/// Lexicographically least monic irreducible polynomial of the given degree,
/// coefficients compared from the constant term upward.
Poly least_irreducible(std::uint32_t p, unsigned degree, bool exhaustive);

}  // namespace fp

/// F_{p^N} as F_p[X]/(f), elements as dense coordinate vectors of length N.
class PrimeExtension {
 public:
  using Vec = std::vector<std::uint32_t>;

  PrimeExtension(std::uint32_t p, fp::Poly modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return degree_; }
  const fp::Poly& modulus() const noexcept { return modulus_; }
  /// p^N; exact because construction rejects fields of order >= 2^127.
  u128 order() const noexcept { return order_; }

  Vec zero() const { return Vec(degree_, 0); }
  Vec one() const { return constant(1); }
  Vec constant(std::uint32_t c) const;
  /// The class of X, i.e. the generator of the coordinate basis.
  Vec x() const;

  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(const Vec& a, std::uint32_t c) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(Vec base, u128 exp) const;
  Vec inverse(const Vec& a) const;

  bool is_zero(const Vec& a) const;
  bool is_one(const Vec& a) const;
  /// True iff the multiplicative order of a is exactly `order`.
  bool has_order(const Vec& a, std::uint64_t order) const;

  /// Coordinates compared from c_0 upward, each in 0 < 1 < ... < p-1.
  static bool lex_less(const Vec& a, const Vec& b) { return a < b; }

 private:
  std::uint32_t p_;
  unsigned degree_;
  fp::Poly modulus_;
  u128 order_;
};

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// F_q with q = p^m <= 2^20. Arithmetic on packed elements uses log tables.
class FieldSpec {
 public:
  std::uint32_t characteristic() const noexcept { return core_.characteristic(); }
  unsigned degree() const noexcept { return core_.degree(); }
  std::uint64_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return degree() == 1; }
  const fp::Poly& modulus() const noexcept { return core_.modulus(); }
  const PrimeExtension& coordinates() const noexcept { return core_; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  /// Throws DivideByZero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  /// The element k * 1 of the prime subfield.
  Elem from_int(std::int64_t k) const;
  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;

  /// Order in F_q^*; throws DivideByZero for 0.
  std::uint64_t element_order(Elem a) const;
  bool lex_less(Elem a, Elem b) const;
  /// All elements, lexicographically ascending.
  std::vector<Elem> elements() const;
  /// Least element (lexicographically) of multiplicative order r; BadLambda if r does not divide q-1.
  Elem least_of_order(std::uint64_t r) const;

  /// Prime fields: decimal integer. Otherwise space-separated coordinates "c0 c1 ...".
  std::string format(Elem a) const;
  Elem parse(std::string_view text) const;

 private:
  friend FieldPtr make_field(std::uint32_t p, unsigned m);
  explicit FieldSpec(PrimeExtension core);

  PrimeExtension core_;
  std::uint64_t q_;
  std::vector<Elem> exp_;           // exp_[k] = g^k for a fixed primitive g
  std::vector<std::uint32_t> log_;  // log_[exp_[k]] = k
  std::vector<Elem> add_table_;     // q*q entries for small non-prime fields
};

/// Throws NotPrime for composite p, TooLarge above 2^20 elements.
FieldPtr make_field(std::uint32_t p, unsigned m);
/// Field of order q; BadQ unless q is a prime power.
FieldPtr make_field_of_order(std::uint64_t q);
/// (p, m) with q = p^m, or nullopt.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

/// Polynomial over a FieldSpec, coefficients low-to-high without trailing zeros.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  /// X^n - c.
  static Poly binomial(FieldPtr field, std::size_t n, Elem c);

  const FieldSpec& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem eval(Elem x) const;

  /// Coefficients low-to-high separated by spaces; non-prime coefficients in parentheses.
  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

Poly poly_mul(const Poly& a, const Poly& b);
/// Quotient and remainder; throws DivideByZero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& a);
Poly parse_poly(const FieldPtr& field, std::string_view text);

/// F_q inside F_{q^d}, d minimal with nr | q^d - 1, and the distinguished theta.
class FieldTower {
 public:
  using Vec = PrimeExtension::Vec;

  /// r is the order of lambda. Throws BadLambda for lambda = 0, Usage if gcd(n, q) != 1.
  static FieldTower build(FieldPtr base, std::uint64_t n, Elem lambda);

  const FieldSpec& base() const noexcept { return *base_; }
  const FieldPtr& base_ptr() const noexcept { return base_; }
  const PrimeExtension& ext() const noexcept { return ext_; }
  unsigned d() const noexcept { return d_; }
  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t nr() const noexcept { return nr_; }
  Elem lambda() const noexcept { return lambda_; }
  const Vec& theta() const noexcept { return powers_[1 % nr_]; }
  /// theta^i for any i, reduced mod nr.
  const Vec& theta_power(std::uint64_t i) const { return powers_[i % nr_]; }
  /// Image of the base generator class in the extension.
  const Vec& omega() const noexcept { return omega_; }

  Vec embed(Elem a) const;
  std::optional<Elem> project(const Vec& x) const;

  /// Coefficients of prod_{i in S} (X - theta^i) in the extension, low-to-high.
  std::vector<Vec> expand_roots(std::span<const std::uint64_t> exponents) const;
  /// The same product descended to F_q[X]; NotInvariant if a coefficient leaves F_q.
  Poly poly_from_root_set(std::span<const std::uint64_t> exponents) const;

 private:
  FieldTower(FieldPtr base, PrimeExtension ext) : base_(std::move(base)), ext_(std::move(ext)) {}

  FieldPtr base_;
  PrimeExtension ext_;
  unsigned d_ = 1;
  std::uint64_t n_ = 1;
  std::uint64_t nr_ = 1;
  Elem lambda_ = 1;
  Vec omega_;
  std::vector<Vec> omega_powers_;
  std::vector<Vec> powers_;
};

}  // namespace duadic
