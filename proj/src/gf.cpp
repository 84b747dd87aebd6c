#include "duadic/gf.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "duadic/arith.hpp"
#include "duadic/error.hpp"

namespace duadic {

namespace fp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly mod(Poly a, const Poly& b, std::uint32_t p) {
  if (b.empty()) throw Error(ErrorKind::DivideByZero, "polynomial division by zero");
  trim(a);
  const std::uint64_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - c * b[j] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inverse_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
  }
  return a;
}

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) { return mod(mul(a, b, p), f, p); }

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = mod(std::move(base), f, p);
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return mod(result, f, p);
}

bool has_root(const Poly& f, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * x + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

bool is_irreducible_exhaustive(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (f.empty() || n == 0) return false;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    // Every monic g of degree k, enumerated through its k lower coefficients.
    Poly g(k + 1, 0);
    g[k] = 1;
    while (true) {
      if (mod(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < k && ++g[i] == p) g[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

bool is_irreducible_rabin(const Poly& f, std::uint32_t p) {
  if (f.size() < 2) return false;
  const auto n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  if (p < 64 && has_root(f, p)) return false;
  const Poly x{0, 1};
  // frob[k] = X^{p^k} mod f
  std::vector<Poly> frob(n + 1);
  frob[0] = mod(x, f, p);
  for (unsigned k = 1; k <= n; ++k) frob[k] = powmod(frob[k - 1], p, f, p);
  if (sub(frob[n], mod(x, f, p), p).size() != 0) return false;
  for (const auto l : prime_divisors(n)) {
    const Poly g = gcd(f, sub(frob[n / l], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, unsigned degree, bool exhaustive) {
  if (degree == 0) throw Error(ErrorKind::Usage, "degree must be positive");
  if (degree == 1) return {0, 1};
  Poly f(degree + 1, 0);
  f[degree] = 1;
  f[0] = 1;  // a zero constant term leaves X as a factor
  while (true) {
    if (exhaustive ? is_irreducible_exhaustive(f, p) : is_irreducible_rabin(f, p)) return f;
    // Odometer with c_0 most significant, so candidates ascend lexicographically.
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (++f[i] < p) break;
      f[i] = 0;
      if (i == 0) throw Error(ErrorKind::Internal, "no irreducible polynomial found");
    }
  }
}

}  // namespace fp

namespace {

u128 checked_power(std::uint64_t p, unsigned n) {
  u128 v = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (v > (static_cast<u128>(1) << 126) / p) throw Error(ErrorKind::TooLarge, "extension field order exceeds 2^126");
    v *= p;
  }
  return v;
}

}  // namespace

PrimeExtension::PrimeExtension(std::uint32_t p, fp::Poly modulus)
    : p_(p), degree_(0), modulus_(std::move(modulus)), order_(0) {
  fp::trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) throw Error(ErrorKind::Usage, "modulus must be monic of degree >= 1");
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
  order_ = checked_power(p, degree_);
}

PrimeExtension::Vec PrimeExtension::constant(std::uint32_t c) const {
  Vec v(degree_, 0);
  v[0] = c % p_;
  return v;
}

PrimeExtension::Vec PrimeExtension::x() const {
  if (degree_ == 1) return constant((p_ - modulus_[0]) % p_);
  Vec v(degree_, 0);
  v[1] = 1;
  return v;
}

PrimeExtension::Vec PrimeExtension::add(const Vec& a, const Vec& b) const {
  Vec out(degree_);
  for (unsigned i = 0; i < degree_; ++i) out[i] = (a[i] + b[i]) % p_;
  return out;
}

PrimeExtension::Vec PrimeExtension::sub(const Vec& a, const Vec& b) const {
  Vec out(degree_);
  for (unsigned i = 0; i < degree_; ++i) out[i] = (a[i] + p_ - b[i]) % p_;
  return out;
}

PrimeExtension::Vec PrimeExtension::neg(const Vec& a) const {
  Vec out(degree_);
  for (unsigned i = 0; i < degree_; ++i) out[i] = (p_ - a[i]) % p_;
  return out;
}

PrimeExtension::Vec PrimeExtension::scale(const Vec& a, std::uint32_t c) const {
  Vec out(degree_);
  for (unsigned i = 0; i < degree_; ++i) out[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * c % p_);
  return out;
}

PrimeExtension::Vec PrimeExtension::mul(const Vec& a, const Vec& b) const {
  const unsigned n = degree_;
  std::vector<std::uint64_t> acc(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) acc[i + j] += std::uint64_t{a[i]} * b[j];
    if (p_ > (1u << 16)) {
      for (unsigned j = 0; j < n; ++j) acc[i + j] %= p_;
    }
  }
  for (auto& c : acc) c %= p_;
  for (unsigned i = 2 * n - 1; i-- > n;) {
    const std::uint64_t c = acc[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < n; ++j) acc[i - n + j] = (acc[i - n + j] + (p_ - modulus_[j]) * c) % p_;
  }
  Vec out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
  return out;
}

PrimeExtension::Vec PrimeExtension::pow(Vec base, u128 exp) const {
  Vec result = one();
  while (exp != 0) {
    if (exp & 1) result = mul(result, base);
    exp >>= 1;
    if (exp != 0) base = mul(base, base);
  }
  return result;
}

PrimeExtension::Vec PrimeExtension::inverse(const Vec& a) const {
  if (is_zero(a)) throw Error(ErrorKind::DivideByZero, "inverse of zero");
  return pow(a, order_ - 2);
}

bool PrimeExtension::is_zero(const Vec& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

bool PrimeExtension::is_one(const Vec& a) const {
  if (a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](std::uint32_t c) { return c == 0; });
}

bool PrimeExtension::has_order(const Vec& a, std::uint64_t order) const {
  if (is_zero(a) || !is_one(pow(a, order))) return false;
  for (const auto l : prime_divisors(order)) {
    if (is_one(pow(a, order / l))) return false;
  }
  return true;
}

FieldSpec::FieldSpec(PrimeExtension core) : core_(std::move(core)), q_(static_cast<std::uint64_t>(core_.order())) {
  // Primitive element: least packed value whose order is q - 1.
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  for (Elem g = 1; g < q_; ++g) {
    const auto gv = coords(g);
    if (!core_.has_order(gv, q_ - 1)) continue;
    auto x = core_.one();
    for (std::uint64_t k = 0; k + 1 < q_; ++k) {
      const Elem packed = from_coords(x);
      exp_[k] = packed;
      log_[packed] = static_cast<std::uint32_t>(k);
      x = core_.mul(x, gv);
    }
    break;
  }
  if (degree() > 1 && characteristic() != 2 && q_ <= 256) {
    add_table_.resize(q_ * q_);
    for (Elem a = 0; a < q_; ++a) {
      const auto ca = coords(a);
      for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = from_coords(core_.add(ca, coords(b)));
    }
  }
}

Elem FieldSpec::add(Elem a, Elem b) const {
  const std::uint32_t p = characteristic();
  if (p == 2) return a ^ b;
  if (degree() == 1) return (a + b) % p;
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  Elem out = 0, place = 1;
  while (a != 0 || b != 0) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

Elem FieldSpec::neg(Elem a) const {
  const std::uint32_t p = characteristic();
  if (p == 2) return a;
  if (degree() == 1) return (p - a) % p;
  Elem out = 0, place = 1;
  while (a != 0) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivideByZero, "inverse of zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FieldSpec::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::DivideByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const auto order = static_cast<std::int64_t>(q_ - 1);
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % order)) % order;
  if (k < 0) k += order;
  return exp_[static_cast<std::size_t>(k)];
}

Elem FieldSpec::from_int(std::int64_t k) const { return static_cast<Elem>(reduce(k, characteristic())); }

std::vector<std::uint32_t> FieldSpec::coords(Elem a) const {
  std::vector<std::uint32_t> c(degree(), 0);
  for (unsigned i = 0; i < degree(); ++i) {
    c[i] = a % characteristic();
    a /= characteristic();
  }
  return c;
}

Elem FieldSpec::from_coords(std::span<const std::uint32_t> c) const {
  Elem out = 0;
  for (std::size_t i = c.size(); i-- > 0;) out = out * characteristic() + c[i] % characteristic();
  return out;
}

std::uint64_t FieldSpec::element_order(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivideByZero, "zero has no multiplicative order");
  return (q_ - 1) / std::gcd<std::uint64_t>(log_[a], q_ - 1);
}

bool FieldSpec::lex_less(Elem a, Elem b) const { return coords(a) < coords(b); }

std::vector<Elem> FieldSpec::elements() const {
  std::vector<Elem> all(q_);
  for (Elem a = 0; a < q_; ++a) all[a] = a;
  std::sort(all.begin(), all.end(), [this](Elem a, Elem b) { return lex_less(a, b); });
  return all;
}

Elem FieldSpec::least_of_order(std::uint64_t r) const {
  if (r == 0 || (q_ - 1) % r != 0) {
    throw Error(ErrorKind::BadLambda, "no element of order " + std::to_string(r) + " in F_" + std::to_string(q_));
  }
  for (const Elem a : elements()) {
    if (a != 0 && element_order(a) == r) return a;
  }
  throw Error(ErrorKind::Internal, "cyclic group lacks an element of order " + std::to_string(r));
}

std::string FieldSpec::format(Elem a) const {
  if (is_prime_field()) return std::to_string(a);
  std::string out;
  for (const auto c : coords(a)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
  }
  return out;
}

Elem FieldSpec::parse(std::string_view text) const {
  std::vector<std::int64_t> values;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '(' || text[i] == ')')) ++i;
    if (i >= text.size()) break;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw Error(ErrorKind::Usage, "cannot parse field element '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorKind::Usage, "empty field element");
  if (is_prime_field()) {
    if (values.size() != 1) throw Error(ErrorKind::Usage, "prime-field element takes one integer");
    return from_int(values[0]);
  }
  if (values.size() != degree()) {
    throw Error(ErrorKind::Usage, "element of F_" + std::to_string(q_) + " needs " + std::to_string(degree()) +
                                      " coordinates");
  }
  std::vector<std::uint32_t> c;
  for (const auto v : values) c.push_back(static_cast<std::uint32_t>(reduce(v, characteristic())));
  return from_coords(c);
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(f[0].prime), f[0].exponent};
}

FieldPtr make_field(std::uint32_t p, unsigned m) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::Usage, "field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > (1u << 20)) throw Error(ErrorKind::TooLarge, "field order exceeds 2^20");
  }
  return FieldPtr(new FieldSpec(PrimeExtension(p, fp::least_irreducible(p, m, /*exhaustive=*/true))));
}

FieldPtr make_field_of_order(std::uint64_t q) {
  const auto pm = prime_power(q);
  if (!pm) throw Error(ErrorKind::BadQ, std::to_string(q) + " is not a prime power");
  return make_field(pm->first, pm->second);
}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::binomial(FieldPtr field, std::size_t n, Elem c) {
  std::vector<Elem> coeffs(n + 1, 0);
  coeffs[n] = 1;
  coeffs[0] = field->add(coeffs[0], field->neg(c));
  return Poly(std::move(field), std::move(coeffs));
}

Elem Poly::eval(Elem x) const {
  Elem v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = field_->add(field_->mul(v, x), *it);
  return v;
}

std::string Poly::to_string() const {
  std::ostringstream out;
  const bool prime = field_->is_prime_field();
  if (coeffs_.empty()) return prime ? "0" : "(" + field_->format(0) + ")";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ' ';
    if (prime) {
      out << field_->format(coeffs_[i]);
    } else {
      out << '(' << field_->format(coeffs_[i]) << ')';
    }
  }
  return out.str();
}

namespace {

void same_field(const Poly& a, const Poly& b) {
  if (a.field_ptr() != b.field_ptr() &&
      (a.field().order() != b.field().order() || a.field().modulus() != b.field().modulus())) {
    throw Error(ErrorKind::SettingMismatch, "polynomials over different fields");
  }
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  same_field(a, b);
  const auto& f = a.field();
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_ptr(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  same_field(a, b);
  const auto& f = a.field();
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_ptr(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

bool operator==(const Poly& a, const Poly& b) {
  return a.field().order() == b.field().order() && a.field().modulus() == b.field().modulus() &&
         a.coeffs_ == b.coeffs_;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_ptr());
  const auto& f = a.field();
  std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly(a.field_ptr(), std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  same_field(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivideByZero, "polynomial division by zero");
  const auto& f = a.field();
  std::vector<Elem> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (rem.size() <= db) return {Poly(a.field_ptr()), a};
  std::vector<Elem> quot(rem.size() - db, 0);
  const Elem lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
  }
  return {Poly(a.field_ptr(), std::move(quot)), Poly(a.field_ptr(), std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

bool poly_divides(const Poly& d, const Poly& a) { return poly_mod(a, d).is_zero(); }

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  std::vector<Elem> coeffs;
  if (field->is_prime_field()) {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) coeffs.push_back(field->parse(tok));
    return Poly(field, std::move(coeffs));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    const auto open = text.find('(', i);
    if (open == std::string_view::npos) {
      if (text.find_first_not_of(' ', i) != std::string_view::npos) {
        throw Error(ErrorKind::Usage, "non-prime coefficients must be parenthesized");
      }
      break;
    }
    const auto close = text.find(')', open);
    if (close == std::string_view::npos) throw Error(ErrorKind::Usage, "unbalanced parenthesis in polynomial");
    coeffs.push_back(field->parse(text.substr(open + 1, close - open - 1)));
    i = close + 1;
  }
  return Poly(field, std::move(coeffs));
}

}  // namespace duadic
