#include <map>
#include <mutex>
#include <numeric>

#include "duadic/arith.hpp"
#include "duadic/error.hpp"
#include "duadic/gf.hpp"

namespace duadic {

namespace {

// Extension moduli are expensive to find for large degrees and are shared by
// every setting with the same (p, N).
const fp::Poly& extension_modulus(std::uint32_t p, unsigned degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, fp::Poly> cache;
  const std::lock_guard lock(mutex);
  auto it = cache.find({p, degree});
  if (it == cache.end()) it = cache.emplace(std::pair{p, degree}, fp::least_irreducible(p, degree, false)).first;
  return it->second;
}

// The k-th coordinate vector in packed order, k read in base p.
PrimeExtension::Vec nth_vector(const PrimeExtension& ext, std::uint64_t k) {
  auto v = ext.zero();
  for (unsigned i = 0; i < ext.degree() && k != 0; ++i) {
    v[i] = static_cast<std::uint32_t>(k % ext.characteristic());
    k /= ext.characteristic();
  }
  return v;
}

// Some element of exact order `order` (which divides |ext^*|).
PrimeExtension::Vec element_of_order(const PrimeExtension& ext, std::uint64_t order) {
  const u128 cofactor = (ext.order() - 1) / order;
  for (std::uint64_t k = 1;; ++k) {
    const auto a = nth_vector(ext, k);
    if (ext.is_zero(a)) continue;
    auto u = ext.pow(a, cofactor);
    if (ext.has_order(u, order)) return u;
    if (k > (std::uint64_t{1} << 24)) throw Error(ErrorKind::Internal, "no element of the requested order found");
  }
}

}  // namespace

FieldTower FieldTower::build(FieldPtr base, std::uint64_t n, Elem lambda) {
  if (lambda == 0 || lambda >= base->order()) throw Error(ErrorKind::BadLambda, "lambda must be a nonzero field element");
  const std::uint64_t q = base->order();
  if (n == 0 || std::gcd(n, q) != 1) throw Error(ErrorKind::Usage, "length must be positive and coprime to q");
  const std::uint64_t r = base->element_order(lambda);
  const std::uint64_t nr = n * r;
  const auto d = static_cast<unsigned>(mult_order(Residue(static_cast<std::int64_t>(q % nr), nr)));
  const unsigned m = base->degree();
  const std::uint32_t p = base->characteristic();

  FieldTower tower(base, PrimeExtension(p, extension_modulus(p, m * d)));
  tower.d_ = d;
  tower.n_ = n;
  tower.nr_ = nr;
  tower.lambda_ = lambda;
  const auto& ext = tower.ext_;

  if (m == 1) {
    tower.omega_ = ext.zero();
    tower.omega_powers_ = {ext.one()};
  } else {
    // Roots of the base modulus lie in the copy of F_q^*, enumerated from a generator.
    const auto g = element_of_order(ext, q - 1);
    const auto& f = base->modulus();
    std::optional<Vec> best;
    auto y = ext.one();
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      auto v = ext.zero();
      for (std::size_t i = f.size(); i-- > 0;) v = ext.add(ext.mul(v, y), ext.constant(f[i]));
      if (ext.is_zero(v) && (!best || PrimeExtension::lex_less(y, *best))) best = y;
      y = ext.mul(y, g);
    }
    if (!best) throw Error(ErrorKind::Internal, "base modulus has no root in the extension");
    tower.omega_ = *best;
    tower.omega_powers_.push_back(ext.one());
    for (unsigned i = 1; i < m; ++i) tower.omega_powers_.push_back(ext.mul(tower.omega_powers_.back(), tower.omega_));
  }

  // Elements of order nr are exactly u^k with k a unit mod nr.
  const auto u = element_of_order(ext, nr);
  const auto target = tower.embed(lambda);
  std::optional<Vec> theta;
  auto uk = ext.one();
  for (std::uint64_t k = 0; k < nr; ++k) {
    if (std::gcd(k, nr) == 1 && ext.pow(uk, n) == target && (!theta || PrimeExtension::lex_less(uk, *theta))) {
      theta = uk;
    }
    uk = ext.mul(uk, u);
  }
  if (!theta) throw Error(ErrorKind::Internal, "no primitive nr-th root of unity with theta^n = lambda");

  tower.powers_.reserve(nr);
  auto x = ext.one();
  for (std::uint64_t i = 0; i < nr; ++i) {
    tower.powers_.push_back(x);
    x = ext.mul(x, *theta);
  }
  return tower;
}

FieldTower::Vec FieldTower::embed(Elem a) const {
  const auto c = base_->coords(a);
  auto v = ext_.zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) v = ext_.add(v, ext_.scale(omega_powers_[i], c[i]));
  }
  return v;
}

std::optional<Elem> FieldTower::project(const Vec& x) const {
  const unsigned m = base_->degree();
  const unsigned N = ext_.degree();
  const std::uint64_t p = base_->characteristic();
  // Solve sum_j c_j omega^j = x over F_p; rows are extension coordinates.
  std::vector<std::vector<std::uint64_t>> rows(N, std::vector<std::uint64_t>(m + 1));
  for (unsigned i = 0; i < N; ++i) {
    for (unsigned j = 0; j < m; ++j) rows[i][j] = omega_powers_[j][i];
    rows[i][m] = x[i];
  }
  unsigned rank = 0;
  std::vector<unsigned> pivot_col;
  for (unsigned col = 0; col < m && rank < N; ++col) {
    unsigned piv = rank;
    while (piv < N && rows[piv][col] == 0) ++piv;
    if (piv == N) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = inverse_mod(rows[rank][col], p);
    for (auto& e : rows[rank]) e = e * inv % p;
    for (unsigned i = 0; i < N; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const std::uint64_t c = rows[i][col];
      for (unsigned j = 0; j <= m; ++j) rows[i][j] = (rows[i][j] + (p - c) * rows[rank][j]) % p;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (unsigned i = rank; i < N; ++i) {
    if (rows[i][m] != 0) return std::nullopt;
  }
  std::vector<std::uint32_t> coords(m, 0);
  for (unsigned i = 0; i < rank; ++i) coords[pivot_col[i]] = static_cast<std::uint32_t>(rows[i][m]);
  return base_->from_coords(coords);
}

std::vector<FieldTower::Vec> FieldTower::expand_roots(std::span<const std::uint64_t> exponents) const {
  std::vector<Vec> coeffs{ext_.one()};
  for (const auto e : exponents) {
    const auto root = ext_.neg(theta_power(e));
    coeffs.push_back(ext_.zero());
    for (std::size_t i = coeffs.size() - 1; i > 0; --i) coeffs[i] = ext_.add(coeffs[i - 1], ext_.mul(coeffs[i], root));
    coeffs[0] = ext_.mul(coeffs[0], root);
  }
  return coeffs;
}

Poly FieldTower::poly_from_root_set(std::span<const std::uint64_t> exponents) const {
  const auto coeffs = expand_roots(exponents);
  std::vector<Elem> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    const auto a = project(c);
    if (!a) throw Error(ErrorKind::NotInvariant, "root set is not closed under multiplication by q");
    out.push_back(*a);
  }
  return Poly(base_, std::move(out));
}

}  // namespace duadic
