#include "duadic/codes.hpp"

#include <algorithm>
#include <numeric>

#include "duadic/error.hpp"

namespace duadic {

namespace {

std::uint64_t mod_r(std::int64_t t, std::uint64_t r) { return reduce(t, r); }

}  // namespace

CodeSetting::CodeSetting(FieldPtr field, std::uint64_t n, Elem lambda)
    : field_(std::move(field)), n_(n), lambda_(lambda), r_(field_->element_order(lambda)), n_r_prime_(n) {
  for (std::uint64_t g = std::gcd(n_r_prime_, r_); g > 1; g = std::gcd(n_r_prime_, r_)) n_r_prime_ /= g;
}

SettingPtr CodeSetting::make(FieldPtr field, std::uint64_t n, Elem lambda) {
  if (!field) throw Error(ErrorKind::Usage, "missing field");
  if (lambda == 0 || lambda >= field->order()) throw Error(ErrorKind::BadLambda, "lambda must be a nonzero element of F_q");
  if (n == 0 || std::gcd(n, field->order()) != 1) {
    throw Error(ErrorKind::Usage, "length " + std::to_string(n) + " must be positive and coprime to q");
  }
  const std::uint64_t r = field->element_order(lambda);
  if (n > kMaxModulus / r) throw Error(ErrorKind::TooLarge, "nr exceeds 2^31");
  return SettingPtr(new CodeSetting(std::move(field), n, lambda));
}

std::vector<std::uint64_t> CodeSetting::ambient(std::uint64_t t) const {
  std::vector<std::uint64_t> out;
  out.reserve(n_);
  for (std::uint64_t x = t % r_; x < nr(); x += r_) out.push_back(x);
  return out;
}

const CosetPartition& CodeSetting::cosets(std::uint64_t t) const {
  const std::uint64_t key = t % r_;
  const std::lock_guard lock(cache_mutex_);
  auto it = cosets_.find(key);
  if (it == cosets_.end()) {
    const auto amb = ambient(key);
    it = cosets_.emplace(key, cosets_of(amb, Residue(static_cast<std::int64_t>(q() % nr()), nr()))).first;
  }
  return it->second;
}

const Poly& CodeSetting::coset_poly(std::uint64_t t, std::size_t i) const {
  const std::uint64_t key = t % r_;
  const auto& part = cosets(key);
  const auto& tw = tower();
  const std::lock_guard lock(cache_mutex_);
  auto it = coset_polys_.find(key);
  if (it == coset_polys_.end()) {
    std::vector<Poly> polys;
    polys.reserve(part.size());
    for (const auto& c : part.cosets) polys.push_back(tw.poly_from_root_set(c));
    it = coset_polys_.emplace(key, std::move(polys)).first;
  }
  return it->second.at(i);
}

const FieldTower& CodeSetting::tower() const {
  std::call_once(tower_once_, [this] { tower_ = std::make_unique<FieldTower>(FieldTower::build(field_, n_, lambda_)); });
  return *tower_;
}

Poly CodeSetting::modulus_poly(std::int64_t t) const {
  return Poly::binomial(field_, n_, lambda_power(static_cast<std::int64_t>(mod_r(t, r_))));
}

bool operator==(const CodeSetting& a, const CodeSetting& b) {
  return a.q() == b.q() && a.field().modulus() == b.field().modulus() && a.n() == b.n() && a.lambda() == b.lambda();
}

void require_same_setting(const CodeSetting& a, const CodeSetting& b) {
  if (&a != &b && !(a == b)) throw Error(ErrorKind::SettingMismatch, "objects belong to different settings");
}

IndexSet IndexSet::make(SettingPtr setting, std::int64_t t, std::vector<std::uint64_t> elems) {
  if (!setting) throw Error(ErrorKind::Usage, "missing setting");
  const std::uint64_t nr = setting->nr();
  const std::uint64_t tt = reduce(t, nr);
  if (std::gcd(tt, nr) != 1) throw Error(ErrorKind::NonUnit, std::to_string(t) + " is not a unit mod " + std::to_string(nr));
  for (const auto x : elems) {
    if (x >= nr || x % setting->r() != tt % setting->r()) {
      throw Error(ErrorKind::NotClosed, std::to_string(x) + " is not in " + std::to_string(tt % setting->r()) + " + " +
                                            std::to_string(setting->r()) + "Z_" + std::to_string(nr));
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const std::uint64_t q = setting->q() % nr;
  for (const auto x : elems) {
    if (!std::binary_search(elems.begin(), elems.end(), mul_mod(x, q, nr))) {
      throw Error(ErrorKind::NotInvariant, "index set is not closed under multiplication by q");
    }
  }
  return IndexSet{std::move(setting), tt, std::move(elems)};
}

bool IndexSet::contains(std::uint64_t x) const { return std::binary_search(elems.begin(), elems.end(), x); }

bool operator==(const IndexSet& a, const IndexSet& b) {
  return *a.setting == *b.setting && a.t % a.setting->r() == b.t % b.setting->r() && a.elems == b.elems;
}

IndexSet complement(const IndexSet& p) {
  std::vector<std::uint64_t> out;
  for (const auto x : p.setting->ambient(p.t)) {
    if (!p.contains(x)) out.push_back(x);
  }
  return IndexSet{p.setting, p.t, std::move(out)};
}

IndexSet scaled(const IndexSet& p, std::int64_t u) {
  const std::uint64_t nr = p.setting->nr();
  const std::uint64_t uu = reduce(u, nr);
  if (std::gcd(uu, nr) != 1) throw Error(ErrorKind::NonUnit, std::to_string(u) + " is not a unit mod " + std::to_string(nr));
  std::vector<std::uint64_t> out;
  out.reserve(p.size());
  for (const auto x : p.elems) out.push_back(mul_mod(x, uu, nr));
  std::sort(out.begin(), out.end());
  return IndexSet{p.setting, mul_mod(p.t, uu, nr), std::move(out)};
}

IndexSet union_of_cosets(SettingPtr setting, std::int64_t t, std::span<const std::size_t> coset_indices) {
  const auto& part = setting->cosets(reduce(t, setting->nr()));
  std::vector<std::uint64_t> elems;
  for (const auto i : coset_indices) {
    const auto& c = part.cosets.at(i);
    elems.insert(elems.end(), c.begin(), c.end());
  }
  return IndexSet::make(std::move(setting), t, std::move(elems));
}

Poly poly_from_root_set(const IndexSet& p) {
  const auto& s = *p.setting;
  const auto& part = s.cosets(p.t);
  std::vector<bool> used(part.size(), false);
  Poly out = Poly::constant(s.field_ptr(), 1);
  for (const auto x : p.elems) {
    const std::size_t i = part.index_of(x);
    if (used[i]) continue;
    used[i] = true;
    for (const auto y : part.cosets[i]) {
      if (!p.contains(y)) throw Error(ErrorKind::NotInvariant, "index set is not a union of q-cosets");
    }
    out = out * s.coset_poly(p.t, i);
  }
  return out;
}

ConstaCode code_from_check_set(IndexSet p) {
  auto check_poly = poly_from_root_set(p);
  auto generator = poly_from_root_set(complement(p));
  return ConstaCode{std::move(p), std::move(check_poly), std::move(generator)};
}

bool contains(const ConstaCode& code, const Word& w) {
  if (w.size() != code.n()) throw Error(ErrorKind::SettingMismatch, "word length differs from code length");
  return poly_divides(code.generator, Poly(code.setting().field_ptr(), w));
}

bool is_subcode(const ConstaCode& c, const ConstaCode& d) {
  require_same_setting(c.setting(), d.setting());
  if (c.t() % c.setting().r() != d.t() % d.setting().r()) return false;
  return std::includes(d.check.elems.begin(), d.check.elems.end(), c.check.elems.begin(), c.check.elems.end());
}

std::vector<Word> generator_rows(const ConstaCode& code) {
  const std::size_t n = code.n();
  std::vector<Word> rows;
  for (std::size_t j = 0; j < code.dimension(); ++j) {
    Word w(n, 0);
    for (std::size_t i = 0; i < code.generator.coeffs().size(); ++i) w[i + j] = code.generator.coeffs()[i];
    rows.push_back(std::move(w));
  }
  return rows;
}

IsometryDesc isometry(SettingPtr setting, std::int64_t t, std::int64_t source_t) {
  const std::uint64_t nr = setting->nr();
  const std::uint64_t n = setting->n();
  const std::uint64_t r = setting->r();
  const std::uint64_t tt = reduce(t, nr);
  const std::uint64_t tbar = inverse_mod(tt, nr);
  const std::uint64_t uu = reduce(source_t, nr);
  if (std::gcd(uu, nr) != 1) throw Error(ErrorKind::NonUnit, "source exponent is not a unit");
  IsometryDesc iso{setting, tt, tbar, uu, std::vector<std::size_t>(n), std::vector<Elem>(n)};
  const std::uint64_t ut = (uu % r) * (tt % r) % r;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t e = tbar * i;
    iso.perm[i] = static_cast<std::size_t>(e % n);
    iso.scalars[i] = setting->lambda_power(static_cast<std::int64_t>(ut * ((e / n) % r) % r));
  }
  return iso;
}

Word apply_isometry(const IsometryDesc& iso, const Word& w) {
  if (w.size() != iso.perm.size()) throw Error(ErrorKind::SettingMismatch, "word length differs from code length");
  const auto& f = iso.setting->field();
  Word out(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) out[iso.perm[i]] = f.mul(w[i], iso.scalars[i]);
  return out;
}

ConstaCode apply_isometry(const IsometryDesc& iso, const ConstaCode& code) {
  require_same_setting(*iso.setting, code.setting());
  const std::uint64_t r = iso.setting->r();
  if (code.t() % r != iso.source_t % r) {
    throw Error(ErrorKind::SettingMismatch, "code lives in lambda^" + std::to_string(code.t() % r) +
                                                " but the isometry starts from lambda^" + std::to_string(iso.source_t % r));
  }
  return code_from_check_set(scaled(code.check, static_cast<std::int64_t>(iso.t)));
}

ConstaCode annihilator(const ConstaCode& code) { return code_from_check_set(complement(code.check)); }

ConstaCode dual(const ConstaCode& code) { return code_from_check_set(scaled(complement(code.check), -1)); }

Distance min_distance(const ConstaCode& code) {
  const std::size_t k = code.dimension();
  if (k == 0) return Distance::infinity();
  const auto& f = code.setting().field();
  const std::uint64_t q = f.order();
  std::uint64_t messages = 1;
  for (std::size_t i = 0; i < k; ++i) {
    messages *= q;
    if (messages > kMaxMessages) {
      throw Error(ErrorKind::TooLarge, "q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds 2^25");
    }
  }
  const std::size_t n = code.n();
  const auto rows = generator_rows(code);
  // delta[i][v]: change of the word when digit i steps from v to v+1 (mod q).
  std::vector<std::vector<Word>> delta(k, std::vector<Word>(q, Word(n)));
  for (std::size_t i = 0; i < k; ++i) {
    for (Elem v = 0; v < q; ++v) {
      const Elem step = f.sub(static_cast<Elem>((v + 1) % q), v);
      for (std::size_t c = 0; c < n; ++c) delta[i][v][c] = f.mul(step, rows[i][c]);
    }
  }
  std::size_t best = n + 1;
  auto weight_below = [&](const Word& w) {
    std::size_t wt = 0;
    for (const auto c : w) {
      if (c != 0 && ++wt >= best) return best;
    }
    return wt;
  };
  // Scalar classes: the leading message digit is fixed to 1.
  std::vector<Elem> digits(k);
  for (std::size_t top = 0; top < k; ++top) {
    Word word = rows[top];
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      best = std::min(best, weight_below(word));
      std::size_t i = 0;
      for (; i < top; ++i) {
        const Elem old = digits[i];
        for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], delta[i][old][c]);
        digits[i] = static_cast<Elem>((old + 1) % q);
        if (digits[i] != 0) break;
      }
      if (i == top) break;
    }
  }
  return Distance::of(best);
}

Elem inner_product(const FieldSpec& field, const Word& a, const Word& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::SettingMismatch, "words of different lengths");
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = field.add(s, field.mul(a[i], b[i]));
  return s;
}

std::size_t hamming_weight(const Word& a) {
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](Elem c) { return c != 0; }));
}

Word reduce_word(const CodeSetting& setting, std::int64_t t, const Poly& a) {
  const auto& f = setting.field();
  const std::size_t n = setting.n();
  const Elem lt = setting.lambda_power(static_cast<std::int64_t>(reduce(t, setting.r())));
  std::vector<Elem> c = a.coeffs();
  for (std::size_t i = c.size(); i-- > n;) {
    if (c[i] == 0) continue;
    c[i - n] = f.add(c[i - n], f.mul(c[i], lt));
    c[i] = 0;
  }
  c.resize(n, 0);
  return c;
}

Word ring_mul(const CodeSetting& setting, std::int64_t t, const Word& a, const Word& b) {
  if (a.size() != setting.n() || b.size() != setting.n()) {
    throw Error(ErrorKind::SettingMismatch, "word length differs from setting length");
  }
  const auto fp = setting.field_ptr();
  return reduce_word(setting, t, Poly(fp, a) * Poly(fp, b));
}

}  // namespace duadic
