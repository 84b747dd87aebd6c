#include "duadic/splitting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "duadic/error.hpp"

namespace duadic {

std::string_view to_string(SplittingKind kind) { return kind == SplittingKind::TypeI ? "TypeI" : "TypeII"; }

std::optional<SplittingKind> parse_splitting_kind(std::string_view text) {
  if (text == "TypeI") return SplittingKind::TypeI;
  if (text == "TypeII") return SplittingKind::TypeII;
  return std::nullopt;
}

std::string_view to_string(ExistenceReason reason) {
  switch (reason) {
    case ExistenceReason::NrEven:
      return "n_r-even";
    case ExistenceReason::OddSquare:
      return "odd-square";
    case ExistenceReason::None:
      break;
  }
  return "none";
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return c.name;
  }
  return {};
}

std::vector<std::uint64_t> multiplier_group(const CodeSetting& setting) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1 % setting.r(); x < setting.nr(); x += setting.r()) {
    if (std::gcd(x, setting.nr()) == 1) out.push_back(x);
  }
  return out;
}

bool in_multiplier_group(const CodeSetting& setting, std::uint64_t s) {
  s %= setting.nr();
  return std::gcd(s, setting.nr()) == 1 && s % setting.r() == 1 % setting.r();
}

IndexSet p0_set(SettingPtr setting, std::int64_t t) {
  const std::uint64_t tt = reduce(t, setting->nr());
  std::vector<std::uint64_t> out;
  for (const auto x : setting->ambient(tt)) {
    if (x % setting->n_r_prime() == 0) out.push_back(x);
  }
  return IndexSet::make(std::move(setting), t, std::move(out));
}

Poly c0_check_poly(const CodeSetting& setting, std::int64_t t) {
  const std::uint64_t r = setting.r();
  const std::uint64_t inv = r == 1 ? 0 : inverse_mod(setting.n_r_prime() % r, r);
  const std::uint64_t e = reduce(t, r) * inv % r;
  return Poly::binomial(setting.field_ptr(), setting.n_r(), setting.lambda_power(static_cast<std::int64_t>(e)));
}

bool exists_type1(const CodeSetting& setting) {
  const std::uint64_t m = setting.n_r() * setting.r();
  const std::uint64_t order = mult_order(Residue(static_cast<std::int64_t>(setting.q() % m), m));
  return (setting.n_r() / order) % 2 == 0;
}

bool q_is_square_mod_nr_prime(const CodeSetting& setting) {
  for (const auto& pp : factorize(setting.n_r_prime())) {
    const std::uint64_t q = setting.q();
    if (pp.prime == 2) {
      if (pp.exponent >= 3 && q % 8 != 1) return false;
      if (pp.exponent == 2 && q % 4 != 1) return false;
    } else if (pow_mod(q % pp.prime, (pp.prime - 1) / 2, pp.prime) != 1) {
      return false;
    }
  }
  return true;
}

namespace {

IndexSet union_of_reps(const SettingPtr& setting, std::span<const std::uint64_t> reps) {
  const auto& part = setting->cosets(1);
  std::vector<std::uint64_t> elems;
  for (const auto rep : reps) {
    const auto& c = part.cosets[part.index_of(rep)];
    elems.insert(elems.end(), c.begin(), c.end());
  }
  return IndexSet::make(setting, 1, std::move(elems));
}

IndexSet difference(const IndexSet& a, const IndexSet& b) {
  std::vector<std::uint64_t> out;
  std::set_difference(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(), std::back_inserter(out));
  return IndexSet{a.setting, a.t, std::move(out)};
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  std::vector<std::uint64_t> out;
  std::set_union(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(), std::back_inserter(out));
  return IndexSet{a.setting, a.t, std::move(out)};
}

bool disjoint(const IndexSet& a, const IndexSet& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(), std::back_inserter(out));
  return out.empty();
}

// Move a splitting of P_{n,lambda} to P_{n,lambda^t} through x -> tx.
Splitting transport(Splitting sp, std::int64_t t) {
  const std::uint64_t tt = reduce(t, sp.setting->nr());
  if (tt == 1 % sp.setting->nr()) return sp;
  sp.P = scaled(sp.P, t);
  sp.sP = scaled(sp.sP, t);
  sp.t = sp.P.t;
  return sp;
}

// s = (s0 mod n_r r, parts mod p_i^{v_i}) in Z_{nr}.
std::uint64_t compose_multiplier(const CodeSetting& setting, std::uint64_t s0,
                                 const std::vector<std::pair<std::uint64_t, std::uint64_t>>& parts) {
  const std::uint64_t m = setting.n_r() * setting.r();
  std::vector<std::uint64_t> moduli{m};
  std::vector<Residue> residues{Residue(static_cast<std::int64_t>(s0 % m), m)};
  for (const auto& [value, modulus] : parts) {
    moduli.push_back(modulus);
    residues.emplace_back(static_cast<std::int64_t>(value % modulus), modulus);
  }
  return crt_compose(residues, CrtFrame::from_factors(moduli)).value();
}

// Pair the mu_s-orbits of the cosets of P_{n,lambda} that lie outside `excluded`.
std::optional<Splitting> pair_outside(const SettingPtr& setting, std::uint64_t s, const IndexSet* excluded,
                                      SplittingKind kind) {
  const auto& part = setting->cosets(1);
  const auto orbits = orbits_on_cosets(part, Residue(static_cast<std::int64_t>(s), setting->nr()));
  std::vector<Orbit> kept;
  for (const auto& o : orbits) {
    if (excluded == nullptr || !excluded->contains(o.front())) kept.push_back(o);
  }
  const auto pairing = pair_even_orbits(kept);
  if (!pairing) return std::nullopt;
  auto P = union_of_reps(setting, pairing->first);
  auto sP = scaled(P, static_cast<std::int64_t>(s));
  return Splitting{setting, 1, s, std::move(P), std::move(sP), kind};
}

std::uint64_t odd_part(std::uint64_t x) { return x >> nu2(x); }

}  // namespace

std::optional<Splitting> construct_type1(SettingPtr setting, std::int64_t t) {
  if (!exists_type1(*setting)) return std::nullopt;
  const std::uint64_t r = setting->r();
  const std::uint64_t m = setting->n_r() * r;
  std::set<std::uint64_t> q_powers;
  for (std::uint64_t x = 1 % m;; x = mul_mod(x, setting->q() % m, m)) {
    if (!q_powers.insert(x).second) break;
  }
  std::optional<std::uint64_t> s0;
  for (std::uint64_t j = 0; j < setting->n_r() && !s0; ++j) {
    const std::uint64_t x = (1 + r * j) % m;
    if (!q_powers.contains(x) && q_powers.contains(mul_mod(x, x, m))) s0 = x;
  }
  if (!s0) throw Error(ErrorKind::Internal, "even quotient without an element of order 2");
  const std::uint64_t s = compose_multiplier(*setting, *s0, {{1, setting->n_r_prime()}});
  auto sp = pair_outside(setting, s, nullptr, SplittingKind::TypeI);
  if (!sp) throw Error(ErrorKind::Internal, "Type-I multiplier left an orbit of odd length");
  return transport(std::move(*sp), t);
}

Splitting construct_type2(SettingPtr setting, std::int64_t t) {
  const auto& st = *setting;
  const bool nr_even = st.n_r() % 2 == 0;
  if (!nr_even && !(st.n() % 2 == 1 && q_is_square_mod_nr_prime(st))) {
    throw Error(ErrorKind::NoSplitting, "no Type-II splitting exists for q=" + std::to_string(st.q()) +
                                            ", n=" + std::to_string(st.n()) + ", r=" + std::to_string(st.r()));
  }
  const auto p0 = p0_set(setting, 1);
  if (exists_type1(st)) {
    auto sp = *construct_type1(setting, 1);
    sp.P = difference(sp.P, p0);
    sp.sP = difference(sp.sP, p0);
    sp.kind = SplittingKind::TypeII;
    return transport(std::move(sp), t);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
  for (const auto& pp : factorize(st.n_r_prime())) {
    const std::uint64_t pv = pp.value();
    const std::uint64_t q = st.q() % pv;
    const std::uint64_t oq = mult_order(Residue(static_cast<std::int64_t>(q), pv));
    std::optional<std::uint64_t> si;
    if (nr_even) {
      si = oq % 2 == 1 ? pv - 1 : pow_mod(q, odd_part(oq), pv);
    } else {
      for (std::uint64_t x = 1; x < pv && !si; ++x) {
        if (x % pp.prime == 0 || mul_mod(x, x, pv) != q) continue;
        if (nu2(mult_order(Residue(static_cast<std::int64_t>(x), pv))) == nu2(oq) + 1) si = x;
      }
      if (!si) throw Error(ErrorKind::Internal, "no square root of q with the required 2-power order");
    }
    parts.emplace_back(*si, pv);
  }
  const std::uint64_t s = compose_multiplier(st, 1, parts);
  auto sp = pair_outside(setting, s, &p0, SplittingKind::TypeII);
  if (!sp) throw Error(ErrorKind::Internal, "multiplier left an orbit of odd length outside P0");
  return transport(std::move(*sp), t);
}

ExistenceVerdict exists_type2(SettingPtr setting) {
  const auto& st = *setting;
  ExistenceVerdict v;
  if (st.n_r() % 2 == 0) {
    v.reason = ExistenceReason::NrEven;
  } else if (st.n() % 2 == 1 && q_is_square_mod_nr_prime(st)) {
    v.reason = ExistenceReason::OddSquare;
  } else {
    return v;
  }
  v.exists = true;
  v.witness = construct_type2(std::move(setting), 1);
  const auto report = verify_splitting(*v.witness);
  if (!report.ok()) throw Error(ErrorKind::Internal, "constructed splitting failed check " + report.first_failure());
  return v;
}

VerificationReport verify_splitting_data(SettingPtr setting, std::int64_t t, std::int64_t s, SplittingKind kind,
                                         std::vector<std::uint64_t> P, std::vector<std::uint64_t> sP) {
  VerificationReport rep;
  auto add = [&rep](std::string name, bool pass) {
    rep.checks.push_back({std::move(name), pass});
    return pass;
  };
  const auto& st = *setting;
  const std::uint64_t nr = st.nr();
  const std::uint64_t tt = reduce(t, nr);
  const std::uint64_t ss = reduce(s, nr);
  if (!add("t-unit", std::gcd(tt, nr) == 1)) return rep;
  add("s-in-multiplier-group", in_multiplier_group(st, ss));
  std::optional<IndexSet> p, sp;
  try {
    p = IndexSet::make(setting, t, std::move(P));
  } catch (const Error&) {
  }
  try {
    sp = IndexSet::make(setting, t, std::move(sP));
  } catch (const Error&) {
  }
  add("P-invariant", p.has_value());
  add("sP-invariant", sp.has_value());
  if (!p || !sp) return rep;
  const bool unit = std::gcd(ss, nr) == 1;
  add("sP-equals-s-times-P", unit && scaled(*p, static_cast<std::int64_t>(ss)).elems == sp->elems);
  add("s2P-equals-P", unit && scaled(*p, static_cast<std::int64_t>(mul_mod(ss, ss, nr))).elems == p->elems);

  const auto p0 = p0_set(setting, t);
  const bool two = kind == SplittingKind::TypeII;
  bool dis = disjoint(*p, *sp);
  if (two) dis = dis && disjoint(*p, p0) && disjoint(*sp, p0);
  add("disjoint", dis);
  auto all = set_union(*p, *sp);
  if (two) all = set_union(all, p0);
  add("cover", all.elems == st.ambient(tt));
  const std::uint64_t expected = two ? (st.n() - st.n_r()) / 2 : st.n() / 2;
  add("sizes", p->size() == expected && sp->size() == expected);

  Poly product = poly_from_root_set(*p) * poly_from_root_set(*sp);
  if (two) {
    const Poly f0 = poly_from_root_set(p0);
    add("P0-check-poly", f0 == c0_check_poly(st, t));
    product = product * f0;
  }
  add("factorization", product == st.modulus_poly(t));
  return rep;
}

VerificationReport verify_splitting(const Splitting& sp) {
  return verify_splitting_data(sp.setting, static_cast<std::int64_t>(sp.t), static_cast<std::int64_t>(sp.s), sp.kind,
                               sp.P.elems, sp.sP.elems);
}

std::pair<ConstaCode, ConstaCode> odd_like_pair(const Splitting& sp) {
  if (sp.kind != SplittingKind::TypeII) throw Error(ErrorKind::Usage, "odd-like codes need a Type-II splitting");
  const auto p0 = p0_set(sp.setting, static_cast<std::int64_t>(sp.t));
  return {code_from_check_set(set_union(p0, sp.P)), code_from_check_set(set_union(p0, sp.sP))};
}

bool is_iso_orthogonal(const ConstaCode& code, std::int64_t t) {
  const auto& st = code.setting();
  const std::uint64_t tt = reduce(t, st.nr());
  if (std::gcd(tt, st.nr()) != 1) throw Error(ErrorKind::NonUnit, std::to_string(t) + " is not a unit mod nr");
  const std::uint64_t neg = (st.nr() - tt) % st.nr();
  if (!in_multiplier_group(st, neg)) return false;
  return disjoint(code.check, scaled(code.check, static_cast<std::int64_t>(neg)));
}

bool even_dual_is_odd(const Splitting& sp) {
  if (sp.kind != SplittingKind::TypeII) throw Error(ErrorKind::Usage, "even-like pair needs a Type-II splitting");
  const auto d1 = dual(code_from_check_set(sp.P));
  const auto d2 = dual(code_from_check_set(sp.sP));
  const auto p0 = p0_set(sp.setting, -static_cast<std::int64_t>(sp.t));
  const std::uint64_t r = sp.setting->r();
  if (d1.t() % r != p0.t % r || d2.t() % r != p0.t % r) return false;
  const auto in_both = [&p0](const IndexSet& x) {
    return std::includes(x.elems.begin(), x.elems.end(), p0.elems.begin(), p0.elems.end());
  };
  if (!in_both(d1.check) || !in_both(d2.check)) return false;
  const auto a = difference(d1.check, p0);
  const auto b = difference(d2.check, p0);
  // The duals are C_{P0' + A} and C_{P0' + B}; they are odd-like iff (s, A, B) is a Type-II splitting.
  return verify_splitting_data(sp.setting, static_cast<std::int64_t>(p0.t), static_cast<std::int64_t>(sp.s),
                               SplittingKind::TypeII, a.elems, b.elems)
      .ok();
}

std::uint64_t max_iso_orthogonal_dim(const CodeSetting& setting) {
  const auto& part = setting.cosets(1);
  const std::size_t k = part.size();
  if (k > kMaxIsoCosets) {
    throw Error(ErrorKind::TooLarge, std::to_string(k) + " cosets exceed the limit of " + std::to_string(kMaxIsoCosets));
  }
  // Within a cycle of length L the constraints read X disjoint from X+1 and X+2 = X.
  std::map<std::size_t, std::size_t> cycle_best;
  auto best_on_cycle = [&cycle_best](std::size_t len) {
    auto it = cycle_best.find(len);
    if (it != cycle_best.end()) return it->second;
    const std::uint32_t full = (std::uint32_t{1} << len) - 1;
    auto rot = [&](std::uint32_t x, std::size_t by) {
      by %= len;
      return by == 0 ? x : ((x << by) | (x >> (len - by))) & full;
    };
    std::size_t best = 0;
    for (std::uint32_t x = 0; x <= full; ++x) {
      if ((x & rot(x, 1)) == 0 && rot(x, 2) == x) best = std::max<std::size_t>(best, std::popcount(x));
    }
    cycle_best.emplace(len, best);
    return best;
  };
  std::set<std::vector<std::size_t>> seen;
  std::uint64_t best = 0;
  for (const auto s : multiplier_group(setting)) {
    std::vector<std::size_t> image(k);
    for (std::size_t i = 0; i < k; ++i) image[i] = part.index_of(mul_mod(part.representative(i), s, part.modulus));
    if (!seen.insert(image).second) continue;
    std::vector<bool> done(k, false);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (done[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !done[j]; j = image[j]) {
        done[j] = true;
        ++len;
      }
      total += best_on_cycle(len) * part.cosets[i].size();
    }
    best = std::max(best, total);
  }
  return best;
}

}  // namespace duadic
