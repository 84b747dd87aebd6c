#include <doctest.h>

#include <algorithm>
#include <random>

#include "duadic/codes.hpp"
#include "duadic/error.hpp"
#include "oracles.hpp"

using namespace duadic;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

SettingPtr q5() { return CodeSetting::make(oracle::field(5), 6, 2); }

std::vector<Word> all_codewords(const FieldSpec& f, const std::vector<Word>& rows, std::size_t n) {
  std::vector<Word> out;
  std::vector<Elem> m(rows.size(), 0);
  while (true) {
    Word w(n, 0);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (std::size_t i = 0; i < n; ++i) w[i] = f.add(w[i], f.mul(m[j], rows[j][i]));
    }
    out.push_back(w);
    std::size_t i = 0;
    while (i < m.size() && ++m[i] == f.order()) m[i++] = 0;
    if (i == m.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("setting validation") {
  auto f5 = oracle::field(5);
  CHECK(kind_of([&] { CodeSetting::make(f5, 10, 2); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { CodeSetting::make(f5, 6, 0); }) == ErrorKind::BadLambda);
  auto st = q5();
  CHECK(st->r() == 4);
  CHECK(st->nr() == 24);
  CHECK(st->n_r() == 2);
  CHECK(st->n_r_prime() == 3);
  CHECK(st->ambient(1) == std::vector<std::uint64_t>{1, 5, 9, 13, 17, 21});
}

TEST_CASE("index set validation") {
  auto st = q5();
  CHECK(kind_of([&] { IndexSet::make(st, 2, {}); }) == ErrorKind::NonUnit);
  CHECK(kind_of([&] { IndexSet::make(st, 1, {2}); }) == ErrorKind::NotClosed);
  CHECK(kind_of([&] { IndexSet::make(st, 1, {9}); }) == ErrorKind::NotInvariant);
  const auto s = IndexSet::make(st, 1, {21, 9, 9});
  CHECK(s.elems == std::vector<std::uint64_t>{9, 21});
  CHECK(complement(s).elems == std::vector<std::uint64_t>{1, 5, 13, 17});
  CHECK(scaled(s, 13).elems == std::vector<std::uint64_t>{9, 21});
  CHECK(scaled(s, 13).t == 13);
}

TEST_CASE("code construction examples") {
  auto st = q5();
  auto f = st->field_ptr();
  std::optional<ConstaCode> c;
  for (std::size_t i = 0; i < st->cosets(1).size(); ++i) {
    if (st->coset_poly(1, i) == Poly(f, {2, 1, 1})) {
      const std::size_t idx[] = {i};
      c = code_from_check_set(union_of_cosets(st, 1, idx));
    }
  }
  REQUIRE(c.has_value());
  CHECK(c->dimension() == 2);
  CHECK(c->check_poly * c->generator == Poly::binomial(f, 6, 2));

  const auto zero = code_from_check_set(IndexSet::make(st, 1, {}));
  CHECK(zero.generator == Poly::binomial(f, 6, 2));
  CHECK(min_distance(zero) == Distance::infinity());
  const auto whole = code_from_check_set(IndexSet::make(st, 1, st->ambient(1)));
  CHECK(whole.generator == Poly::constant(f, 1));
  CHECK(min_distance(whole) == Distance::of(1));

  CHECK(contains(*c, reduce_word(*st, 1, c->generator)));
  CHECK(contains(*c, Word(6, 0)));
  const Poly shifted = Poly(f, {0, 1}) * c->generator;
  CHECK(contains(*c, reduce_word(*st, 1, shifted)));
  Word bad(6, 0);
  bad[0] = 1;
  CHECK_FALSE(contains(*c, bad));
  CHECK(kind_of([&] { contains(*c, Word(5, 0)); }) == ErrorKind::SettingMismatch);
  CHECK(is_subcode(zero, *c));
  CHECK(is_subcode(*c, whole));
  CHECK_FALSE(is_subcode(whole, *c));
}

TEST_CASE("isometry examples") {
  auto st = q5();
  const auto id = isometry(st, 1);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(id.perm[i] == i);
    CHECK(id.scalars[i] == 1);
  }
  // phi_{-1}: a_0 + lambda a_{n-1} X + ... + lambda a_1 X^{n-1}.
  const auto neg = isometry(st, -1);
  const Word a = {1, 2, 3, 4, 0, 1};
  const Word expected = {1, 2, 0, 4 * 2 % 5, 3 * 2 % 5, 2 * 2 % 5};
  CHECK(apply_isometry(neg, a) == expected);

  auto f = st->field_ptr();
  const auto w = reduce_word(*st, 1, Poly(f, {2, 1, 1}));
  CHECK(apply_isometry(isometry(st, 13), w) == reduce_word(*st, 13, Poly(f, {2, 4, 1})));
  CHECK(kind_of([&] { isometry(st, 2); }) == ErrorKind::NonUnit);
}

TEST_CASE("isometry on codes") {
  auto st13 = CodeSetting::make(oracle::field(13), 14, 5);
  const auto c = code_from_check_set(IndexSet::make(st13, 1, {25, 29, 33, 37, 41, 45}));
  const auto img = apply_isometry(isometry(st13, 29), c);
  CHECK(img.check.elems == std::vector<std::uint64_t>{1, 5, 9, 13, 17, 53});
  CHECK(apply_isometry(isometry(st13, 1), c).check == c.check);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto& p = oracle::pick(oracle::sweep(), rng);
    auto st = oracle::setting(p);
    std::uint64_t t = 0;
    do t = rng() % st->nr();
    while (oracle::gcd(t, st->nr()) != 1);
    const auto& part = st->cosets(1);
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (rng() & 1) chosen.push_back(k);
    }
    const auto code = code_from_check_set(union_of_cosets(st, 1, chosen));
    const auto there = apply_isometry(isometry(st, static_cast<std::int64_t>(t)), code);
    const auto inv = inverse_mod(t, st->nr());
    const auto back = apply_isometry(isometry(st, static_cast<std::int64_t>(inv), static_cast<std::int64_t>(t)), there);
    CHECK(back.check == code.check);
    CHECK(back.generator == code.generator);
    CHECK(kind_of([&] { apply_isometry(isometry(st, 1, static_cast<std::int64_t>(t)), code); }) ==
          (t % st->r() == 1 % st->r() ? ErrorKind::Internal : ErrorKind::SettingMismatch));
  }
}

TEST_CASE("annihilator and dual examples") {
  auto st = q5();
  const auto c0 = code_from_check_set(IndexSet::make(st, 1, {9, 21}));
  CHECK(annihilator(c0).check.elems == std::vector<std::uint64_t>{1, 5, 13, 17});
  const auto zero = code_from_check_set(IndexSet::make(st, 1, {}));
  CHECK(annihilator(zero).dimension() == 6);
  const auto whole = code_from_check_set(IndexSet::make(st, 1, st->ambient(1)));
  CHECK(dual(whole).dimension() == 0);
  CHECK(dual(zero).dimension() == 6);
  CHECK(dual(zero).t() % 4 == 3);

  const auto d = dual(c0);
  CHECK(d.check.elems == std::vector<std::uint64_t>{7, 11, 19, 23});
  const auto& f = st->field();
  const auto cw = all_codewords(f, generator_rows(c0), 6);
  const auto dw = all_codewords(f, generator_rows(d), 6);
  CHECK(cw.size() == 25);
  CHECK(dw.size() == 625);
  std::size_t nonzero = 0;
  for (const auto& a : cw) {
    for (const auto& b : dw) nonzero += inner_product(f, a, b) != 0 ? 1 : 0;
  }
  CHECK(nonzero == 0);
  // No word outside C^perp is orthogonal to all of C: C^perp is exactly the orthogonal space.
  std::size_t orth = 0;
  for (const auto& w : all_codewords(f, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                         {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}, 6)) {
    bool all = true;
    for (const auto& a : cw) all = all && inner_product(f, a, w) == 0;
    orth += all ? 1 : 0;
  }
  CHECK(orth == 625);
}

TEST_CASE("inner product and weight") {
  const auto& f = *oracle::field(7);
  CHECK(inner_product(f, {1, 2, 3}, {0, 0, 0}) == 0);
  CHECK(inner_product(f, {1, 2, 3}, {1, 1, 1}) == 6);
  CHECK(kind_of([&] { inner_product(f, {1}, {1, 2}); }) == ErrorKind::SettingMismatch);
  Word xk(9, 0);
  xk[4] = 3;
  CHECK(hamming_weight(xk) == 1);
}

TEST_CASE("ring multiplication matches the oracle") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto& p = oracle::pick(oracle::sweep(), rng);
    auto st = oracle::setting(p);
    const auto t = static_cast<std::int64_t>(rng() % st->nr());
    const auto a = oracle::random_word(st->field(), p.n, rng);
    const auto b = oracle::random_word(st->field(), p.n, rng);
    CHECK(ring_mul(*st, t, a, b) == oracle::ring_mul(st->field(), p.n, st->lambda_power(t), a, b));
  }
}

TEST_CASE("minimum distance matches enumeration of all messages") {
  std::mt19937_64 rng(8);
  int done = 0;
  while (done < 150) {
    const auto& p = oracle::pick(oracle::sweep(), rng);
    if (p.n > 16) continue;
    auto st = oracle::setting(p);
    const auto& part = st->cosets(1);
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (rng() & 1) chosen.push_back(k);
    }
    const auto code = code_from_check_set(union_of_cosets(st, 1, chosen));
    double messages = 1;
    for (std::size_t k = 0; k < code.dimension(); ++k) messages *= static_cast<double>(p.q);
    if (code.dimension() == 0 || messages > 5e4) continue;
    const auto d = min_distance(code);
    CHECK(d == Distance::of(oracle::min_weight_all_messages(st->field(), generator_rows(code))));
    ++done;
  }
}

TEST_CASE("minimum distance refuses huge message spaces") {
  auto st = CodeSetting::make(oracle::field(16), 15, 1);
  const auto whole = code_from_check_set(IndexSet::make(st, 1, st->ambient(1)));
  CHECK(kind_of([&] { min_distance(whole); }) == ErrorKind::TooLarge);
}

TEST_CASE("Ex. 1 and Ex. 2 distances") {
  auto st13 = CodeSetting::make(oracle::field(13), 14, 5);
  CHECK(min_distance(code_from_check_set(IndexSet::make(st13, 1, {25, 29, 33, 37, 41, 45}))) == Distance::of(9));
  auto f4 = oracle::field(4);
  auto st4 = CodeSetting::make(f4, 21, f4->least_of_order(3));
  const auto d = min_distance(code_from_check_set(IndexSet::make(st4, 1, {1, 4, 10, 13, 16, 19, 34, 40, 52})));
  CHECK(d.value >= 8);
  CHECK(d.value < 13);
}
