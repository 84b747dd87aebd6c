#include <doctest.h>

#include <algorithm>

#include "duadic/error.hpp"
#include "duadic/mds.hpp"
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

}  // namespace

TEST_CASE("grs_plan examples") {
  const auto p13 = grs_plan(13);
  CHECK(p13.n == 14);
  CHECK(p13.r == 4);
  CHECK(p13.r_odd == 3);
  CHECK(p13.n_half == 7);
  CHECK(p13.s == 29);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t i = 6; i < 12; ++i) expected.push_back((1 + 4 * i) % 56);
  std::sort(expected.begin(), expected.end());
  CHECK(p13.P == expected);
  CHECK(p13.P0 == std::vector<std::uint64_t>{21, 49});

  const auto p5 = grs_plan(5);
  CHECK(p5.n == 6);
  CHECK(p5.r == 4);
  CHECK(p5.r_odd == 1);
  CHECK(p5.n_half == 3);
  CHECK(p5.s == 13);
  CHECK(p5.P == std::vector<std::uint64_t>{13, 17});

  CHECK(kind_of([] { grs_plan(7); }) == ErrorKind::BadQ);
  CHECK(kind_of([] { grs_plan(12); }) == ErrorKind::BadQ);
  CHECK(kind_of([] { grs_plan(4); }) == ErrorKind::BadQ);
}

TEST_CASE("plan invariants") {
  for (const std::uint64_t q : {5, 9, 13, 17, 25, 29, 37, 41, 49}) {
    const auto plan = grs_plan(q);
    CHECK(plan.r_odd % 2 == 1);
    CHECK(plan.P.size() == plan.n_half - 1);
    auto f = oracle::field(q);
    auto st = CodeSetting::make(f, plan.n, canonical_lambda(*f, plan.r));
    CHECK(IndexSet::make(st, 1, plan.P).size() == plan.P.size());
    CHECK(p0_set(st).elems == plan.P0);
  }
}

TEST_CASE("code pairs: parameters, splitting, oracle") {
  for (const std::uint64_t q : {5, 13, 17, 25, 29}) {
    const auto plan = grs_plan(q);
    auto f = oracle::field(q);
    const Elem lambda = canonical_lambda(*f, plan.r);
    CHECK(f->element_order(lambda) == plan.r);
    const auto pair = grs_code_pair(plan, f, lambda);
    CHECK(verify_splitting(pair.splitting).ok());
    CHECK(pair.splitting.s == plan.s);
    CHECK(pair.first.dimension() == (q - 1) / 2);
    CHECK(pair.second.dimension() == (q - 1) / 2);
    CHECK(grs_oracle_check(plan, pair.first.setting()));
    CHECK_FALSE(grs_oracle_check(plan, pair.first.setting(), plan.z + 1));
    const auto d_expected = (q + 5) / 2;
    for (const auto* c : {&pair.first, &pair.second}) {
      const auto bound = bch_bound(*c);
      CHECK(bound.value <= d_expected);
      if (q <= 13) {
        CHECK(min_distance(*c) == Distance::of(d_expected));
        CHECK(is_mds(*c));
      } else {
        // The consecutive-root bound already reaches Singleton here.
        CHECK(bound == Distance::of(d_expected));
      }
    }
  }
  auto f13 = oracle::field(13);
  CHECK(kind_of([&] { grs_code_pair(grs_plan(13), f13, 12); }) == ErrorKind::BadLambda);
}

TEST_CASE("q=5 reproduces the factorization of X^6-2") {
  const auto plan = grs_plan(5);
  auto f = oracle::field(5);
  const auto pair = grs_code_pair(plan, f, 2);
  CHECK(Poly(f, {2, 0, 1}) * pair.first.check_poly * pair.second.check_poly == Poly::binomial(f, 6, 2));
  std::vector<std::vector<Elem>> got = {pair.first.check_poly.coeffs(), pair.second.check_poly.coeffs()};
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::vector<Elem>>{{2, 1, 1}, {2, 4, 1}});
}

TEST_CASE("BCH bound is a lower bound") {
  for (const auto& p : oracle::sweep()) {
    if (p.n > 15 || p.q > 9) continue;
    auto st = oracle::setting(p);
    const auto& part = st->cosets(1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << std::min<std::size_t>(part.size(), 6)); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < part.size(); ++i) {
        if ((mask >> (i % 6)) & 1) chosen.push_back(i);
      }
      const auto code = code_from_check_set(union_of_cosets(st, 1, chosen));
      double messages = 1;
      for (std::size_t k = 0; k < code.dimension(); ++k) messages *= static_cast<double>(p.q);
      if (messages > 1e5) continue;
      CHECK(bch_bound(code).value <= min_distance(code).value);
    }
  }
}

TEST_CASE("Ex. 2 code is not MDS") {
  auto f4 = oracle::field(4);
  auto st = CodeSetting::make(f4, 21, f4->least_of_order(3));
  const auto code = code_from_check_set(IndexSet::make(st, 1, {1, 4, 10, 13, 16, 19, 34, 40, 52}));
  CHECK_FALSE(is_mds(code));
  const auto zero = code_from_check_set(IndexSet::make(st, 1, {}));
  CHECK_FALSE(is_mds(zero));
}
