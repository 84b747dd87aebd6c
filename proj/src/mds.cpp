#include "duadic/mds.hpp"

#include <algorithm>
#include <numeric>

#include "duadic/error.hpp"

namespace duadic {

GrsPlan grs_plan(std::uint64_t q) {
  if (!prime_power(q)) throw Error(ErrorKind::BadQ, std::to_string(q) + " is not a prime power");
  if (q < 5 || nu2(q - 1) < 2) throw Error(ErrorKind::BadQ, "q - 1 must be divisible by 4, got q = " + std::to_string(q));
  GrsPlan plan;
  plan.q = q;
  plan.n = q + 1;
  plan.n_half = plan.n / 2;
  plan.r = std::uint64_t{1} << nu2(q - 1);
  plan.r_odd = (q - 1) / plan.r;
  plan.s = 1 + plan.r * plan.n_half;
  plan.z = (plan.n_half + plan.r_odd) / 2 + 1;
  const std::uint64_t nr = plan.n * plan.r;
  const std::uint64_t lo = (plan.n_half + plan.r_odd) / 2;
  const std::uint64_t hi = (3 * plan.n_half + plan.r_odd) / 2;
  for (std::uint64_t i = lo + 1; i < hi; ++i) plan.P.push_back((1 + plan.r * i) % nr);
  plan.P0 = {(1 + plan.r * lo) % nr, (1 + plan.r * hi) % nr};
  std::sort(plan.P.begin(), plan.P.end());
  std::sort(plan.P0.begin(), plan.P0.end());
  if (plan.r_odd % 2 != 1 || plan.P.size() != plan.n_half - 1) {
    throw Error(ErrorKind::Internal, "GRS plan invariants fail for q = " + std::to_string(q));
  }
  return plan;
}

Elem canonical_lambda(const FieldSpec& field, std::uint64_t r) { return field.least_of_order(r); }

GrsPair grs_code_pair(const GrsPlan& plan, FieldPtr field, Elem lambda) {
  if (field->order() != plan.q) throw Error(ErrorKind::SettingMismatch, "field order differs from the plan's q");
  if (lambda == 0 || field->element_order(lambda) != plan.r) {
    throw Error(ErrorKind::BadLambda, "lambda must have order " + std::to_string(plan.r));
  }
  auto setting = CodeSetting::make(std::move(field), plan.n, lambda);
  auto P = IndexSet::make(setting, 1, plan.P);
  auto sP = scaled(P, static_cast<std::int64_t>(plan.s));
  Splitting sp{setting, 1, plan.s, P, sP, SplittingKind::TypeII};
  const auto report = verify_splitting(sp);
  if (!report.ok()) throw Error(ErrorKind::Internal, "GRS splitting failed check " + report.first_failure());
  return GrsPair{sp, code_from_check_set(std::move(P)), code_from_check_set(std::move(sP))};
}

namespace {

using Vec = PrimeExtension::Vec;

std::size_t rank_over(const PrimeExtension& ext, std::vector<std::vector<Vec>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && ext.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const auto inv = ext.inverse(rows[rank][c]);
    for (auto& e : rows[rank]) e = ext.mul(e, inv);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (ext.is_zero(rows[i][c])) continue;
      const auto f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = ext.sub(rows[i][j], ext.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool grs_oracle_check(const GrsPlan& plan, const CodeSetting& setting, std::optional<std::uint64_t> z) {
  if (setting.q() != plan.q || setting.n() != plan.n || setting.r() != plan.r) {
    throw Error(ErrorKind::SettingMismatch, "setting does not match the GRS plan");
  }
  const auto& tw = setting.tower();
  const auto& ext = tw.ext();
  const std::uint64_t nr = setting.nr();
  const std::uint64_t n = plan.n;
  const std::uint64_t zz = z.value_or(plan.z);
  // c_f for f = X^k: coefficient j is theta^{-(rz+1)j} theta^{-rjk}.
  std::vector<std::vector<Vec>> words;
  for (std::uint64_t k = 0; k + 1 < plan.n_half; ++k) {
    const std::uint64_t step = (plan.r * zz + 1 + plan.r * k) % nr;
    std::vector<Vec> w;
    for (std::uint64_t j = 0; j < n; ++j) w.push_back(tw.theta_power((nr - step) % nr * j % nr));
    words.push_back(std::move(w));
  }
  std::vector<std::uint64_t> defining;
  for (const auto x : setting.ambient(1)) {
    if (!std::binary_search(plan.P.begin(), plan.P.end(), x)) defining.push_back(x);
  }
  for (const auto& w : words) {
    for (const auto e : defining) {
      const auto& root = tw.theta_power(e);
      auto v = ext.zero();
      for (std::size_t j = w.size(); j-- > 0;) v = ext.add(ext.mul(v, root), w[j]);
      if (!ext.is_zero(v)) return false;
    }
  }
  return rank_over(ext, words) == plan.P.size();
}

bool is_mds(const ConstaCode& code) {
  const auto d = min_distance(code);
  return !d.infinite && d.value == code.n() - code.dimension() + 1;
}

Distance bch_bound(const ConstaCode& code) {
  const auto& st = code.setting();
  const std::uint64_t n = st.n();
  const std::uint64_t r = st.r();
  const auto defining = complement(code.check);
  if (defining.size() == n) return Distance::infinity();
  // Position i stands for the exponent t + r i.
  std::vector<bool> in(n, false);
  const std::uint64_t t0 = code.t() % r;
  for (const auto x : defining.elems) in[((x - t0) / r) % n] = true;
  std::uint64_t best = 0;
  for (std::uint64_t c = 1; c <= std::max<std::uint64_t>(n - 1, 1); ++c) {
    if (std::gcd(c, n) != 1) continue;
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t len = 0;
      while (len < n && in[(b + c * len) % n]) ++len;
      best = std::max(best, len);
    }
  }
  return Distance::of(best + 1);
}

}  // namespace duadic
